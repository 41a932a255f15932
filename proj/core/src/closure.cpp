#include "ckc/closure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ckc {

namespace {

struct Mat3 {
    double m[3][3];

    Point3 apply(const Point3& p) const {
        return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
                m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
                m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
        return r;
    }
};

Mat3 rot_z(double t) {
    double c = std::cos(t), s = std::sin(t);
    return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

Mat3 rot_y(double t) {
    double c = std::cos(t), s = std::sin(t);
    return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

double clamp_unit(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }

// spherical direction angles of an edge of length a
void edge_angles(const Point3& e, double a, double& alpha, double& beta) {
    beta = std::acos(clamp_unit(e.z / a));
    alpha = (e.x == 0.0 && e.y == 0.0) ? 0.0 : arg(e.x, e.y);
}

} // namespace

ClosedConfiguration close(const LinkLengths& links, const SphericalConfiguration& sc,
                          double tol) {
    int n = links.n();
    if (sc.angles.size() != n - 1) {
        throw std::invalid_argument("configuration must fix links 1..n-1");
    }
    if (tol < 0.0) tol = 1e-9 * std::max(1.0, links.total());

    std::vector<Point3> joints = joint_positions(links, sc.angles);
    Point3 f = joints.back();
    double fn = f.norm();
    double an = links.at(n);
    if (std::abs(fn - an) > tol) {
        throw not_spherical_error("endpoint norm " + std::to_string(fn) +
                                  " does not lie on the sphere of radius " + std::to_string(an));
    }

    double lambda = std::atan2(f.y, f.x);
    double rho = std::hypot(f.x, f.y);
    double nu = std::atan2(f.z, rho);
    Mat3 r = rot_y(nu) * rot_z(-lambda);

    for (Point3& p : joints) p = r.apply(p);

    std::vector<double> alphas(static_cast<std::size_t>(n - 1));
    std::vector<double> betas(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        Point3 e = joints[static_cast<std::size_t>(j)] - joints[static_cast<std::size_t>(j - 1)];
        edge_angles(e, links.at(j), alphas[static_cast<std::size_t>(j - 1)],
                    betas[static_cast<std::size_t>(j - 1)]);
    }

    Point3 target{an, 0.0, 0.0};
    double residual = (joints.back() - target).norm();
    return ClosedConfiguration{JointAngles(std::move(alphas), std::move(betas)),
                               std::move(joints), residual};
}

ResidualReport verify(const LinkLengths& links, const JointAngles& angles) {
    int n = links.n();
    if (angles.size() != n - 1) {
        throw std::invalid_argument("configuration must fix links 1..n-1");
    }
    Point3 f = endpoint_map(links, angles, n - 1);
    Point3 target{links.at(n), 0.0, 0.0};
    double abs = (f - target).norm();
    return ResidualReport{abs, abs / links.total(), f, diagonal_lengths(links, angles)};
}

std::vector<Point3> joint_positions(const LinkLengths& links, const JointAngles& angles) {
    if (angles.size() > links.n() - 1) {
        throw std::invalid_argument("more joint angles than free links");
    }
    std::vector<Point3> out;
    out.reserve(static_cast<std::size_t>(angles.size()) + 1);
    out.push_back({0.0, 0.0, 0.0});
    PrefixAccumulator acc;
    for (int j = 1; j <= angles.size(); ++j) {
        acc.add(links.at(j), angles.alpha(j), angles.beta(j));
        out.push_back(acc.state().point());
    }
    return out;
}

} // namespace ckc
