#include "ckc/angle_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ckc {

namespace {

constexpr double pi = two_pi / 2.0;

// grace applied to dimensionless feasibility ratios before declaring
// the data infeasible
constexpr double ratio_slack = 1e-8;

// acceptance window for inclination candidates at the ends of [0, pi]
constexpr double beta_edge_tol = 1e-9;

double clamp_unit(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }

} // namespace

const char* to_string(SolutionCase c) {
    switch (c) {
        case SolutionCase::FullSphere: return "full_sphere";
        case SolutionCase::EquatorCircle: return "equator";
        case SolutionCase::LongitudeCircle: return "longitude";
        case SolutionCase::SkewGreatCircle: return "skew_great";
        case SolutionCase::LatitudeCircle: return "latitude";
        case SolutionCase::GenericCircle: return "generic";
    }
    return "?";
}

double AngleSolutionSet::alpha_measure() const {
    switch (kind) {
        case SolutionCase::LongitudeCircle: return 0.0;
        case SolutionCase::GenericCircle: {
            double t = 0.0;
            for (int i = 0; i < arc_count; ++i) t += arcs[static_cast<std::size_t>(i)].length;
            return t;
        }
        default: return two_pi;
    }
}

bool AngleSolutionSet::alpha_admissible(double alpha, double tol) const {
    double a0 = wrap_two_pi(alpha);
    switch (kind) {
        case SolutionCase::LongitudeCircle: {
            for (double v : longitude_alpha) {
                double d0 = std::abs(wrap_two_pi(a0 - v));
                if (d0 <= tol || two_pi - d0 <= tol) return true;
            }
            return false;
        }
        case SolutionCase::GenericCircle: {
            for (int i = 0; i < arc_count; ++i) {
                const AlphaArc& arc = arcs[static_cast<std::size_t>(i)];
                double off = wrap_two_pi(a0 - arc.start);
                if (off <= arc.length + tol || off >= two_pi - tol) return true;
            }
            return false;
        }
        default: return true;
    }
}

double d_k(const LinkLengths& links, int k, const ChainPrefixState& prev,
           double l_prev, double l_k) {
    if (k < 2 || k > links.n() - 1) {
        throw std::invalid_argument("joint index out of range");
    }
    double a = links.at(k);
    double xy2 = prev.x * prev.x + prev.y * prev.y;
    if (xy2 <= 0.0) {
        throw degenerate_error("azimuth discriminant undefined without planar component");
    }
    double rhs = l_k * l_k - a * a - l_prev * l_prev;
    return (rhs * rhs - 4.0 * a * a * prev.z * prev.z) / (4.0 * a * a * xy2);
}

AngleSolutionSet solve_joint(const LinkLengths& links, int k, const ChainPrefixState& prev,
                             double l_prev, double l_k, const SolveOptions& opts) {
    int n = links.n();
    if (k < 2 || k > n - 1) {
        throw std::invalid_argument("joint index out of range");
    }
    if (prev.k != k - 1) {
        throw std::invalid_argument("prefix state holds " + std::to_string(prev.k) +
                                    " links, expected " + std::to_string(k - 1));
    }
    double prefix_gate = opts.prefix_tol * std::max(1.0, links.total());
    if (std::abs(prev.norm() - l_prev) > prefix_gate) {
        throw inconsistent_prefix_error("prefix norm " + std::to_string(prev.norm()) +
                                        " does not realize L_" + std::to_string(k - 1) +
                                        " = " + std::to_string(l_prev));
    }

    AngleSolutionSet set;
    set.k = k;
    set.a = links.at(k);
    set.l_prev = l_prev;
    set.l_k = l_k;
    set.prev = prev;

    double xy2 = prev.x * prev.x + prev.y * prev.y;
    double z2 = prev.z * prev.z;
    double rhs = l_k * l_k - set.a * set.a - l_prev * l_prev;
    set.rhs = rhs;

    // coordinate gates scale with length, the rhs gate with squared length
    double eps_len = opts.case_eps_scale * std::max(1.0, l_k);
    double eps2 = eps_len * eps_len;
    double eps_sq = opts.case_eps_scale * std::max(1.0, l_k * l_k);

    if (xy2 > eps2) {
        set.phi = phi(prev);
        set.phi_valid = true;
    }

    if (xy2 + z2 <= eps2) {
        set.kind = SolutionCase::FullSphere;
        return set;
    }

    if (std::abs(rhs) <= eps_sq) {
        // right angle between link k and the prefix
        if (xy2 <= eps2 && z2 <= eps2) {
            set.kind = SolutionCase::FullSphere;
        } else if (xy2 <= eps2) {
            set.kind = SolutionCase::EquatorCircle;
        } else if (z2 <= eps2) {
            set.kind = SolutionCase::LongitudeCircle;
            set.longitude_alpha = {wrap_two_pi(-set.phi), wrap_two_pi(pi - set.phi)};
        } else {
            set.kind = SolutionCase::SkewGreatCircle;
        }
        return set;
    }

    if (xy2 <= eps2) {
        // prefix sits on the z-axis; inclination is pinned by the plane cut
        double ratio = rhs / (2.0 * set.a * prev.z);
        if (std::abs(ratio) > 1.0 + ratio_slack) {
            throw infeasible_error("diagonal pair unreachable at joint " + std::to_string(k));
        }
        set.kind = SolutionCase::LatitudeCircle;
        set.beta0 = std::acos(clamp_unit(ratio));
        return set;
    }

    set.kind = SolutionCase::GenericCircle;
    set.d = (rhs * rhs - 4.0 * set.a * set.a * z2) / (4.0 * set.a * set.a * xy2);
    if (set.d > 1.0 + ratio_slack) {
        throw infeasible_error("diagonal pair unreachable at joint " + std::to_string(k));
    }
    double t = std::sqrt(std::max(set.d, 0.0));
    t = std::min(t, 1.0);
    double s0 = std::asin(t);                  // in [0, pi/2]
    double len = pi - 2.0 * s0;
    if (t > 0.0) {
        // beta in [0, pi] keeps sin(beta) nonnegative, so along the solution
        // circle sin(alpha + phi) carries the sign of rhs; the mirrored half
        // of the sine preimage never produces a valid inclination
        double start = set.rhs > 0.0 ? s0 : pi + s0;
        set.arcs[0] = {wrap_two_pi(start - set.phi), len};
        set.arc_count = 1;
    } else {
        set.arcs[0] = {wrap_two_pi(s0 - set.phi), len};
        set.arcs[1] = {wrap_two_pi(pi + s0 - set.phi), len};
        set.arc_count = 2;
    }
    return set;
}

namespace {

JointSample beta_from_sine(const AngleSolutionSet& set, double alpha) {
    // solve sin(beta + Psi) = rhs / (2 a sqrt(bracket)) for beta in [0, pi]
    double s = std::sin(alpha + set.phi);
    double c = set.prev.c();
    double bracket = s * s * c * c + set.prev.z * set.prev.z;
    double denom = 2.0 * set.a * std::sqrt(bracket);
    double r = set.rhs / denom;
    if (std::abs(r) > 1.0 + ratio_slack) {
        throw infeasible_error("azimuth outside the admissible range at joint " +
                               std::to_string(set.k));
    }
    r = clamp_unit(r);
    double psi_k = arg(s * c, set.prev.z);
    double theta = std::asin(r);

    double cand[2] = {wrap_two_pi(theta - psi_k), wrap_two_pi(pi - theta - psi_k)};
    double valid[2];
    int count = 0;
    for (double b : cand) {
        if (b >= two_pi - beta_edge_tol) b = 0.0;
        if (b <= pi + beta_edge_tol) {
            valid[count++] = std::min(b, pi);
        }
    }
    if (count == 0) {
        throw infeasible_error("no inclination solution at joint " + std::to_string(set.k));
    }
    JointSample out;
    out.alpha = wrap_two_pi(alpha);
    if (count == 2 && std::abs(valid[0] - valid[1]) > 1e-12) {
        out.beta = std::min(valid[0], valid[1]);
        out.double_hit = true;
    } else {
        out.beta = valid[0];
    }
    return out;
}

} // namespace

JointSample beta_for_alpha(const AngleSolutionSet& set, double alpha) {
    switch (set.kind) {
        case SolutionCase::EquatorCircle:
            return {wrap_two_pi(alpha), pi / 2.0, false};
        case SolutionCase::SkewGreatCircle: {
            double psi_k = psi(alpha, set.prev);
            double beta = psi_k <= pi ? pi - psi_k : two_pi - psi_k;
            return {wrap_two_pi(alpha), beta, false};
        }
        case SolutionCase::LatitudeCircle:
            return {wrap_two_pi(alpha), set.beta0, false};
        case SolutionCase::GenericCircle:
            return beta_from_sine(set, alpha);
        default:
            throw std::invalid_argument("inclination is not a function of azimuth for this case");
    }
}

JointSample sample_from_solution(const AngleSolutionSet& set, SeededRng& rng) {
    switch (set.kind) {
        case SolutionCase::FullSphere:
            return {rng.uniform01() * two_pi, rng.uniform01() * pi, false};
        case SolutionCase::LongitudeCircle: {
            double alpha = set.longitude_alpha[rng.below(2)];
            return {alpha, rng.uniform01() * pi, false};
        }
        case SolutionCase::EquatorCircle:
        case SolutionCase::SkewGreatCircle:
        case SolutionCase::LatitudeCircle:
            return beta_for_alpha(set, rng.uniform01() * two_pi);
        case SolutionCase::GenericCircle: {
            double total = set.alpha_measure();
            double alpha;
            if (total <= 0.0) {
                int pick = set.arc_count > 1 ? static_cast<int>(rng.below(
                               static_cast<std::uint64_t>(set.arc_count)))
                                             : 0;
                alpha = set.arcs[static_cast<std::size_t>(pick)].start;
            } else {
                double u = rng.uniform01() * total;
                alpha = set.arcs[0].start + u;
                if (set.arc_count > 1 && u >= set.arcs[0].length) {
                    alpha = set.arcs[1].start + (u - set.arcs[0].length);
                }
                alpha = wrap_two_pi(alpha);
            }
            return beta_from_sine(set, alpha);
        }
    }
    throw std::logic_error("unreachable");
}

SphericalConfiguration reconstruct(const LinkLengths& links, const DiagonalVector& diagonals,
                                   SeededRng& rng, const FirstJoint& first,
                                   const SolveOptions& opts) {
    int n = links.n();
    if (diagonals.n() != n) {
        throw std::invalid_argument("diagonal vector size mismatch");
    }
    double eps = opts.membership_eps_scale * links.total();
    if (!membership_zan_stein(links, diagonals, eps)) {
        throw infeasible_error("diagonals outside the feasible space");
    }

    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<SolutionCase> cases;
    alphas.reserve(static_cast<std::size_t>(n - 1));
    betas.reserve(static_cast<std::size_t>(n - 1));
    cases.reserve(static_cast<std::size_t>(n - 2));

    alphas.push_back(wrap_two_pi(first.alpha));
    betas.push_back(first.beta);

    PrefixAccumulator acc;
    acc.add(links.at(1), alphas[0], betas[0]);

    long double_hits = 0;
    for (int k = 2; k <= n - 1; ++k) {
        AngleSolutionSet set = solve_joint(links, k, acc.state(),
                                           diagonals.at(k - 1), diagonals.at(k), opts);
        JointSample js = sample_from_solution(set, rng);
        alphas.push_back(js.alpha);
        betas.push_back(js.beta);
        cases.push_back(set.kind);
        if (js.double_hit) ++double_hits;
        acc.add(links.at(k), js.alpha, js.beta);
    }

    double residual = std::abs(acc.state().norm() - links.at(n));
    return SphericalConfiguration{JointAngles(std::move(alphas), std::move(betas)),
                                  diagonals, std::move(cases), residual, double_hits};
}

} // namespace ckc
