#include "ckc/permute.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ckc/diagonal_space.hpp"

namespace ckc {

LinkPermutation::LinkPermutation(std::vector<int> images) : sigma_(std::move(images)) {
    int n = static_cast<int>(sigma_.size());
    if (n < 3) throw std::invalid_argument("permutation needs at least 3 positions");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : sigma_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

LinkPermutation LinkPermutation::inverse() const {
    std::vector<int> inv(sigma_.size());
    for (int i = 1; i <= n(); ++i) {
        inv[static_cast<std::size_t>(at(i) - 1)] = i;
    }
    return LinkPermutation(std::move(inv));
}

LinkPermutation LinkPermutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return LinkPermutation(std::move(v));
}

ClosingJoint closing_joint(const LinkLengths& links, const JointAngles& angles, double tol) {
    int n = links.n();
    if (angles.size() != n - 1) {
        throw std::invalid_argument("configuration must fix links 1..n-1");
    }
    if (tol < 0.0) tol = 1e-9 * std::max(1.0, links.total());
    Point3 f = endpoint_map(links, angles, n - 1);
    double fn = f.norm();
    if (std::abs(fn - links.at(n)) > tol) {
        throw not_spherical_error("endpoint norm " + std::to_string(fn) +
                                  " does not lie on the sphere of radius " +
                                  std::to_string(links.at(n)));
    }
    Point3 u = f * (-1.0 / fn);
    double uz = u.z < -1.0 ? -1.0 : (u.z > 1.0 ? 1.0 : u.z);
    ClosingJoint cj;
    cj.beta = std::acos(uz);
    cj.alpha = (u.x == 0.0 && u.y == 0.0) ? 0.0 : arg(u.x, u.y);
    return cj;
}

MappedDiagonals map_diagonals(const LinkLengths& links, const LinkPermutation& sigma,
                              const DiagonalVector& l, std::uint64_t seed) {
    int n = links.n();
    if (sigma.n() != n) throw std::invalid_argument("permutation size mismatch");

    SeededRng rng(seed);
    SphericalConfiguration sc = reconstruct(links, l, rng);
    ClosingJoint cj = closing_joint(links, sc.angles);

    std::vector<double> pa(static_cast<std::size_t>(n));
    std::vector<double> pl(static_cast<std::size_t>(n));
    std::vector<double> pb(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int src = sigma.at(i);
        pl[static_cast<std::size_t>(i - 1)] = links.at(src);
        if (src <= n - 1) {
            pa[static_cast<std::size_t>(i - 1)] = sc.angles.alpha(src);
            pb[static_cast<std::size_t>(i - 1)] = sc.angles.beta(src);
        } else {
            pa[static_cast<std::size_t>(i - 1)] = cj.alpha;
            pb[static_cast<std::size_t>(i - 1)] = cj.beta;
        }
    }

    LinkLengths permuted(std::move(pl));

    // prefix norms of the permuted chain become its diagonals
    PrefixAccumulator acc;
    std::vector<double> interior(static_cast<std::size_t>(n - 3));
    double last = 0.0;
    for (int j = 1; j <= n - 1; ++j) {
        acc.add(permuted.at(j), pa[static_cast<std::size_t>(j - 1)],
                pb[static_cast<std::size_t>(j - 1)]);
        double norm = acc.state().norm();
        if (j >= 2 && j <= n - 2) interior[static_cast<std::size_t>(j - 2)] = norm;
        if (j == n - 1) last = norm;
    }
    double gate = 1e-9 * std::max(1.0, permuted.total());
    if (std::abs(last - permuted.at(n)) > gate) {
        throw std::logic_error("permuted prefix does not close onto link n");
    }

    DiagonalVector mapped(permuted, interior);
    if (!membership_zan_stein(permuted, mapped, 1e-12 * permuted.total())) {
        throw std::logic_error("transported diagonals failed membership");
    }

    pa.pop_back();
    pb.pop_back();
    return MappedDiagonals{std::move(permuted),
                           JointAngles(std::move(pa), std::move(pb)),
                           std::move(mapped), seed};
}

} // namespace ckc
