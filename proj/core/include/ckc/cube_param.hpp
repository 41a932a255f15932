#ifndef CKC_CUBE_PARAM_HPP
#define CKC_CUBE_PARAM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ckc/chain.hpp"
#include "ckc/diagonal_space.hpp"

namespace ckc {

// Shifted coordinates U_k = L_k^2 - a_{k+1}^2 - L_{k+1}^2 for the
// variable diagonals k = 2..n-2, 1-based like DiagonalVector.
class UVector {
public:
    UVector(int n, std::vector<double> values);

    int n() const { return n_; }
    double at(int k) const { return u_[static_cast<std::size_t>(k - 2)]; }
    void set(int k, double v) { u_[static_cast<std::size_t>(k - 2)] = v; }
    const std::vector<double>& values() const { return u_; }

private:
    int n_ = 0;
    std::vector<double> u_;   // U_2 .. U_{n-2}
};

// A point of the parameter cube [-1, 1]^{n-3}, coordinates s_2..s_{n-2}.
class CubePoint {
public:
    CubePoint(int n, std::vector<double> values);

    int n() const { return n_; }
    double at(int k) const { return s_[static_cast<std::size_t>(k - 2)]; }
    const std::vector<double>& values() const { return s_; }

private:
    int n_ = 0;
    std::vector<double> s_;
};

struct LongLinkCheck {
    bool ok = false;
    std::array<int, 3> indices{};   // positions of the three longest links
    double half_total = 0.0;
};

// Whether the three longest links pairwise sum above half the total
// length.  weak = true relaxes the comparison to >=.
LongLinkCheck has_three_long_links(const LinkLengths& links, bool weak = false);

// Coupling bound for the backward step k = 1..n-3:
//   T_{n-k} = 2 a_{n-k} sqrt( sum_{j=n-k}^{n-2} U_j + sum_{j=n-k+1}^{n} a_j^2 ).
// The radicand telescopes to L_{n-k}^2, so it is nonnegative for any U
// with |U_j| within its own bound.
double t_bound(const LinkLengths& links, int k, const UVector& u);

// Coordinate changes between diagonals and shifted coordinates.
UVector to_u(const LinkLengths& links, const DiagonalVector& l);
// from_u clamps radicands above -1e-12 * (total length)^2 and throws
// infeasible_error below that.
DiagonalVector from_u(const LinkLengths& links, const UVector& u);

// Cube parametrization: U_{n-k-1} = s_{n-k-1} * T_{n-k}, applied outer
// to inner.  Requires the three-long-link hypothesis unless force is
// set; the image always satisfies |U_k| <= T bound, and lands inside
// the diagonal space when the links are additionally sorted descending.
UVector gamma(const LinkLengths& links, const CubePoint& s, bool force = false);

// Inverse map s_k = U_k / T_k.  Throws degenerate_error when a bound
// vanishes along the recursion.
CubePoint gamma_inverse(const LinkLengths& links, const UVector& u);

struct ContainmentReport {
    long violations = 0;
    long samples = 0;
};

// Sample the nested-interval polytope alone and count points that fall
// outside the reach cuboid.  Zero for descending-ordered chains with
// three long links; positive counts witness that unordered chains need
// the permutation transport.  Refuses chains without three long links.
ContainmentReport containment_check(const LinkLengths& links, long samples, std::uint64_t seed);

} // namespace ckc

#endif // CKC_CUBE_PARAM_HPP
