#ifndef CKC_DIAGONAL_SPACE_HPP
#define CKC_DIAGONAL_SPACE_HPP

#include <vector>

#include "ckc/chain.hpp"
#include "ckc/rng.hpp"

namespace ckc {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool empty() const { return hi < lo; }
    bool contains(double v, double eps = 0.0) const { return v >= lo - eps && v <= hi + eps; }
};

// Reach bounds per diagonal index k:
//   r_max(k) = a_1 + ... + a_k          (full extension)
//   r_min(k) = max_{i<=k} (2 a_i - r_max(k))   (fold-back excess, may be < 0)
// The usable lower bound is max(0, r_min(k)).
class ReachBounds {
public:
    explicit ReachBounds(const LinkLengths& links);

    int n() const { return n_; }
    double r_min(int k) const { return rmin_[static_cast<std::size_t>(k - 1)]; }
    double r_max(int k) const { return rmax_[static_cast<std::size_t>(k - 1)]; }
    double r_min_clamped(int k) const { double v = r_min(k); return v < 0.0 ? 0.0 : v; }
    Interval cuboid(int k) const { return {r_min_clamped(k), r_max(k)}; }

private:
    int n_ = 0;
    std::vector<double> rmin_;
    std::vector<double> rmax_;
};

// Feasible interval for the next diagonal in the backward walk.  Step k
// (1-based, k <= n-3) chooses L_{n-k-1} given L_{n-k}:
//   [ |L_{n-k} - a_{n-k}| , L_{n-k} + a_{n-k} ]  intersect  cuboid(n-k-1).
// `partial` must carry L_{n-1} = a_n and all previously chosen entries
// down to L_{n-k}.  Throws infeasible_error if the intersection is empty
// (cannot happen when the previous entries were themselves feasible).
Interval interval_at_step(const LinkLengths& links, const DiagonalVector& partial, int k);

// Membership tests for the diagonal space, two equivalent inequality
// systems.  eps >= 0 loosens every comparison; keep 0 for exact points
// and about 1e-12 * total length for values recomputed from angles.
bool membership_zan_stein(const LinkLengths& links, const DiagonalVector& l, double eps = 0.0);
bool membership_li_han(const LinkLengths& links, const DiagonalVector& l, double eps = 0.0);

// The diagonal space as the intersection of a nested-interval polytope P
// with the reach cuboid Q.  P is triangular data: the topmost variable
// diagonal L_{n-2} has a concrete interval, every lower index k gets
//   L_k in [ |L_{k+1} - a_{k+1}| , L_{k+1} + a_{k+1} ].
class Decomposition {
public:
    Decomposition(const LinkLengths& links);

    int n() const { return n_; }

    // concrete interval for L_{n-2}
    Interval p_first() const { return p_first_; }
    // link length a_{k+1} coupling L_k to L_{k+1}, for k = 2..n-3
    double p_offset_link(int k) const;
    // nested-interval row evaluated at a value of L_{k+1}
    Interval p_interval(int k, double l_next) const;

    // cuboid factor for L_k, k = 2..n-2, lower bound clamped at 0
    Interval q(int k) const;
    // same with the raw, possibly negative lower bound
    Interval q_raw(int k) const;

    bool contains_p(const DiagonalVector& l, double eps = 0.0) const;
    bool contains_q(const DiagonalVector& l, double eps = 0.0) const;

private:
    int n_ = 0;
    Interval p_first_;
    std::vector<double> offsets_;   // a_{k+1} for k = 2..n-2
    std::vector<Interval> q_;       // clamped, k = 2..n-2
    std::vector<Interval> q_raw_;   // unclamped
};

Decomposition decompose(const LinkLengths& links);

// Draw one uniformly-by-step diagonal vector: walk k = 1..n-3 backward,
// choosing L_{n-k-1} uniformly in its feasible interval.  Output always
// passes membership with eps = 0.
DiagonalVector sample_diagonals(const LinkLengths& links, SeededRng& rng);

// Monte-Carlo area of the diagonal space of a five-link chain (the only
// case where the free coordinates form a planar region).  Points are
// drawn from the bounding box p_first x q(2).
struct AreaEstimate {
    double area = 0.0;
    double std_error = 0.0;
    double box_area = 0.0;
    long hits = 0;
    long points = 0;
};

AreaEstimate mc_area5(const LinkLengths& links, long points, std::uint64_t seed);

} // namespace ckc

#endif // CKC_DIAGONAL_SPACE_HPP
