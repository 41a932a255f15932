#ifndef CKC_CHAIN_HPP
#define CKC_CHAIN_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "ckc/errors.hpp"

namespace ckc {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Reduce an angle to [0, 2pi).
inline double wrap_two_pi(double x) {
    double y = std::fmod(x, two_pi);
    if (y < 0.0) y += two_pi;
    if (y >= two_pi) y -= two_pi;
    return y;
}

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Point3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Oriented angle of the point (a, b) measured from the positive x-axis,
// in [0, 2pi).  Satisfies  a*sin x + b*cos x = hypot(a,b) * sin(x + arg(a,b)).
// Throws degenerate_error at the origin.
double arg(double a, double b);

// Link lengths a_1..a_n of a closed chain.  All positive, n >= 3, and
// closable: 2*max_i a_i <= sum_i a_i.  Indexing is 1-based to match the
// geometric numbering of links.
class LinkLengths {
public:
    explicit LinkLengths(std::vector<double> lengths);

    int n() const { return static_cast<int>(a_.size()); }
    double at(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<double>& values() const { return a_; }

    double total() const { return total_; }
    double max_length() const { return max_; }

    // sum of squares a_1^2 + ... + a_k^2
    double sum_sq_prefix(int k) const;

private:
    std::vector<double> a_;
    double total_ = 0.0;
    double max_ = 0.0;
};

// Spherical joint angles (alpha_j, beta_j) for links 1..m of a chain.
// alpha is azimuth, reduced mod 2pi into [0, 2pi) on construction.
// beta is inclination from +z and must already lie in [0, pi]; values
// outside are rejected, not reflected.
class JointAngles {
public:
    JointAngles(std::vector<double> alpha, std::vector<double> beta);

    int size() const { return static_cast<int>(alpha_.size()); }
    double alpha(int j) const { return alpha_[static_cast<std::size_t>(j - 1)]; }
    double beta(int j) const { return beta_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<double>& alphas() const { return alpha_; }
    const std::vector<double>& betas() const { return beta_; }

private:
    std::vector<double> alpha_;
    std::vector<double> beta_;
};

// Running component sums (X, Y, Z) of the first k link vectors.
struct ChainPrefixState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    int k = 0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    // planar magnitude hypot(X, Y)
    double c() const { return std::hypot(x, y); }
    Point3 point() const { return {x, y, z}; }
};

// Neumaier-compensated accumulation of link vectors.  Keeps the endpoint
// map stable at 1e6-link scale.
class PrefixAccumulator {
public:
    // append link of length a at direction (alpha, beta)
    void add(double a, double alpha, double beta);

    ChainPrefixState state() const;
    int size() const { return k_; }

private:
    double sum_[3] = {0.0, 0.0, 0.0};
    double comp_[3] = {0.0, 0.0, 0.0};
    int k_ = 0;
};

// Diagonal lengths L_1..L_{n-1} of an n-link chain, 1-based.  For
// feasibility work L_1 = a_1 and L_{n-1} = a_n are fixed; the interior
// entries L_2..L_{n-2} are the free coordinates.
class DiagonalVector {
public:
    // all diagonals given explicitly, L_1 first
    explicit DiagonalVector(std::vector<double> values);

    // endpoints fixed from the links, interior L_2..L_{n-2} supplied
    DiagonalVector(const LinkLengths& links, const std::vector<double>& interior);

    int n() const { return static_cast<int>(l_.size()) + 1; }
    double at(int k) const { return l_[static_cast<std::size_t>(k - 1)]; }
    void set(int k, double v) { l_[static_cast<std::size_t>(k - 1)] = v; }
    const std::vector<double>& values() const { return l_; }

private:
    std::vector<double> l_;
};

// Partial sum of the first k link vectors,
//   f_k = sum_{j<=k} a_j (sin b_j cos a_j, sin b_j sin a_j, cos b_j),
// with compensated summation per component.  Requires k <= angles.size()
// <= n - 1.
Point3 endpoint_map(const LinkLengths& links, const JointAngles& angles, int k);

// All prefix states 1..angles.size() in one pass.
std::vector<ChainPrefixState> prefix_sums(const LinkLengths& links, const JointAngles& angles);

// Azimuth phase Phi of a prefix state: arg(Y, X).  Phi satisfies
//   X cos t + Y sin t = hypot(X,Y) * sin(t + Phi).
// Requires X^2 + Y^2 > 0.
double phi(const ChainPrefixState& state);

// Inclination phase Psi for angle alpha_k against the previous prefix:
//   arg(sin(alpha_k + Phi) * hypot(X,Y), Z).
// Collapses the full joint equation to a single shifted sine in beta_k.
// Requires the pair to be nonzero.
double psi(double alpha_k, const ChainPrefixState& prev);

// Diagonals L_k = |f_k| for k = 1..angles.size().  L_1 equals a_1
// identically; the last entry equals a_n only for configurations that
// close back onto the sphere of link n.
DiagonalVector diagonal_lengths(const LinkLengths& links, const JointAngles& angles);

} // namespace ckc

#endif // CKC_CHAIN_HPP
