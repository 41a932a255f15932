#ifndef CKC_ANGLE_SOLVER_HPP
#define CKC_ANGLE_SOLVER_HPP

#include <array>
#include <vector>

#include "ckc/chain.hpp"
#include "ckc/diagonal_space.hpp"
#include "ckc/rng.hpp"

namespace ckc {

// Shape of the solution set of one joint step: all directions for link k
// that carry a prefix of norm L_{k-1} to norm L_k.  Every non-degenerate
// case is a circle on the unit direction sphere.
enum class SolutionCase {
    FullSphere,       // prefix at the origin, any direction works
    EquatorCircle,    // right angle, prefix along z: free azimuth at beta = pi/2
    LongitudeCircle,  // right angle, prefix in the xy-plane: two azimuths, free beta
    SkewGreatCircle,  // right angle, tilted prefix: free azimuth, beta from Psi
    LatitudeCircle,   // generic triangle, prefix along z: free azimuth, fixed beta
    GenericCircle     // generic triangle: restricted azimuth, beta from the sine equation
};

const char* to_string(SolutionCase c);

// Circular arc [start, start + length) on the azimuth circle, mod 2pi.
struct AlphaArc {
    double start = 0.0;
    double length = 0.0;
};

struct SolveOptions {
    // case classification scale; coordinate gates use scale * max(1, L_k),
    // the rhs gate uses scale * max(1, L_k^2)
    double case_eps_scale = 1e-10;
    // |prev| must match L_{k-1} within prefix_tol * max(1, total length)
    double prefix_tol = 1e-9;
    // membership slack applied by reconstruct to its input diagonals
    double membership_eps_scale = 1e-12;
};

// One joint step's solution set, with enough context to evaluate beta
// for any admissible alpha.
struct AngleSolutionSet {
    SolutionCase kind = SolutionCase::FullSphere;
    int k = 0;               // joint index
    double a = 0.0;          // link length a_k
    double l_prev = 0.0;     // target |f_{k-1}|
    double l_k = 0.0;        // target |f_k|
    ChainPrefixState prev;   // accumulated prefix, norm == l_prev
    double rhs = 0.0;        // L_k^2 - a_k^2 - L_{k-1}^2

    double phi = 0.0;        // azimuth phase of prev (valid unless prefix is on the z-axis)
    bool phi_valid = false;

    double d = 0.0;          // azimuth discriminant (GenericCircle)
    double beta0 = 0.0;      // fixed inclination (LatitudeCircle)

    // admissible azimuth arcs (GenericCircle); other circle cases admit
    // the full circle, LongitudeCircle admits exactly two azimuths
    std::array<AlphaArc, 2> arcs{};
    int arc_count = 0;
    std::array<double, 2> longitude_alpha{};

    double alpha_measure() const;          // total admissible azimuth length
    bool alpha_admissible(double alpha, double tol = 1e-12) const;
};

struct JointSample {
    double alpha = 0.0;
    double beta = 0.0;
    bool double_hit = false;   // both sine branches landed in [0, pi]
};

// Azimuth discriminant
//   D_k = ((L_k^2 - a_k^2 - L_{k-1}^2)^2 - 4 a_k^2 Z^2) / (4 a_k^2 (X^2 + Y^2)).
// sin^2(alpha + Phi) >= D_k characterizes admissible azimuths.  Requires
// X^2 + Y^2 > 0.
double d_k(const LinkLengths& links, int k, const ChainPrefixState& prev,
           double l_prev, double l_k);

// Classify and solve one joint step.  prev must hold exactly k-1 links
// and its norm must agree with l_prev; (l_prev, a_k, l_k) must satisfy
// the triangle bounds of a feasible diagonal pair.
AngleSolutionSet solve_joint(const LinkLengths& links, int k, const ChainPrefixState& prev,
                             double l_prev, double l_k, const SolveOptions& opts = {});

// Inclination for a given admissible azimuth, for the cases where beta
// is a function of alpha (Equator, Skew, Latitude, Generic).
JointSample beta_for_alpha(const AngleSolutionSet& set, double alpha);

// Draw one (alpha, beta) uniformly over the azimuth parameter of the set.
JointSample sample_from_solution(const AngleSolutionSet& set, SeededRng& rng);

struct FirstJoint {
    double alpha = 0.0;
    double beta = 1.5707963267948966;   // pi/2
};

// A spherical configuration: n-1 joint angles realizing a feasible
// diagonal vector, with |f_{n-1}| = a_n up to the stated residual.
struct SphericalConfiguration {
    JointAngles angles;
    DiagonalVector diagonals;
    std::vector<SolutionCase> cases;   // per joint k = 2..n-1
    double residual = 0.0;             // | |f_{n-1}| - a_n |
    long double_hits = 0;
};

// Walk joints 2..n-1, drawing each (alpha_k, beta_k) from its solution
// set, so that every prefix realizes the prescribed diagonal.  Input
// diagonals must pass membership.
SphericalConfiguration reconstruct(const LinkLengths& links, const DiagonalVector& diagonals,
                                   SeededRng& rng, const FirstJoint& first = {},
                                   const SolveOptions& opts = {});

} // namespace ckc

#endif // CKC_ANGLE_SOLVER_HPP
