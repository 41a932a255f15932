#ifndef CKC_CLOSURE_HPP
#define CKC_CLOSURE_HPP

#include <vector>

#include "ckc/angle_solver.hpp"
#include "ckc/chain.hpp"

namespace ckc {

// A configuration rotated into the canonical frame: joint 1 at the
// origin, joint n at (a_n, 0, 0), so link n closes along the x-axis.
struct ClosedConfiguration {
    JointAngles angles;          // re-extracted after rotation
    std::vector<Point3> joints;  // p_1 = origin .. p_n ~ (a_n, 0, 0)
    double residual = 0.0;       // | p_n - (a_n, 0, 0) |
};

struct ResidualReport {
    double abs = 0.0;            // | f_{n-1} - (a_n, 0, 0) |
    double rel = 0.0;            // abs / total link length
    Point3 endpoint;
    DiagonalVector diagonals;
};

// Rigidly rotate a spherical configuration so its endpoint lands on the
// positive x-axis: spin by -lambda about z, then align the polar angle
// about y, applied as one composed matrix.  The x-axis gauge (roll about
// the closing axis) is left as produced.  tol < 0 selects the default
// gate 1e-9 * max(1, total length) on | |f| - a_n |.
ClosedConfiguration close(const LinkLengths& links, const SphericalConfiguration& sc,
                          double tol = -1.0);

// Recompute the closure residual of an angle assignment from scratch.
ResidualReport verify(const LinkLengths& links, const JointAngles& angles);

// Cumulative joint positions: origin plus one prefix endpoint per link.
std::vector<Point3> joint_positions(const LinkLengths& links, const JointAngles& angles);

} // namespace ckc

#endif // CKC_CLOSURE_HPP
