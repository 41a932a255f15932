#ifndef CKC_PERMUTE_HPP
#define CKC_PERMUTE_HPP

#include <cstdint>
#include <vector>

#include "ckc/angle_solver.hpp"
#include "ckc/chain.hpp"

namespace ckc {

// Permutation of link positions, 1-based images.  sigma.at(i) = j means
// position i of the permuted chain takes link j of the original.
class LinkPermutation {
public:
    explicit LinkPermutation(std::vector<int> images);

    int n() const { return static_cast<int>(sigma_.size()); }
    int at(int i) const { return sigma_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return sigma_; }

    LinkPermutation inverse() const;
    static LinkPermutation identity(int n);

private:
    std::vector<int> sigma_;
};

struct ClosingJoint {
    double alpha = 0.0;
    double beta = 0.0;
};

// Direction angles of link n for a spherical configuration: the unit
// vector pointing from the endpoint back to the origin.  Appending it
// drives the full n-link sum to zero up to the closure residual.
ClosingJoint closing_joint(const LinkLengths& links, const JointAngles& angles,
                           double tol = -1.0);

struct MappedDiagonals {
    LinkLengths permuted_links;
    JointAngles permuted_angles;   // n - 1 joints of the permuted chain
    DiagonalVector diagonals;      // feasible for permuted_links
    std::uint64_t seed = 0;
};

// Transport a feasible diagonal vector to the reindexed chain: realize
// it as angles (seeded), append the closing joint, permute the
// (link, direction) pairs, and read off the new prefix norms.  The
// output diagonals always pass membership for the permuted chain.
MappedDiagonals map_diagonals(const LinkLengths& links, const LinkPermutation& sigma,
                              const DiagonalVector& l, std::uint64_t seed);

} // namespace ckc

#endif // CKC_PERMUTE_HPP
