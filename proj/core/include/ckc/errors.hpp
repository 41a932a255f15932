#ifndef CKC_ERRORS_HPP
#define CKC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ckc {

// Geometric data admits no solution (empty interval, violated triangle
// bound, non-closable link multiset).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation hit a removable singularity of its parametrization
// (arg(0,0), azimuth of a zero planar component, vanishing bound).
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// Angle data fed to a closure step does not return to sphere radius a_n.
class not_spherical_error : public std::runtime_error {
public:
    explicit not_spherical_error(const std::string& what) : std::runtime_error(what) {}
};

// Prefix state handed to a solve step disagrees with the diagonal it
// is supposed to realize.
class inconsistent_prefix_error : public std::runtime_error {
public:
    explicit inconsistent_prefix_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ckc

#endif // CKC_ERRORS_HPP
