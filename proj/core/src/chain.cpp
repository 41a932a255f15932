#include "ckc/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ckc {

double arg(double a, double b) {
    if (a == 0.0 && b == 0.0) {
        throw degenerate_error("arg undefined at the origin");
    }
    double t = std::atan2(b, a);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t -= two_pi;
    return t;
}

LinkLengths::LinkLengths(std::vector<double> lengths) : a_(std::move(lengths)) {
    if (a_.size() < 3) {
        throw std::invalid_argument("chain needs at least 3 links");
    }
    for (double v : a_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("link lengths must be positive and finite");
        }
        total_ += v;
        max_ = std::max(max_, v);
    }
    if (2.0 * max_ > total_) {
        throw infeasible_error("links cannot close: longest exceeds the sum of the others");
    }
}

double LinkLengths::sum_sq_prefix(int k) const {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += a_[static_cast<std::size_t>(i)] * a_[static_cast<std::size_t>(i)];
    return s;
}

JointAngles::JointAngles(std::vector<double> alpha, std::vector<double> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.size() != beta_.size()) {
        throw std::invalid_argument("alpha/beta length mismatch");
    }
    for (double& a : alpha_) a = wrap_two_pi(a);
    constexpr double pi = two_pi / 2.0;
    for (double b : beta_) {
        if (!(b >= 0.0 && b <= pi)) {
            throw std::invalid_argument("beta out of [0, pi]: " + std::to_string(b));
        }
    }
}

void PrefixAccumulator::add(double a, double alpha, double beta) {
    double sb = std::sin(beta);
    double v[3] = {a * sb * std::cos(alpha), a * sb * std::sin(alpha), a * std::cos(beta)};
    for (int i = 0; i < 3; ++i) {
        double t = sum_[i] + v[i];
        if (std::abs(sum_[i]) >= std::abs(v[i])) {
            comp_[i] += (sum_[i] - t) + v[i];
        } else {
            comp_[i] += (v[i] - t) + sum_[i];
        }
        sum_[i] = t;
    }
    ++k_;
}

ChainPrefixState PrefixAccumulator::state() const {
    return {sum_[0] + comp_[0], sum_[1] + comp_[1], sum_[2] + comp_[2], k_};
}

DiagonalVector::DiagonalVector(std::vector<double> values) : l_(std::move(values)) {
    if (l_.size() < 2) {
        throw std::invalid_argument("diagonal vector needs at least L_1 and L_{n-1}");
    }
}

DiagonalVector::DiagonalVector(const LinkLengths& links, const std::vector<double>& interior)
    : l_(static_cast<std::size_t>(links.n() - 1)) {
    if (interior.size() != l_.size() - 2) {
        throw std::invalid_argument("interior diagonal count must be n - 3");
    }
    l_.front() = links.at(1);
    std::copy(interior.begin(), interior.end(), l_.begin() + 1);
    l_.back() = links.at(links.n());
}

namespace {

void check_angle_count(const LinkLengths& links, const JointAngles& angles, int k) {
    if (k < 1 || k > angles.size()) {
        throw std::invalid_argument("prefix index out of range");
    }
    if (angles.size() > links.n() - 1) {
        throw std::invalid_argument("more joint angles than free links");
    }
}

} // namespace

Point3 endpoint_map(const LinkLengths& links, const JointAngles& angles, int k) {
    check_angle_count(links, angles, k);
    PrefixAccumulator acc;
    for (int j = 1; j <= k; ++j) {
        acc.add(links.at(j), angles.alpha(j), angles.beta(j));
    }
    return acc.state().point();
}

std::vector<ChainPrefixState> prefix_sums(const LinkLengths& links, const JointAngles& angles) {
    if (angles.size() == 0) return {};
    check_angle_count(links, angles, angles.size());
    std::vector<ChainPrefixState> out;
    out.reserve(static_cast<std::size_t>(angles.size()));
    PrefixAccumulator acc;
    for (int j = 1; j <= angles.size(); ++j) {
        acc.add(links.at(j), angles.alpha(j), angles.beta(j));
        out.push_back(acc.state());
    }
    return out;
}

double phi(const ChainPrefixState& state) {
    if (state.x == 0.0 && state.y == 0.0) {
        throw degenerate_error("phi undefined: prefix has no planar component");
    }
    return arg(state.y, state.x);
}

double psi(double alpha_k, const ChainPrefixState& prev) {
    double c = prev.c();
    double first = (c == 0.0) ? 0.0 : std::sin(alpha_k + phi(prev)) * c;
    return arg(first, prev.z);
}

DiagonalVector diagonal_lengths(const LinkLengths& links, const JointAngles& angles) {
    if (angles.size() < 2) {
        throw std::invalid_argument("need at least two joints for diagonals");
    }
    check_angle_count(links, angles, angles.size());
    std::vector<double> l(static_cast<std::size_t>(angles.size()));
    PrefixAccumulator acc;
    for (int j = 1; j <= angles.size(); ++j) {
        acc.add(links.at(j), angles.alpha(j), angles.beta(j));
        l[static_cast<std::size_t>(j - 1)] = acc.state().norm();
    }
    // |f_1| = a_1 exactly, independent of the first direction
    l.front() = links.at(1);
    return DiagonalVector(std::move(l));
}

} // namespace ckc
