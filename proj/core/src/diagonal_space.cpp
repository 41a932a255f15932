#include "ckc/diagonal_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ckc {

ReachBounds::ReachBounds(const LinkLengths& links) : n_(links.n()) {
    rmin_.resize(static_cast<std::size_t>(n_));
    rmax_.resize(static_cast<std::size_t>(n_));
    double sum = 0.0;
    double maxlen = 0.0;
    for (int k = 1; k <= n_; ++k) {
        sum += links.at(k);
        maxlen = std::max(maxlen, links.at(k));
        rmax_[static_cast<std::size_t>(k - 1)] = sum;
        rmin_[static_cast<std::size_t>(k - 1)] = 2.0 * maxlen - sum;
    }
}

namespace {

void check_step(const LinkLengths& links, int k) {
    if (k < 1 || k > links.n() - 3) {
        throw std::invalid_argument("backward step index out of range");
    }
}

Interval step_interval(const LinkLengths& links, const ReachBounds& rb, double l_prev, int k) {
    int n = links.n();
    double a = links.at(n - k);
    Interval tri{std::abs(l_prev - a), l_prev + a};
    Interval box = rb.cuboid(n - k - 1);
    Interval out{std::max(tri.lo, box.lo), std::min(tri.hi, box.hi)};
    if (out.empty()) {
        throw infeasible_error("empty feasible interval for L_" + std::to_string(n - k - 1));
    }
    return out;
}

} // namespace

Interval interval_at_step(const LinkLengths& links, const DiagonalVector& partial, int k) {
    check_step(links, k);
    if (partial.n() != links.n()) {
        throw std::invalid_argument("diagonal vector size mismatch");
    }
    ReachBounds rb(links);
    return step_interval(links, rb, partial.at(links.n() - k), k);
}

namespace {

bool endpoints_ok(const LinkLengths& links, const DiagonalVector& l, double eps) {
    return std::abs(l.at(1) - links.at(1)) <= eps &&
           std::abs(l.at(links.n() - 1) - links.at(links.n())) <= eps;
}

} // namespace

bool membership_zan_stein(const LinkLengths& links, const DiagonalVector& l, double eps) {
    int n = links.n();
    if (l.n() != n) throw std::invalid_argument("diagonal vector size mismatch");
    if (!endpoints_ok(links, l, eps)) return false;
    for (int k = 3; k <= n - 1; ++k) {
        double lk = l.at(k);
        double ak = links.at(k);
        double lo = std::abs(lk - ak);
        if (l.at(k - 1) < lo - eps || l.at(k - 1) > lk + ak + eps) return false;
    }
    ReachBounds rb(links);
    for (int k = 2; k <= n - 1; ++k) {
        if (!rb.cuboid(k).contains(l.at(k), eps)) return false;
    }
    return true;
}

bool membership_li_han(const LinkLengths& links, const DiagonalVector& l, double eps) {
    int n = links.n();
    if (l.n() != n) throw std::invalid_argument("diagonal vector size mismatch");
    if (!endpoints_ok(links, l, eps)) return false;
    for (int k = 2; k <= n - 1; ++k) {
        double prev = l.at(k - 1);
        double ak = links.at(k);
        double lk = l.at(k);
        if (lk < std::abs(prev - ak) - eps || lk > prev + ak + eps) return false;
        if (ak > lk + prev + eps) return false;
    }
    return true;
}

Decomposition::Decomposition(const LinkLengths& links) : n_(links.n()) {
    if (n_ < 4) {
        throw std::invalid_argument("diagonal space needs n >= 4");
    }
    double an = links.at(n_);
    double am = links.at(n_ - 1);
    p_first_ = {std::abs(an - am), an + am};
    offsets_.resize(static_cast<std::size_t>(n_));
    for (int k = 2; k <= n_ - 3; ++k) {
        offsets_[static_cast<std::size_t>(k)] = links.at(k + 1);
    }
    ReachBounds rb(links);
    q_.resize(static_cast<std::size_t>(n_));
    q_raw_.resize(static_cast<std::size_t>(n_));
    for (int k = 2; k <= n_ - 2; ++k) {
        q_[static_cast<std::size_t>(k)] = rb.cuboid(k);
        q_raw_[static_cast<std::size_t>(k)] = {rb.r_min(k), rb.r_max(k)};
    }
}

double Decomposition::p_offset_link(int k) const {
    if (k < 2 || k > n_ - 3) throw std::invalid_argument("nested row index out of range");
    return offsets_[static_cast<std::size_t>(k)];
}

Interval Decomposition::p_interval(int k, double l_next) const {
    double a = p_offset_link(k);
    return {std::abs(l_next - a), l_next + a};
}

Interval Decomposition::q(int k) const {
    if (k < 2 || k > n_ - 2) throw std::invalid_argument("cuboid index out of range");
    return q_[static_cast<std::size_t>(k)];
}

Interval Decomposition::q_raw(int k) const {
    if (k < 2 || k > n_ - 2) throw std::invalid_argument("cuboid index out of range");
    return q_raw_[static_cast<std::size_t>(k)];
}

bool Decomposition::contains_p(const DiagonalVector& l, double eps) const {
    if (l.n() != n_) throw std::invalid_argument("diagonal vector size mismatch");
    if (!p_first_.contains(l.at(n_ - 2), eps)) return false;
    for (int k = n_ - 3; k >= 2; --k) {
        if (!p_interval(k, l.at(k + 1)).contains(l.at(k), eps)) return false;
    }
    return true;
}

bool Decomposition::contains_q(const DiagonalVector& l, double eps) const {
    if (l.n() != n_) throw std::invalid_argument("diagonal vector size mismatch");
    for (int k = 2; k <= n_ - 2; ++k) {
        if (!q_[static_cast<std::size_t>(k)].contains(l.at(k), eps)) return false;
    }
    return true;
}

Decomposition decompose(const LinkLengths& links) { return Decomposition(links); }

DiagonalVector sample_diagonals(const LinkLengths& links, SeededRng& rng) {
    int n = links.n();
    std::vector<double> l(static_cast<std::size_t>(n - 1));
    l.front() = links.at(1);
    l.back() = links.at(n);
    ReachBounds rb(links);
    double prev = links.at(n);
    for (int k = 1; k <= n - 3; ++k) {
        Interval iv = step_interval(links, rb, prev, k);
        double v = rng.uniform(iv.lo, iv.hi);
        l[static_cast<std::size_t>(n - k - 2)] = v;
        prev = v;
    }
    return DiagonalVector(std::move(l));
}

AreaEstimate mc_area5(const LinkLengths& links, long points, std::uint64_t seed) {
    if (links.n() != 5) {
        throw std::invalid_argument("area estimate defined for five-link chains only");
    }
    if (points <= 0) {
        throw std::invalid_argument("point count must be positive");
    }
    Decomposition d(links);
    Interval bx = d.p_first();   // L_3
    Interval by = d.q(2);        // L_2
    {
        Interval q3 = d.q(3);
        bx = {std::max(bx.lo, q3.lo), std::min(bx.hi, q3.hi)};
    }
    SeededRng rng(seed);
    long hits = 0;
    DiagonalVector v(links, {0.0, 0.0});
    for (long i = 0; i < points; ++i) {
        double l3 = rng.uniform(bx.lo, bx.hi);
        double l2 = rng.uniform(by.lo, by.hi);
        v.set(2, l2);
        v.set(3, l3);
        if (d.contains_p(v) && d.contains_q(v)) ++hits;
    }
    AreaEstimate est;
    est.box_area = bx.width() * by.width();
    est.hits = hits;
    est.points = points;
    double p = static_cast<double>(hits) / static_cast<double>(points);
    est.area = p * est.box_area;
    est.std_error = est.box_area * std::sqrt(p * (1.0 - p) / static_cast<double>(points));
    return est;
}

} // namespace ckc
