#include "ckc/cube_param.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ckc/rng.hpp"

namespace ckc {

namespace {

void check_count(int n, std::size_t got) {
    if (n < 4) throw std::invalid_argument("shifted coordinates need n >= 4");
    if (got != static_cast<std::size_t>(n - 3)) {
        throw std::invalid_argument("expected n - 3 coordinates");
    }
}

} // namespace

UVector::UVector(int n, std::vector<double> values) : n_(n), u_(std::move(values)) {
    check_count(n_, u_.size());
}

CubePoint::CubePoint(int n, std::vector<double> values) : n_(n), s_(std::move(values)) {
    check_count(n_, s_.size());
    for (double v : s_) {
        if (!(v >= -1.0 && v <= 1.0)) {
            throw std::invalid_argument("cube coordinate out of [-1, 1]");
        }
    }
}

LongLinkCheck has_three_long_links(const LinkLengths& links, bool weak) {
    int n = links.n();
    LongLinkCheck out;
    out.half_total = links.total() / 2.0;
    // three largest by length, ties resolved to the earliest index
    std::array<int, 3> top{0, 0, 0};
    std::array<double, 3> val{-1.0, -1.0, -1.0};
    for (int i = 1; i <= n; ++i) {
        double a = links.at(i);
        for (int t = 0; t < 3; ++t) {
            if (a > val[static_cast<std::size_t>(t)]) {
                for (int m = 2; m > t; --m) {
                    val[static_cast<std::size_t>(m)] = val[static_cast<std::size_t>(m - 1)];
                    top[static_cast<std::size_t>(m)] = top[static_cast<std::size_t>(m - 1)];
                }
                val[static_cast<std::size_t>(t)] = a;
                top[static_cast<std::size_t>(t)] = i;
                break;
            }
        }
    }
    out.indices = top;
    // the two smallest of the trio decide every pairwise sum
    double worst = val[1] + val[2];
    out.ok = weak ? (worst >= out.half_total) : (worst > out.half_total);
    return out;
}

double t_bound(const LinkLengths& links, int k, const UVector& u) {
    int n = links.n();
    if (u.n() != n) throw std::invalid_argument("coordinate count mismatch");
    if (k < 1 || k > n - 3) throw std::invalid_argument("bound step out of range");
    double rad = 0.0;
    for (int j = n - k; j <= n - 2; ++j) rad += u.at(j);
    for (int j = n - k + 1; j <= n; ++j) rad += links.at(j) * links.at(j);
    if (rad < 0.0) rad = 0.0;
    return 2.0 * links.at(n - k) * std::sqrt(rad);
}

UVector to_u(const LinkLengths& links, const DiagonalVector& l) {
    int n = links.n();
    if (l.n() != n) throw std::invalid_argument("diagonal vector size mismatch");
    std::vector<double> u(static_cast<std::size_t>(n - 3));
    for (int k = 2; k <= n - 2; ++k) {
        double lk = l.at(k);
        double lk1 = l.at(k + 1);
        double a = links.at(k + 1);
        u[static_cast<std::size_t>(k - 2)] = lk * lk - a * a - lk1 * lk1;
    }
    return UVector(n, std::move(u));
}

DiagonalVector from_u(const LinkLengths& links, const UVector& u) {
    int n = links.n();
    if (u.n() != n) throw std::invalid_argument("coordinate count mismatch");
    double clamp = 1e-12 * links.total() * links.total();
    std::vector<double> interior(static_cast<std::size_t>(n - 3));
    double next_sq = links.at(n) * links.at(n);
    for (int k = n - 2; k >= 2; --k) {
        double a = links.at(k + 1);
        double rad = u.at(k) + a * a + next_sq;
        if (rad < -clamp) {
            throw infeasible_error("negative squared diagonal at L_" + std::to_string(k));
        }
        if (rad < 0.0) rad = 0.0;
        interior[static_cast<std::size_t>(k - 2)] = std::sqrt(rad);
        next_sq = rad;
    }
    return DiagonalVector(links, interior);
}

UVector gamma(const LinkLengths& links, const CubePoint& s, bool force) {
    int n = links.n();
    if (s.n() != n) throw std::invalid_argument("coordinate count mismatch");
    if (!force && !has_three_long_links(links).ok) {
        throw infeasible_error("chain lacks three long links");
    }
    std::vector<double> u(static_cast<std::size_t>(n - 3));
    double v = links.at(n) * links.at(n);   // running L_{k+1}^2
    for (int k = n - 2; k >= 2; --k) {
        double a = links.at(k + 1);
        double t = 2.0 * a * std::sqrt(v < 0.0 ? 0.0 : v);
        double uk = s.at(k) * t;
        u[static_cast<std::size_t>(k - 2)] = uk;
        v = uk + a * a + v;
        if (v < 0.0) v = 0.0;   // exact arithmetic keeps v >= (sqrt(v_prev) - a)^2
    }
    return UVector(n, std::move(u));
}

CubePoint gamma_inverse(const LinkLengths& links, const UVector& u) {
    int n = links.n();
    if (u.n() != n) throw std::invalid_argument("coordinate count mismatch");
    double zero_tol = 1e-14 * std::max(1.0, links.total() * links.total());
    std::vector<double> s(static_cast<std::size_t>(n - 3));
    double v = links.at(n) * links.at(n);
    for (int k = n - 2; k >= 2; --k) {
        double a = links.at(k + 1);
        double t = 2.0 * a * std::sqrt(v < 0.0 ? 0.0 : v);
        if (t <= zero_tol) {
            throw degenerate_error("vanishing coupling bound at index " + std::to_string(k));
        }
        double sk = u.at(k) / t;
        if (sk < -1.0 - 1e-8 || sk > 1.0 + 1e-8) {
            throw infeasible_error("coordinate outside its bound at index " + std::to_string(k));
        }
        s[static_cast<std::size_t>(k - 2)] = sk < -1.0 ? -1.0 : (sk > 1.0 ? 1.0 : sk);
        v = u.at(k) + a * a + v;
        if (v < 0.0) v = 0.0;
    }
    return CubePoint(n, std::move(s));
}

ContainmentReport containment_check(const LinkLengths& links, long samples, std::uint64_t seed) {
    if (samples <= 0) throw std::invalid_argument("sample count must be positive");
    if (!has_three_long_links(links).ok) {
        throw infeasible_error("chain lacks three long links");
    }
    int n = links.n();
    Decomposition d(links);
    SeededRng rng(seed);
    double eps = 1e-12 * links.total();
    ContainmentReport rep;
    rep.samples = samples;
    std::vector<double> interior(static_cast<std::size_t>(n - 3));
    for (long i = 0; i < samples; ++i) {
        // walk the nested intervals alone, ignoring the cuboid
        Interval iv = d.p_first();
        double prev = rng.uniform(iv.lo, iv.hi);
        interior[static_cast<std::size_t>(n - 4)] = prev;
        for (int k = n - 3; k >= 2; --k) {
            Interval nxt = d.p_interval(k, prev);
            prev = rng.uniform(nxt.lo, nxt.hi);
            interior[static_cast<std::size_t>(k - 2)] = prev;
        }
        DiagonalVector v(links, interior);
        if (!d.contains_q(v, eps)) ++rep.violations;
    }
    return rep;
}

} // namespace ckc
