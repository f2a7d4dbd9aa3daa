#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include "errors.hpp"

namespace cqe {

/// Comparison policy shared by all detectors.  Scenes are normalized to
/// diameter ~1-10, so the absolute floor is meaningful.
struct Tolerance {
    double rel_eps = 1e-9;      ///< relative tolerance for detections
    double abs_eps = 1e-11;     ///< absolute floor in scene units
    double confirm_eps = 1e-10; ///< tighter second-pass tolerance

    constexpr bool valid() const {
        return abs_eps > 0 && confirm_eps > 0 && confirm_eps <= rel_eps && rel_eps < 1;
    }
};

inline bool approx_eq(double x, double y, const Tolerance& tol = {}) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw domain_error("approx_eq: non-finite input");
    const double m = std::max(std::fabs(x), std::fabs(y));
    return std::fabs(x - y) <= std::max(tol.abs_eps, tol.rel_eps * m);
}

/// A recognized small rational, optionally the square of another one.
struct SmallRational {
    long long num = 0;
    long long den = 1;
    /// set when the value was recognized as (p/q)^2
    std::optional<std::pair<long long, long long>> is_square_of;

    double value() const { return double(num) / double(den); }
    bool operator==(const SmallRational& o) const {
        return num == o.num && den == o.den;
    }
};

namespace detail {

/// Best rational p/q with q <= max_den via continued fractions.
inline std::optional<std::pair<long long, long long>>
rational_approx(double x, long long max_den, double eps_rel) {
    if (!(x > 0) || !std::isfinite(x)) return std::nullopt;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(v);
        if (fa > 9e17) break;
        const long long a = static_cast<long long>(fa);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = v - fa;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    const double err = std::fabs(x - double(p1) / double(q1));
    if (err <= eps_rel * x) return std::make_pair(p1, q1);
    return std::nullopt;
}

} // namespace detail

/// Recognize x as p/q with q <= max_den, else as (p/q)^2 with q <= max_sqrt_den.
/// Uses the confirm tolerance: the reconstruction never differs from x by more
/// than confirm_eps * x.
inline std::optional<SmallRational>
recognize_ratio(double x, long long max_den, long long max_sqrt_den,
                const Tolerance& tol = {}) {
    if (!(x > 0)) return std::nullopt;
    if (auto pq = detail::rational_approx(x, max_den, tol.confirm_eps)) {
        return SmallRational{pq->first, pq->second, std::nullopt};
    }
    if (auto pq = detail::rational_approx(std::sqrt(x), max_sqrt_den,
                                          0.5 * tol.confirm_eps)) {
        SmallRational r;
        r.num = pq->first * pq->first;
        r.den = pq->second * pq->second;
        r.is_square_of = *pq;
        const double err = std::fabs(x - r.value());
        if (err <= tol.confirm_eps * x) return r;
    }
    return std::nullopt;
}

} // namespace cqe
