#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <string>

#include "expr.hpp"
#include "geom.hpp"
#include "rng.hpp"

namespace cqe {

enum class CoordKind { trilinear, barycentric };

/// A parsed center function f(a,b,c).  Coordinates come from the three cyclic
/// substitutions; trilinear output is scaled by (a,b,c) to give barycentrics.
class CenterFunction {
public:
    CenterFunction() = default;
    CenterFunction(ast::NodePtr e, CoordKind kind) : expr_(std::move(e)), kind_(kind) {}

    CenterFunction(const CenterFunction& o)
        : expr_(o.expr_ ? ast::clone(*o.expr_) : nullptr),
          kind_(o.kind_), k_(o.k_), degree_(o.degree_) {}
    CenterFunction& operator=(const CenterFunction& o) {
        if (this != &o) {
            expr_ = o.expr_ ? ast::clone(*o.expr_) : nullptr;
            kind_ = o.kind_;
            k_ = o.k_;
            degree_ = o.degree_;
        }
        return *this;
    }
    CenterFunction(CenterFunction&&) = default;
    CenterFunction& operator=(CenterFunction&&) = default;

    static CenterFunction parse(std::string_view src, CoordKind kind) {
        return CenterFunction(ExprParser::parse(src), kind);
    }

    CoordKind kind() const { return kind_; }
    const ast::Node& expr() const { return *expr_; }
    std::string text() const { return print_expr(*expr_); }

    /// Bind the free family parameter.
    void bind(double k) { k_ = k; }
    std::optional<double> bound() const { return k_; }

    std::optional<int> homogeneity_degree() const { return degree_; }
    void set_homogeneity_degree(int d) { degree_ = d; }

    template <class R>
    R raw(const R& a, const R& b, const R& c, const R& A, const R& B, const R& C,
          const R& S, const R& SA, const R& SB, const R& SC) const {
        ExprEnv<R> env;
        env.a = a; env.b = b; env.c = c;
        env.A = A; env.B = B; env.C = C;
        env.S = S; env.SA = SA; env.SB = SB; env.SC = SC;
        if (k_) { env.k = R(*k_); env.has_k = true; }
        return eval_expr(*expr_, env);
    }

    /// Homogeneous coordinates of the center in the given triangle
    /// (always barycentric on output).
    template <class R>
    BaryPoint<R> coordinates(const Triangle<R>& t) const {
        const R A = t.angleA(), B = t.angleB(), C = t.angleC();
        R x = raw(t.a, t.b, t.c, A, B, C, t.S, t.SA, t.SB, t.SC);
        R y = raw(t.b, t.c, t.a, B, C, A, t.S, t.SB, t.SC, t.SA);
        R z = raw(t.c, t.a, t.b, C, A, B, t.S, t.SC, t.SA, t.SB);
        if (kind_ == CoordKind::trilinear) {
            x *= t.a; y *= t.b; z *= t.c;
        }
        check_finite(x); check_finite(y); check_finite(z);
        const R m = abs_r(x) + abs_r(y) + abs_r(z);
        if (!(m > R(0))) throw undefined_center("zero coordinate triple");
        return {x / m, y / m, z / m};
    }

    template <class R>
    Point<R> evaluate(const Triangle<R>& t) const {
        return bary_to_cartesian(coordinates(t), t);
    }

private:
    template <class R>
    static void check_finite(const R& v) {
        using std::isfinite;
        if (!isfinite(double(v))) throw undefined_center("non-finite coordinate");
    }

    ast::NodePtr expr_;
    CoordKind kind_ = CoordKind::barycentric;
    std::optional<double> k_;
    std::optional<int> degree_;
};

namespace detail {

inline Triangle<double> random_valid_triangle(Rng& rng) {
    for (;;) {
        const Point<double> A{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point<double> B{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point<double> C{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        try {
            Triangle<double> t(A, B, C);
            const double mn = std::min({t.angleA(), t.angleB(), t.angleC()});
            if (mn > 0.25) return t;
        } catch (const degenerate_error&) {
        }
    }
}

} // namespace detail

struct ValidationReport {
    bool symmetric = false;
    bool homogeneous = false;
    std::optional<int> degree;
    std::string failure;

    bool ok() const { return symmetric && homogeneous; }
};

/// Numeric validation: f(a,b,c) == f(a,c,b) and f(ta,tb,tc)/f(a,b,c) constant,
/// each on `trials` seeded random triangles.
inline ValidationReport validate_center(const CenterFunction& f, int trials = 32,
                                        std::uint64_t seed = 0x5eedULL) {
    ValidationReport rep;
    Rng rng(seed);
    rep.symmetric = true;
    rep.homogeneous = true;
    std::optional<double> common_deg;
    int degree_votes = 0;
    for (int i = 0; i < trials; ++i) {
        Triangle<double> t = detail::random_valid_triangle(rng);
        const double A = t.angleA(), B = t.angleB(), C = t.angleC();
        double v0, vswap;
        try {
            v0 = f.raw(t.a, t.b, t.c, A, B, C, t.S, t.SA, t.SB, t.SC);
            vswap = f.raw(t.a, t.c, t.b, A, C, B, t.S, t.SA, t.SC, t.SB);
        } catch (const undefined_center&) {
            continue;  // undefined at this triangle; try another sample
        }
        const double m = std::max(std::fabs(v0), std::fabs(vswap));
        if (m > 0 && std::fabs(v0 - vswap) > 1e-8 * m) {
            rep.symmetric = false;
            rep.failure = "not symmetric in b,c";
            break;
        }
        // homogeneity: scale by 2 (angles unchanged, S by 4, sides by 2)
        try {
            const double v2 = f.raw(2 * t.a, 2 * t.b, 2 * t.c, A, B, C,
                                    4 * t.S, 4 * t.SA, 4 * t.SB, 4 * t.SC);
            if (std::fabs(v0) > 1e-12 && std::fabs(v2) > 1e-300) {
                const double d = std::log2(std::fabs(v2 / v0));
                if (!common_deg) common_deg = d;
                else if (std::fabs(*common_deg - d) > 1e-6) {
                    rep.homogeneous = false;
                    rep.failure = "not homogeneous";
                    break;
                }
                ++degree_votes;
            }
        } catch (const undefined_center&) {
        }
    }
    if (rep.homogeneous && common_deg && degree_votes >= 4) {
        const double d = *common_deg;
        if (std::fabs(d - std::round(d)) < 1e-6)
            rep.degree = int(std::lround(d));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// parametric families and notable non-centers
// ---------------------------------------------------------------------------

enum class Family { power, cos_euler, harmonic_line };

/// Build the family member with parameter k bound.
///  - power:        f(a,b,c) = a^k            (trilinear)
///  - cos_euler:    cos B cos C + k cos A     (trilinear)
///  - harmonic_line a*(k*(a^2-b^2-c^2) - S)   (trilinear)
inline CenterFunction family(Family which, double k) {
    CenterFunction f = [&] {
        switch (which) {
            case Family::power:
                return CenterFunction::parse("a^k", CoordKind::trilinear);
            case Family::cos_euler:
                return CenterFunction::parse("cos(B)*cos(C) + k*cos(A)",
                                             CoordKind::trilinear);
            case Family::harmonic_line:
                return CenterFunction::parse("a*(k*(a^2-b^2-c^2) - S)",
                                             CoordKind::trilinear);
        }
        throw domain_error("bad family");
    }();
    if (!std::isfinite(k)) throw domain_error("family parameter must be finite");
    f.bind(k);
    return f;
}

inline std::optional<Family> family_by_name(std::string_view name) {
    if (name == "power") return Family::power;
    if (name == "cos_euler") return Family::cos_euler;
    if (name == "harmonic_line") return Family::harmonic_line;
    return std::nullopt;
}

/// First Brocard point, barycentric (a^2 c^2 : a^2 b^2 : b^2 c^2).
/// Not a triangle center (not symmetric in b and c).
template <class R>
Point<R> brocard_point_first(const Triangle<R>& t) {
    const R a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
    return bary_to_cartesian<R>({a2 * c2, a2 * b2, b2 * c2}, t);
}

} // namespace cqe
