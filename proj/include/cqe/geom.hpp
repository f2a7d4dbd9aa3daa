#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>

#include "errors.hpp"
#include "linalg.hpp"
#include "numerics.hpp"

namespace cqe {

template <class R>
struct Point {
    R x{}, y{};

    Point() = default;
    Point(R xx, R yy) : x(std::move(xx)), y(std::move(yy)) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const R& s) const { return {x * s, y * s}; }
    Point operator/(const R& s) const { return {x / s, y / s}; }
    Point operator-() const { return {-x, -y}; }
};

template <class R>
Point<R> operator*(const R& s, const Point<R>& p) { return p * s; }

template <class R>
R dot(const Point<R>& u, const Point<R>& v) { return u.x * v.x + u.y * v.y; }

template <class R>
R cross(const Point<R>& u, const Point<R>& v) { return u.x * v.y - u.y * v.x; }

template <class R>
R norm2(const Point<R>& p) { return p.x * p.x + p.y * p.y; }

template <class R>
R norm(const Point<R>& p) {
    using std::sqrt;
    return sqrt(norm2(p));
}

template <class R>
R distance(const Point<R>& p, const Point<R>& q) { return norm(q - p); }

template <class R>
Point<R> midpoint(const Point<R>& p, const Point<R>& q) {
    return {(p.x + q.x) / R(2), (p.y + q.y) / R(2)};
}

/// Homogeneous line l*x + m*y + n = 0.
template <class R>
struct Line {
    R l{}, m{}, n{};
};

template <class R>
Line<R> line_through(const Point<R>& p, const Point<R>& q) {
    Line<R> L;
    L.l = q.y - p.y;
    L.m = p.x - q.x;
    L.n = -(L.l * p.x + L.m * p.y);
    if (L.l == R(0) && L.m == R(0)) throw degenerate_error("line through equal points");
    return L;
}

template <class R>
Point<R> intersect(const Line<R>& a, const Line<R>& b) {
    const R d = a.l * b.m - b.l * a.m;
    const R sc = abs_r(a.l * b.m) + abs_r(b.l * a.m) + R(1e-300);
    if (abs_r(d) <= sc * R(1e-14))
        throw infinity_error("parallel lines");
    return {(a.m * b.n - b.m * a.n) / d, (a.n * b.l - b.n * a.l) / d};
}

template <class R>
R line_point_distance(const Line<R>& L, const Point<R>& p) {
    using std::sqrt;
    return abs_r(L.l * p.x + L.m * p.y + L.n) / sqrt(L.l * L.l + L.m * L.m);
}

template <class R>
Line<R> perpendicular_bisector(const Point<R>& p, const Point<R>& q) {
    const Point<R> mid = midpoint(p, q);
    const Point<R> d = q - p;
    Line<R> L;
    L.l = d.x;
    L.m = d.y;
    L.n = -(L.l * mid.x + L.m * mid.y);
    if (L.l == R(0) && L.m == R(0)) throw degenerate_error("bisector of equal points");
    return L;
}

template <class R>
Point<R> reflect(const Point<R>& p, const Line<R>& L) {
    const R k = (L.l * p.x + L.m * p.y + L.n) / (L.l * L.l + L.m * L.m);
    return {p.x - R(2) * L.l * k, p.y - R(2) * L.m * k};
}

template <class R>
Point<R> foot_of_perpendicular(const Point<R>& p, const Line<R>& L) {
    const R k = (L.l * p.x + L.m * p.y + L.n) / (L.l * L.l + L.m * L.m);
    return {p.x - L.l * k, p.y - L.m * k};
}

template <class R>
struct Circle {
    Point<R> center;
    R radius{};
};

template <class R>
Circle<R> circle_through(const Point<R>& A, const Point<R>& B, const Point<R>& C) {
    const R d = R(2) * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y));
    const R sc = norm2(B - A) + norm2(C - A) + R(1e-300);
    if (abs_r(d) <= sc * R(1e-14)) throw degenerate_error("collinear points for circle");
    const R a2 = norm2(A), b2 = norm2(B), c2 = norm2(C);
    Point<R> O{(a2 * (B.y - C.y) + b2 * (C.y - A.y) + c2 * (A.y - B.y)) / d,
               (a2 * (C.x - B.x) + b2 * (A.x - C.x) + c2 * (B.x - A.x)) / d};
    return {O, distance(O, A)};
}

/// Both intersection points of two circles (first has positive offset).
template <class R>
std::pair<Point<R>, Point<R>> circle_intersect(const Circle<R>& c1, const Circle<R>& c2) {
    using std::sqrt;
    const R d = distance(c1.center, c2.center);
    if (!(d > R(0))) throw degenerate_error("concentric circles");
    const R x = (d * d - c2.radius * c2.radius + c1.radius * c1.radius) / (R(2) * d);
    R h2 = c1.radius * c1.radius - x * x;
    if (h2 < -R(1e-9) * c1.radius * c1.radius)
        throw degenerate_error("circles do not intersect");
    if (h2 < R(0)) h2 = R(0);
    const R h = sqrt(h2);
    const Point<R> u = (c2.center - c1.center) / d;
    const Point<R> base = c1.center + x * u;
    const Point<R> v{-u.y, u.x};
    return {base + h * v, base - h * v};
}

// ---------------------------------------------------------------------------
// Triangle
// ---------------------------------------------------------------------------

template <class R>
struct Triangle {
    Point<R> A, B, C;
    R a{}, b{}, c{};   // a = |BC|, b = |CA|, c = |AB|
    R S{};             // twice the (absolute) area
    R SA{}, SB{}, SC{};

    Triangle(const Point<R>& pa, const Point<R>& pb, const Point<R>& pc)
        : A(pa), B(pb), C(pc) {
        a = distance(B, C);
        b = distance(C, A);
        c = distance(A, B);
        S = abs_r(cross(B - A, C - A));
        if (!(S > R(0))) throw degenerate_error("degenerate triangle");
        SA = (b * b + c * c - a * a) / R(2);
        SB = (c * c + a * a - b * b) / R(2);
        SC = (a * a + b * b - c * c) / R(2);
    }

    R angleA() const { return angle_from(SA, b * c); }
    R angleB() const { return angle_from(SB, c * a); }
    R angleC() const { return angle_from(SC, a * b); }

private:
    static R angle_from(const R& Sx, const R& prod) {
        using std::acos;
        R cosv = Sx / prod;
        if (cosv > R(1)) cosv = R(1);
        if (cosv < R(-1)) cosv = R(-1);
        return acos(cosv);
    }
};

/// Projective barycentric coordinates relative to some reference triangle.
template <class R>
struct BaryPoint {
    R u{}, v{}, w{};
};

template <class R>
Point<R> bary_to_cartesian(const BaryPoint<R>& P, const Triangle<R>& t) {
    const R s = P.u + P.v + P.w;
    const R m = abs_r(P.u) + abs_r(P.v) + abs_r(P.w);
    if (!(m > R(0))) throw domain_error("zero barycentric triple");
    if (abs_r(s) <= m * R(1e-14)) throw infinity_error("point at infinity");
    return (t.A * P.u + t.B * P.v + t.C * P.w) / s;
}

template <class R>
BaryPoint<R> cartesian_to_bary(const Point<R>& P, const Triangle<R>& t) {
    const R det = cross(t.B - t.A, t.C - t.A);
    const R v = cross(P - t.A, t.C - t.A) / det;
    const R w = cross(t.B - t.A, P - t.A) / det;
    return {R(1) - v - w, v, w};
}

/// a^2 v w + b^2 u w + c^2 u v, normalized; zero iff the point lies on the
/// circumcircle of the reference triangle.
template <class R>
R circumcircle_condition(const BaryPoint<R>& P, const Triangle<R>& t) {
    const R m = abs_r(P.u) + abs_r(P.v) + abs_r(P.w);
    if (!(m > R(0))) throw domain_error("zero barycentric triple");
    const R u = P.u / m, v = P.v / m, w = P.w / m;
    const R scale = t.a * t.a + t.b * t.b + t.c * t.c;
    return (t.a * t.a * v * w + t.b * t.b * u * w + t.c * t.c * u * v) / scale;
}

template <class R>
Point<R> orthocenter(const Point<R>& A, const Point<R>& B, const Point<R>& C) {
    const Circle<R> cc = circle_through(A, B, C);
    return A + B + C - cc.center * R(2);
}

template <class R>
Circle<R> nine_point_circle(const Triangle<R>& t) {
    return circle_through(midpoint(t.B, t.C), midpoint(t.C, t.A), midpoint(t.A, t.B));
}

// ---------------------------------------------------------------------------
// Quad
// ---------------------------------------------------------------------------

/// Four points in cyclic order.  Central quadrilaterals may be non-convex.
template <class R>
struct Quad {
    std::array<Point<R>, 4> P;

    const Point<R>& operator[](int i) const { return P[std::size_t(i)]; }
    Point<R>& operator[](int i) { return P[std::size_t(i)]; }

    R side(int i) const { return distance(P[std::size_t(i)], P[std::size_t((i + 1) % 4)]); }
    R diag_p() const { return distance(P[0], P[2]); }
    R diag_q() const { return distance(P[1], P[3]); }
};

template <class R>
R polygon_area_signed(const Quad<R>& q) {
    R s(0);
    for (int i = 0; i < 4; ++i) {
        const auto& p = q[i];
        const auto& r = q[(i + 1) % 4];
        s += p.x * r.y - r.x * p.y;
    }
    return s / R(2);
}

template <class R>
R polygon_area(const Quad<R>& q) { return abs_r(polygon_area_signed(q)); }

template <class R>
R perimeter(const Quad<R>& q) {
    return q.side(0) + q.side(1) + q.side(2) + q.side(3);
}

template <class R>
bool is_convex(const Quad<R>& q) {
    int sign = 0;
    for (int i = 0; i < 4; ++i) {
        const Point<R> u = q[(i + 1) % 4] - q[i];
        const Point<R> v = q[(i + 2) % 4] - q[(i + 1) % 4];
        const R cr = cross(u, v);
        if (cr == R(0)) return false;
        const int s = cr > R(0) ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

template <class R>
bool is_simple(const Quad<R>& q) {
    auto orient = [](const Point<R>& a, const Point<R>& b, const Point<R>& c) {
        const R v = cross(b - a, c - a);
        return v > R(0) ? 1 : (v < R(0) ? -1 : 0);
    };
    auto hits = [&](int i1, int i2, int j1, int j2) {
        const int o1 = orient(q[i1], q[i2], q[j1]);
        const int o2 = orient(q[i1], q[i2], q[j2]);
        const int o3 = orient(q[j1], q[j2], q[i1]);
        const int o4 = orient(q[j1], q[j2], q[i2]);
        return o1 != o2 && o3 != o4;
    };
    return !(hits(0, 1, 2, 3) || hits(1, 2, 3, 0));
}

template <class R>
Point<R> quad_scale_center(const Quad<R>& q) {
    return (q[0] + q[1] + q[2] + q[3]) / R(4);
}

/// Diameter proxy: max vertex distance from the vertex centroid.
template <class R>
R quad_scale(const Quad<R>& q) {
    const Point<R> m = quad_scale_center(q);
    R best(0);
    for (int i = 0; i < 4; ++i) best = std::max<R>(best, distance(q[i], m));
    return best * R(2);
}

// ---------------------------------------------------------------------------
// Conics
// ---------------------------------------------------------------------------

/// alpha x^2 + beta xy + gamma y^2 + delta x + eps y + zeta = 0, with the
/// coefficient vector normalized to unit length.
template <class R>
struct Conic {
    std::array<R, 6> k{};  // alpha, beta, gamma, delta, eps, zeta

    R eval(const Point<R>& p) const {
        return k[0] * p.x * p.x + k[1] * p.x * p.y + k[2] * p.y * p.y +
               k[3] * p.x + k[4] * p.y + k[5];
    }
};

namespace detail {
template <class R>
std::array<R, 6> conic_row(const Point<R>& p) {
    return {p.x * p.x, p.x * p.y, p.y * p.y, p.x, p.y, R(1)};
}
} // namespace detail

/// Unique conic through five points, as the null vector of the 5x6 incidence
/// matrix (smallest singular vector of A^T A).  Degenerate position is
/// reported when the two smallest singular values collide.
template <class R>
Conic<R> conic_through(const std::array<Point<R>, 5>& pts,
                       const Tolerance& tol = {}) {
    using std::sqrt;
    std::array<std::array<R, 6>, 6> ata{};
    for (const auto& p : pts) {
        const auto row = detail::conic_row(p);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) ata[std::size_t(i)][std::size_t(j)] += row[std::size_t(i)] * row[std::size_t(j)];
    }
    const auto eig = jacobi_eigen<R, 6>(ata);
    const R s0 = sqrt(abs_r(eig.values[0]));
    const R s1 = sqrt(abs_r(eig.values[1]));
    if (abs_r(s1 - s0) <= R(tol.rel_eps) * (s1 + R(1e-300)))
        throw degenerate_error("degenerate point configuration for conic");
    Conic<R> c;
    R nn(0);
    for (int i = 0; i < 6; ++i) nn += eig.vectors[0][std::size_t(i)] * eig.vectors[0][std::size_t(i)];
    nn = sqrt(nn);
    for (int i = 0; i < 6; ++i) c.k[std::size_t(i)] = eig.vectors[0][std::size_t(i)] / nn;
    return c;
}

template <class R>
bool conic_is_circle(const Conic<R>& c, double eps = 1e-9) {
    return abs_r(c.k[0] - c.k[2]) <= R(eps) && abs_r(c.k[1]) <= R(eps);
}

template <class R>
bool is_rectangular_hyperbola(const Conic<R>& c, const Tolerance& tol = {}) {
    const R disc = c.k[1] * c.k[1] - R(4) * c.k[0] * c.k[2];
    const R qn = abs_r(c.k[0]) + abs_r(c.k[1]) + abs_r(c.k[2]);
    if (!(qn > R(0))) throw degenerate_error("conic without quadratic part");
    return abs_r(c.k[0] + c.k[2]) <= R(tol.rel_eps) * R(10) * qn && disc > R(0);
}

template <class R>
Point<R> conic_center(const Conic<R>& c, const Tolerance& tol = {}) {
    const R det = R(4) * c.k[0] * c.k[2] - c.k[1] * c.k[1];
    const R qn = abs_r(c.k[0]) + abs_r(c.k[1]) + abs_r(c.k[2]);
    if (abs_r(det) <= R(tol.rel_eps) * qn * qn)
        throw degenerate_error("parabola has no center");
    return {(c.k[1] * c.k[4] - R(2) * c.k[2] * c.k[3]) / det,
            (c.k[1] * c.k[3] - R(2) * c.k[0] * c.k[4]) / det};
}

} // namespace cqe
