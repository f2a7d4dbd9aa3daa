#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "center.hpp"
#include "geom.hpp"

namespace cqe {

/// Quadrilateral / quadrangle centers from the study's checklist.
enum class QuadCenterKind {
    vertex_centroid,  // QA-P1, "m"
    poncelet,         // QA-P2, "ponce"
    steiner,          // QA-P3, "stein"
    diagonal_point,   // QG-P1, "dp"
    anticenter,       // cyclic only, "anti"
    circumcenter_q,   // cyclic only, "o"
    centrocenter,     // QA-P7, cyclic only, "centro"
    orthocenter_q,    // cyclic only, "h"
    incenter_q,       // tangential only, "i"
};

inline constexpr std::array<QuadCenterKind, 9> all_quad_center_kinds = {
    QuadCenterKind::vertex_centroid, QuadCenterKind::poncelet, QuadCenterKind::steiner,
    QuadCenterKind::diagonal_point, QuadCenterKind::anticenter, QuadCenterKind::circumcenter_q,
    QuadCenterKind::centrocenter, QuadCenterKind::orthocenter_q, QuadCenterKind::incenter_q};

inline std::string_view symbol(QuadCenterKind k) {
    switch (k) {
        case QuadCenterKind::vertex_centroid: return "m";
        case QuadCenterKind::poncelet: return "ponce";
        case QuadCenterKind::steiner: return "stein";
        case QuadCenterKind::diagonal_point: return "dp";
        case QuadCenterKind::anticenter: return "anti";
        case QuadCenterKind::circumcenter_q: return "o";
        case QuadCenterKind::centrocenter: return "centro";
        case QuadCenterKind::orthocenter_q: return "h";
        case QuadCenterKind::incenter_q: return "i";
    }
    return "?";
}

inline bool requires_cyclic(QuadCenterKind k) {
    return k == QuadCenterKind::anticenter || k == QuadCenterKind::circumcenter_q ||
           k == QuadCenterKind::centrocenter || k == QuadCenterKind::orthocenter_q;
}

inline bool requires_tangential(QuadCenterKind k) {
    return k == QuadCenterKind::incenter_q;
}

/// The four half triangles in the fixed order (BCD, ACD, ABD, ABC):
/// triangle i is opposite vertex i of the quadrilateral.
template <class R>
std::array<Triangle<R>, 4> half_triangles(const Quad<R>& q) {
    return {Triangle<R>(q[1], q[2], q[3]), Triangle<R>(q[0], q[2], q[3]),
            Triangle<R>(q[0], q[1], q[3]), Triangle<R>(q[0], q[1], q[2])};
}

/// Central quadrilateral EFGH: the same center taken in each half triangle.
/// Throws undefined_center / infinity_error when the center does not exist at
/// one of the half triangles; the miner skips such samples.
template <class R>
Quad<R> central_quad(const Quad<R>& q, const CenterFunction& f) {
    const auto ts = half_triangles(q);
    Quad<R> e;
    for (int i = 0; i < 4; ++i) e[i] = f.template evaluate<R>(ts[std::size_t(i)]);
    return e;
}

template <class R>
Quad<R> central_quad_brocard(const Quad<R>& q) {
    const auto ts = half_triangles(q);
    Quad<R> e;
    for (int i = 0; i < 4; ++i) e[i] = brocard_point_first(ts[std::size_t(i)]);
    return e;
}

// ---------------------------------------------------------------------------
// shape capabilities at tolerance
// ---------------------------------------------------------------------------

template <class R>
bool quad_is_cyclic(const Quad<R>& q, const Tolerance& tol = {}) {
    try {
        const Circle<R> c = circle_through(q[0], q[1], q[2]);
        return double(abs_r(distance(q[3], c.center) - c.radius)) <=
               tol.rel_eps * double(c.radius) * 10;
    } catch (const degenerate_error&) {
        return false;
    }
}

template <class R>
bool quad_is_tangential(const Quad<R>& q, const Tolerance& tol = {}) {
    if (!is_convex(q)) return false;
    const double s0 = double(q.side(0) + q.side(2));
    const double s1 = double(q.side(1) + q.side(3));
    return std::fabs(s0 - s1) <= tol.rel_eps * 10 * (s0 + s1);
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

template <class R>
Point<R> quad_vertex_centroid(const Quad<R>& q) {
    return (q[0] + q[1] + q[2] + q[3]) / R(4);
}

template <class R>
Point<R> quad_diagonal_point(const Quad<R>& q) {
    return intersect(line_through(q[0], q[2]), line_through(q[1], q[3]));
}

namespace detail {

/// Pick the intersection of circles c1, c2 that best fits circle c3.
template <class R>
Point<R> two_circle_point(const Circle<R>& c1, const Circle<R>& c2, const Circle<R>& c3) {
    const auto [p1, p2] = circle_intersect(c1, c2);
    const R r1 = abs_r(distance(p1, c3.center) - c3.radius);
    const R r2 = abs_r(distance(p2, c3.center) - c3.radius);
    return r1 <= r2 ? p1 : p2;
}

} // namespace detail

/// QA-P2: the common point of the nine-point circles of the half triangles.
template <class R>
Point<R> quad_poncelet(const Quad<R>& q) {
    const auto ts = half_triangles(q);
    return detail::two_circle_point(nine_point_circle(ts[0]), nine_point_circle(ts[1]),
                                    nine_point_circle(ts[2]));
}

/// Midray circle of vertex i: through the midpoints of the segments from
/// vertex i to the other three vertices.
template <class R>
Circle<R> midray_circle(const Quad<R>& q, int i) {
    std::array<Point<R>, 3> ms;
    int k = 0;
    for (int j = 0; j < 4; ++j)
        if (j != i) ms[std::size_t(k++)] = midpoint(q[i], q[j]);
    return circle_through(ms[0], ms[1], ms[2]);
}

/// QA-P3: the common point of the four midray circles.
template <class R>
Point<R> quad_steiner(const Quad<R>& q) {
    return detail::two_circle_point(midray_circle(q, 0), midray_circle(q, 1),
                                    midray_circle(q, 2));
}

template <class R>
Point<R> quad_circumcenter(const Quad<R>& q, const Tolerance& tol = {}) {
    if (!quad_is_cyclic(q, tol)) throw domain_error("circumcenter needs a cyclic quad");
    const Circle<R> c = circle_through(q[0], q[1], q[2]);
    return c.center;
}

template <class R>
Point<R> quad_anticenter(const Quad<R>& q, const Tolerance& tol = {}) {
    return quad_vertex_centroid(q) * R(2) - quad_circumcenter(q, tol);
}

template <class R>
Point<R> quad_centrocenter(const Quad<R>& q, const Tolerance& tol = {}) {
    if (!quad_is_cyclic(q, tol)) throw domain_error("centrocenter needs a cyclic quad");
    const auto ts = half_triangles(q);
    std::array<Point<R>, 4> g;
    for (int i = 0; i < 4; ++i) {
        const auto& t = ts[std::size_t(i)];
        g[std::size_t(i)] = (t.A + t.B + t.C) / R(3);
    }
    const Circle<R> c = circle_through(g[0], g[1], g[2]);
    return c.center;
}

template <class R>
Point<R> quad_orthocenter_center(const Quad<R>& q, const Tolerance& tol = {}) {
    if (!quad_is_cyclic(q, tol)) throw domain_error("orthocenter circle needs a cyclic quad");
    const auto ts = half_triangles(q);
    std::array<Point<R>, 4> h;
    for (int i = 0; i < 4; ++i) {
        const auto& t = ts[std::size_t(i)];
        h[std::size_t(i)] = orthocenter(t.A, t.B, t.C);
    }
    const Circle<R> c = circle_through(h[0], h[1], h[2]);
    return c.center;
}

template <class R>
Point<R> quad_incenter(const Quad<R>& q, const Tolerance& tol = {}) {
    if (!quad_is_tangential(q, tol)) throw domain_error("incenter needs a tangential quad");
    auto bisector = [](const Point<R>& P, const Point<R>& U, const Point<R>& V) {
        const Point<R> u = (U - P) / distance(U, P);
        const Point<R> v = (V - P) / distance(V, P);
        return line_through(P, P + u + v);
    };
    return intersect(bisector(q[0], q[1], q[3]), bisector(q[1], q[2], q[0]));
}

template <class R>
Point<R> quad_center(QuadCenterKind kind, const Quad<R>& q, const Tolerance& tol = {}) {
    switch (kind) {
        case QuadCenterKind::vertex_centroid: return quad_vertex_centroid(q);
        case QuadCenterKind::poncelet: return quad_poncelet(q);
        case QuadCenterKind::steiner: return quad_steiner(q);
        case QuadCenterKind::diagonal_point: return quad_diagonal_point(q);
        case QuadCenterKind::anticenter: return quad_anticenter(q, tol);
        case QuadCenterKind::circumcenter_q: return quad_circumcenter(q, tol);
        case QuadCenterKind::centrocenter: return quad_centrocenter(q, tol);
        case QuadCenterKind::orthocenter_q: return quad_orthocenter_center(q, tol);
        case QuadCenterKind::incenter_q: return quad_incenter(q, tol);
    }
    throw domain_error("bad quad center kind");
}

} // namespace cqe
