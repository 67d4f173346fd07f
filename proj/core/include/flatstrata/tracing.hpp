#pragma once
// Straight-line tracing across the triangulation. Holonomy gluings are
// translations, so a direction vector is global: crossing an edge only moves
// the point into the neighbouring chart, the direction never changes.
//
// Chart convention for triangle (e0,e1,e2): corner 0 at the origin, corner 1
// at hol(e0), corner 2 at hol(e0)+hol(e1).

#include "flatstrata/surface.hpp"

#include <optional>

namespace flatstrata {

template <class K>
Vec2<K> corner_position(const Surface<K>& s, int tri, int corner) {
    switch (corner) {
        case 0: return {K(0), K(0)};
        case 1: return s.hol(s.triangle(tri)[0]);
        default: return s.hol(s.triangle(tri)[0]) + s.hol(s.triangle(tri)[1]);
    }
}

template <class K>
Vec2<K> edge_point(const Surface<K>& s, int e, const K& param) {
    int t = s.triangle_of(e);
    return corner_position(s, t, s.pos_in_triangle(e)) + s.hol(e) * param;
}

template <class K>
struct PointOnTriangle {
    int tri = -1;
    Vec2<K> pos;
};

template <class K>
struct TraceStep {
    bool vertex_hit = false;
    int vertex = -1;        // orbit id when vertex_hit
    int crossed_edge = -1;  // directed edge of the current triangle, otherwise
    K edge_param{};         // position on crossed_edge, in (0,1)
    K ray_param{};          // distance along the ray in units of |dir|
    PointOnTriangle<K> next;  // same point in the neighbouring chart
    Vec2<K> hit_pos;          // exit point in the current chart
};

// One crossing step of the ray cur.pos + s*dir, s > 0. exclude is a directed
// edge of cur.tri the point currently lies on (-1 if none).
template <class K>
std::optional<TraceStep<K>> ray_step(const Surface<K>& s, const PointOnTriangle<K>& cur,
                                     const Vec2<K>& dir, int exclude = -1) {
    const auto& tri = s.triangle(cur.tri);
    std::optional<TraceStep<K>> best;
    for (int i = 0; i < 3; ++i) {
        int e = tri[i];
        if (e == exclude) continue;
        Vec2<K> h = s.hol(e);
        K denom = cross(dir, h);
        if (denom == 0) continue;  // parallel; overlap cases end at vertices
        Vec2<K> w = corner_position(s, cur.tri, i) - cur.pos;
        K sp = cross(w, h) / denom;
        if (!(sp > 0)) continue;
        K u = cross(w, dir) / denom;
        K eps = K(0);
        if constexpr (!num_traits<K>::is_exact) eps = 1e-12;
        if (u < -eps || u > K(1) + eps) continue;
        if (best && !(sp < best->ray_param)) continue;
        TraceStep<K> st;
        st.ray_param = sp;
        st.edge_param = u;
        st.hit_pos = cur.pos + dir * sp;
        if (u <= eps) {
            st.vertex_hit = true;
            st.vertex = s.start_vertex(e);
        } else if (u >= K(1) - eps) {
            st.vertex_hit = true;
            st.vertex = s.end_vertex(e);
        } else {
            st.crossed_edge = e;
            int oe = opposite_edge(e);
            st.next.tri = s.triangle_of(oe);
            st.next.pos = edge_point(s, oe, K(1) - u);
        }
        best = st;
    }
    return best;
}

// Polyline of a traced segment: one entry per visited triangle.
template <class K>
struct TraceSegment {
    int tri;
    Vec2<K> enter;
    Vec2<K> exit;
};

struct TraceLimits {
    long long max_crossings = 1000000;  // periodicity searches abort past this
};

template <class K>
struct VertexRayResult {
    bool closed = false;      // hit a cone point
    bool out_of_bounds = false;
    int end_vertex = -1;
    K length{};               // in units of |dir|
    std::vector<TraceSegment<K>> path;
    std::vector<int> crossings;  // directed edges crossed
};

// Ray from a vertex into the interior of a triangle corner; dir must point
// strictly inside the corner wedge (or along an edge, in which case the
// caller should not use this function).
template <class K>
VertexRayResult<K> trace_ray_from_corner(const Surface<K>& s, int tri, int corner,
                                         const Vec2<K>& dir, const TraceLimits& lim = {}) {
    VertexRayResult<K> r;
    PointOnTriangle<K> cur{tri, corner_position(s, tri, corner)};
    K total(0);
    int exclude = -1;
    for (long long n = 0; n <= lim.max_crossings; ++n) {
        auto st = ray_step(s, cur, dir, exclude);
        if (!st) throw flatstrata_error("trace_ray_from_corner: ray escaped the chart");
        r.path.push_back({cur.tri, cur.pos, st->hit_pos});
        total += st->ray_param;
        if (st->vertex_hit) {
            r.closed = true;
            r.end_vertex = st->vertex;
            r.length = total;
            return r;
        }
        r.crossings.push_back(st->crossed_edge);
        cur = st->next;
        exclude = opposite_edge(st->crossed_edge);
    }
    r.out_of_bounds = true;
    r.length = total;
    return r;
}

}  // namespace flatstrata
