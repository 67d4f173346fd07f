#pragma once
// Saddle connections: enumeration up to a length bound, the shortest-length
// function, horizontal short saddles, and the horocycle length evolution
// l(t) = |(x + t y, y)| of a single holonomy vector.
//
// Enumeration develops the triangulation around each cone point and walks a
// wedge tree: a state is a crossed edge together with the open sector of
// directions still visible through it. A vertex developing inside the sector
// is a saddle connection and splits the sector; the branch is pruned once
// every point of the visible part of the crossed edge is farther than the
// bound. Segments running along triangulation edges are the edges themselves
// and are collected directly.

#include "flatstrata/surface.hpp"
#include "flatstrata/tracing.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace flatstrata {

template <class K>
struct SaddleConnection {
    Vec2<K> holonomy;
    int start = -1;
    int end = -1;
    std::vector<int> crossings;  // directed edges crossed, in order

    bool operator==(const SaddleConnection&) const = default;
};

struct EnumerateLimits {
    long long max_states = 20000000;
};

namespace detail {

// Minimum squared distance from the origin to the part of segment [S,E]
// whose direction lies in the closed sector [u,v] (sector angle < pi).
template <class K>
bool sector_contains(const Vec2<K>& u, const Vec2<K>& v, const Vec2<K>& p) {
    return cross(u, p) >= 0 && cross(p, v) >= 0;
}

template <class K>
std::optional<K> ray_segment_norm2(const Vec2<K>& r, const Vec2<K>& S, const Vec2<K>& E) {
    Vec2<K> d = E - S;
    K denom = cross(d, r);
    if (denom == 0) return std::nullopt;
    K w = cross(S, r) / -denom;  // S + w d on the ray line
    if (w < 0 || w > 1) return std::nullopt;
    Vec2<K> p = S + d * w;
    if (dot(p, r) <= 0) return std::nullopt;  // wrong side of the origin
    return p.norm2();
}

template <class K>
bool wedge_segment_reaches(const Vec2<K>& u, const Vec2<K>& v, const Vec2<K>& S, const Vec2<K>& E,
                           const K& bound2) {
    // endpoints inside the sector
    if (sector_contains(u, v, S) && S.norm2() <= bound2) return true;
    if (sector_contains(u, v, E) && E.norm2() <= bound2) return true;
    // perpendicular foot
    Vec2<K> d = E - S;
    K dd = d.norm2();
    if (dd > 0) {
        K w = -dot(S, d) / dd;
        if (w > 0 && w < 1) {
            Vec2<K> f = S + d * w;
            if (sector_contains(u, v, f) && f.norm2() <= bound2) return true;
        }
    }
    // sector boundary rays
    if (auto n2 = ray_segment_norm2(u, S, E); n2 && *n2 <= bound2) return true;
    if (auto n2 = ray_segment_norm2(v, S, E); n2 && *n2 <= bound2) return true;
    return false;
}

}  // namespace detail

// All saddle connections of squared length <= L2, both orientations distinct,
// deduplicated by (start, end, holonomy), sorted by length then holonomy.
template <class K>
std::vector<SaddleConnection<K>> enumerate_saddles2(const Surface<K>& s, const K& L2,
                                                    const EnumerateLimits& lim = {}) {
    if (!(L2 > 0)) throw flatstrata_error("enumerate: length bound must be positive");

    std::map<std::tuple<int, int, Vec2<K>>, std::vector<int>> found;
    auto emit = [&](int start, int end, const Vec2<K>& hol, std::vector<int> crossings) {
        found.emplace(std::make_tuple(start, end, hol), std::move(crossings));
    };

    // Edges of the triangulation are saddle connections.
    for (int e = 0; e < s.num_directed_edges(); ++e)
        if (s.hol(e).norm2() <= L2) emit(s.start_vertex(e), s.end_vertex(e), s.hol(e), {});

    // Wedge walk per corner. The wedge tree is explored depth-first; crossing
    // sequences are reconstructed through a parent arena.
    struct Arena {
        int edge;
        int parent;
    };
    struct State {
        int edge;  // crossed directed edge, far side unexplored
        Vec2<K> S, E;
        Vec2<K> u, v;
        int arena;
    };
    std::vector<Arena> arena;
    std::vector<State> stack;
    long long states = 0;

    auto crossings_of = [&](int idx) {
        std::vector<int> out;
        for (int i = idx; i >= 0; i = arena[i].parent) out.push_back(arena[i].edge);
        std::reverse(out.begin(), out.end());
        return out;
    };

    for (int e0 = 0; e0 < s.num_directed_edges(); ++e0) {
        int start_orbit = s.start_vertex(e0);
        // corner at start(e0): sides e0 and -prev(e0), opposite edge next(e0)
        Vec2<K> A = s.hol(e0);
        Vec2<K> B = A + s.hol(s.next_in_triangle(e0));
        int d = s.next_in_triangle(e0);
        arena.clear();
        stack.clear();
        if (detail::wedge_segment_reaches(A, B, A, B, L2)) {
            arena.push_back({d, -1});
            stack.push_back({d, A, B, A, B, 0});
        }
        while (!stack.empty()) {
            if (++states > lim.max_states)
                throw flatstrata_error("enumerate: state limit exceeded (bound too large?)");
            State st = stack.back();
            stack.pop_back();
            int dprime = opposite_edge(st.edge);
            int a = s.next_in_triangle(dprime);
            int b = s.next_in_triangle(a);
            Vec2<K> C = st.S + s.hol(a);
            K cu = cross(st.u, C);
            K cv = cross(C, st.v);
            if (cu > 0 && cv > 0) {
                if (C.norm2() <= L2)
                    emit(start_orbit, s.start_vertex(b), C, crossings_of(st.arena));
                if (detail::wedge_segment_reaches(st.u, C, st.S, C, L2)) {
                    arena.push_back({a, st.arena});
                    stack.push_back({a, st.S, C, st.u, C, int(arena.size()) - 1});
                }
                if (detail::wedge_segment_reaches(C, st.v, C, st.E, L2)) {
                    arena.push_back({b, st.arena});
                    stack.push_back({b, C, st.E, C, st.v, int(arena.size()) - 1});
                }
            } else if (cu <= 0) {
                if (detail::wedge_segment_reaches(st.u, st.v, C, st.E, L2)) {
                    arena.push_back({b, st.arena});
                    stack.push_back({b, C, st.E, st.u, st.v, int(arena.size()) - 1});
                }
            } else {
                if (detail::wedge_segment_reaches(st.u, st.v, st.S, C, L2)) {
                    arena.push_back({a, st.arena});
                    stack.push_back({a, st.S, C, st.u, st.v, int(arena.size()) - 1});
                }
            }
        }
    }

    std::vector<SaddleConnection<K>> out;
    out.reserve(found.size());
    for (auto& [key, crossings] : found) {
        SaddleConnection<K> sc;
        sc.start = std::get<0>(key);
        sc.end = std::get<1>(key);
        sc.holonomy = std::get<2>(key);
        sc.crossings = std::move(crossings);
        out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(), [](const SaddleConnection<K>& x, const SaddleConnection<K>& y) {
        K nx = x.holonomy.norm2(), ny = y.holonomy.norm2();
        if (nx != ny) return nx < ny;
        if (x.holonomy.x != y.holonomy.x) return x.holonomy.x < y.holonomy.x;
        if (x.holonomy.y != y.holonomy.y) return x.holonomy.y < y.holonomy.y;
        if (x.start != y.start) return x.start < y.start;
        return x.end < y.end;
    });
    return out;
}

template <class K>
std::vector<SaddleConnection<K>> enumerate_saddles(const Surface<K>& s, const K& max_length,
                                                   const EnumerateLimits& lim = {}) {
    if (!(max_length > 0)) throw flatstrata_error("enumerate: length bound must be positive");
    return enumerate_saddles2(s, max_length * max_length, lim);
}

// Squared length of the shortest saddle connection; the bound doubles from
// (max edge length / 4)^2 until the census is nonempty. seed_length2, when
// positive, overrides the starting bound (heavily sheared surfaces make the
// longest edge a bad first guess).
template <class K>
K shortest_length2(const Surface<K>& s, K seed_length2 = K(0)) {
    K L2 = seed_length2;
    if (!(L2 > 0)) {
        for (int u = 0; u < s.num_undirected_edges(); ++u)
            L2 = std::max(L2, s.stored_vec(u).norm2());
        L2 /= 16;
    }
    for (;;) {
        auto all = enumerate_saddles2(s, L2);
        if (!all.empty()) return all.front().holonomy.norm2();
        L2 *= 4;
    }
}

template <class K>
double shortest_length(const Surface<K>& s) {
    return std::sqrt(to_double(shortest_length2(s)));
}

// Saddles that are horizontal (exactly in rational mode, |y| < 1e-9 in float
// mode) and strictly shorter than eta.
template <class K>
std::vector<SaddleConnection<K>> horizontal_short_saddles(const Surface<K>& s, const K& eta) {
    if (!(eta > 0)) throw flatstrata_error("horizontal_short_saddles: eta must be positive");
    std::vector<SaddleConnection<K>> out;
    for (auto& sc : enumerate_saddles(s, eta)) {
        bool horizontal;
        if constexpr (num_traits<K>::is_exact)
            horizontal = (sc.holonomy.y == 0);
        else
            horizontal = std::abs(sc.holonomy.y) < kFloatTol;
        if (horizontal && sc.holonomy.norm2() < eta * eta) out.push_back(std::move(sc));
    }
    return out;
}

// l(t) = |(x + t y, y)| for a saddle of holonomy v.
template <class K>
double length_under_horocycle(const Vec2<K>& v, double t) {
    if (v.is_zero()) throw flatstrata_error("length_under_horocycle: zero vector");
    double x = to_double(v.x), y = to_double(v.y);
    return std::hypot(x + t * y, y);
}

// Exact coefficients of l(t)^2 = y^2 t^2 + 2xy t + (x^2 + y^2).
template <class K>
std::array<K, 3> horocycle_length2_poly(const Vec2<K>& v) {
    if (v.is_zero()) throw flatstrata_error("horocycle_length2_poly: zero vector");
    return {v.x * v.x + v.y * v.y, K(2) * v.x * v.y, v.y * v.y};
}

// Validates the geometric consistency of a crossing sequence by re-tracing:
// every crossing parameter must sit in (0,1) and the hit times must increase.
template <class K>
bool validate_crossings(const Surface<K>& s, const SaddleConnection<K>& sc) {
    if (sc.crossings.empty()) return true;  // an edge of the triangulation
    // Find the corner realizing the first crossing and re-trace: crossing
    // parameters must be interior, the crossed edges must match in order,
    // and the total advance along the holonomy must be exactly 1.
    for (int e = 0; e < s.num_directed_edges(); ++e) {
        if (s.start_vertex(e) != sc.start) continue;
        PointOnTriangle<K> cur{s.triangle_of(e),
                               corner_position(s, s.triangle_of(e), s.pos_in_triangle(e))};
        Vec2<K> dir = sc.holonomy;
        bool ok = true;
        int exclude = -1;
        K total(0);
        for (size_t i = 0; i < sc.crossings.size(); ++i) {
            auto st = ray_step(s, cur, dir, exclude);
            if (!st || st->vertex_hit || st->crossed_edge != sc.crossings[i] ||
                !(st->edge_param > 0) || !(st->edge_param < 1) || !(st->ray_param > 0)) {
                ok = false;
                break;
            }
            total += st->ray_param;
            if (!(total < 1)) {
                ok = false;
                break;
            }
            cur = st->next;
            exclude = opposite_edge(st->crossed_edge);
        }
        if (!ok) continue;
        auto st = ray_step(s, cur, dir, exclude);
        if (!st || !st->vertex_hit || st->vertex != sc.end) continue;
        total += st->ray_param;
        if constexpr (num_traits<K>::is_exact) {
            if (total == 1) return true;
        } else {
            if (std::abs(total - 1) < kFloatTol) return true;
        }
    }
    return false;
}

}  // namespace flatstrata
