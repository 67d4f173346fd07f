#pragma once
// Triangulated translation surfaces.
//
// A surface is a list of positively oriented triangles whose sides are
// directed edges carrying holonomy vectors. Undirected edge u is stored once;
// directed edge 2u travels along the stored vector and 2u+1 travels against
// it, so paired directed edges carry negated holonomies by construction.
// Vertices are not stored: cone points are the orbits of the "next outgoing
// edge around the start vertex" permutation, and their angles are winding
// counts of the direction vector, computed exactly in rational mode.

#include "flatstrata/numeric.hpp"
#include "flatstrata/vec2.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace flatstrata {

inline int opposite_edge(int e) { return e ^ 1; }
inline int undirected(int e) { return e >> 1; }

struct ValidationIssue {
    std::string what;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    void add(std::string msg) { issues.push_back({std::move(msg)}); }
    std::string to_string() const {
        std::string s;
        for (const auto& i : issues) {
            s += i.what;
            s += '\n';
        }
        return s;
    }
};

struct StratumSignature {
    int genus = 0;
    std::vector<int> kappa;  // orders k >= 1 of unmarked cone points, sorted descending
    int marked = 0;

    bool operator==(const StratumSignature&) const = default;
};

// Count of crossings of the fixed ray through (1,0) while turning CCW from u
// to w; the turn angle is assumed to lie in (0, pi), which holds for corners
// of positively oriented triangles.
template <class K>
int corner_crossings_of_positive_ray(const Vec2<K>& u, const Vec2<K>& w) {
    const Vec2<K> d{K(1), K(0)};
    K cwd = cross(w, d);
    if (cwd == 0 && dot(w, d) > 0) return 1;  // lands exactly on the ray
    K cud = cross(u, d);
    if (cud == 0 && dot(u, d) > 0) return 0;  // starts on the ray, excluded
    return (cud > 0 && -cwd > 0) ? 1 : 0;
}

template <class K>
class Surface {
  public:
    Surface() = default;

    // triangles: directed edge ids, CCW; edge_vec: holonomy of directed edge 2u.
    Surface(std::vector<std::array<int, 3>> triangles, std::vector<Vec2<K>> edge_vec,
            std::vector<char> marked_hint = {})
        : tris_(std::move(triangles)), vec_(std::move(edge_vec)) {
        finalize(std::move(marked_hint));
    }

    int num_triangles() const { return static_cast<int>(tris_.size()); }
    int num_undirected_edges() const { return static_cast<int>(vec_.size()); }
    int num_directed_edges() const { return 2 * num_undirected_edges(); }
    int num_vertices() const { return num_orbits_; }

    const std::array<int, 3>& triangle(int t) const { return tris_[t]; }
    const std::vector<std::array<int, 3>>& triangles() const { return tris_; }

    Vec2<K> hol(int e) const { return (e & 1) ? -vec_[e >> 1] : vec_[e >> 1]; }
    const Vec2<K>& stored_vec(int u) const { return vec_[u]; }

    int triangle_of(int e) const { return tri_of_edge_[e]; }
    int pos_in_triangle(int e) const { return pos_in_tri_[e]; }
    int next_in_triangle(int e) const {
        const auto& t = tris_[tri_of_edge_[e]];
        return t[(pos_in_tri_[e] + 1) % 3];
    }
    int prev_in_triangle(int e) const {
        const auto& t = tris_[tri_of_edge_[e]];
        return t[(pos_in_tri_[e] + 2) % 3];
    }
    // Next outgoing directed edge CCW around the start vertex of e.
    int next_around_vertex(int e) const { return opposite_edge(prev_in_triangle(e)); }

    int start_vertex(int e) const { return vertex_of_edge_[e]; }
    int end_vertex(int e) const { return vertex_of_edge_[opposite_edge(e)]; }

    // Sum of corner angles at orbit v, as a multiple of 2*pi (so >= 1).
    int angle_turns(int v) const { return orbit_turns_[v]; }
    bool is_marked(int v) const { return marked_[v] != 0; }
    const std::vector<char>& marked_flags() const { return marked_; }

    // Outgoing directed edges around each vertex, in rotation order.
    const std::vector<std::vector<int>>& vertex_stars() const { return stars_; }

    K area2() const {  // twice the flat area, exact
        K s(0);
        for (int t = 0; t < num_triangles(); ++t) s += triangle_area2(t);
        return s;
    }

    K triangle_area2(int t) const { return cross(hol(tris_[t][0]), hol(tris_[t][1])); }

    ValidationReport validate() const {
        ValidationReport r;
        for (int t = 0; t < num_triangles(); ++t) {
            Vec2<K> s = hol(tris_[t][0]) + hol(tris_[t][1]) + hol(tris_[t][2]);
            if (!s.is_zero()) r.add("triangle " + std::to_string(t) + ": triangle sum nonzero");
            if (!(triangle_area2(t) > 0))
                r.add("triangle " + std::to_string(t) + ": non-positive area");
        }
        for (int u = 0; u < num_undirected_edges(); ++u)
            if (vec_[u].is_zero()) r.add("edge " + std::to_string(u) + ": zero holonomy");
        if (!connected_) r.add("surface not connected");
        for (int v = 0; v < num_orbits_; ++v) {
            if (orbit_turns_[v] < 1)
                r.add("vertex " + std::to_string(v) + ": angle not a positive multiple of 2pi");
            if (marked_[v] && orbit_turns_[v] != 1)
                r.add("vertex " + std::to_string(v) + ": marked flag on cone angle != 2pi");
            if (!marked_[v] && orbit_turns_[v] == 1)
                r.add("vertex " + std::to_string(v) + ": angle 2pi vertex must be marked");
        }
        // Euler characteristic vs total cone angle excess.
        int V = num_orbits_, E = num_undirected_edges(), F = num_triangles();
        int chi = V - E + F;
        if ((2 - chi) % 2 != 0) {
            r.add("odd Euler characteristic");
        } else {
            int genus = (2 - chi) / 2;
            long long excess = 0;
            for (int v = 0; v < num_orbits_; ++v) excess += orbit_turns_[v] - 1;
            if (excess != 2LL * genus - 2)
                r.add("cone angles inconsistent with Euler characteristic");
        }
        return r;
    }

    StratumSignature stratum_signature() const {
        StratumSignature sig;
        int chi = num_orbits_ - num_undirected_edges() + num_triangles();
        sig.genus = (2 - chi) / 2;
        for (int v = 0; v < num_orbits_; ++v) {
            int k = orbit_turns_[v] - 1;
            if (k == 0)
                ++sig.marked;
            else
                sig.kappa.push_back(k);
        }
        std::sort(sig.kappa.rbegin(), sig.kappa.rend());
        return sig;
    }

    Surface apply_matrix(const Mat2<K>& m) const {
        if (!(m.det() > 0)) throw flatstrata_error("apply_matrix: determinant must be positive");
        std::vector<Vec2<K>> nv(vec_.size());
        for (size_t u = 0; u < vec_.size(); ++u) nv[u] = m.apply(vec_[u]);
        return Surface(tris_, std::move(nv), marked_);
    }

    // Replace holonomies keeping the combinatorics; used by cylinder deformations.
    Surface with_edge_vectors(std::vector<Vec2<K>> nv) const {
        return Surface(tris_, std::move(nv), marked_);
    }

    bool operator==(const Surface& o) const {
        return tris_ == o.tris_ && vec_ == o.vec_ && marked_ == o.marked_;
    }

  private:
    void finalize(std::vector<char> marked_hint);

    std::vector<std::array<int, 3>> tris_;
    std::vector<Vec2<K>> vec_;
    std::vector<int> tri_of_edge_;
    std::vector<int> pos_in_tri_;
    std::vector<int> vertex_of_edge_;
    std::vector<std::vector<int>> stars_;
    std::vector<int> orbit_turns_;
    std::vector<char> marked_;
    int num_orbits_ = 0;
    bool connected_ = true;
};

template <class K>
void Surface<K>::finalize(std::vector<char> marked_hint) {
    int ne = 2 * static_cast<int>(vec_.size());
    tri_of_edge_.assign(ne, -1);
    pos_in_tri_.assign(ne, -1);
    for (int t = 0; t < num_triangles(); ++t) {
        for (int i = 0; i < 3; ++i) {
            int e = tris_[t][i];
            if (e < 0 || e >= ne) throw flatstrata_error("triangle references unknown edge");
            if (tri_of_edge_[e] != -1)
                throw flatstrata_error("directed edge used twice: " + std::to_string(e));
            tri_of_edge_[e] = t;
            pos_in_tri_[e] = i;
        }
    }
    for (int e = 0; e < ne; ++e)
        if (tri_of_edge_[e] == -1)
            throw flatstrata_error("directed edge unused: " + std::to_string(e));

    // Vertex orbits of e -> opposite(prev(e)).
    vertex_of_edge_.assign(ne, -1);
    num_orbits_ = 0;
    for (int e = 0; e < ne; ++e) {
        if (vertex_of_edge_[e] != -1) continue;
        int v = num_orbits_++;
        stars_.emplace_back();
        int cur = e;
        do {
            vertex_of_edge_[cur] = v;
            stars_[v].push_back(cur);
            cur = next_around_vertex(cur);
        } while (cur != e);
    }

    // Exact winding counts. Degenerate (zero) holonomies get turns = 0 and are
    // reported by validate() rather than throwing here.
    orbit_turns_.assign(num_orbits_, 0);
    bool degenerate = false;
    for (int u = 0; u < num_undirected_edges(); ++u)
        if (vec_[u].is_zero()) degenerate = true;
    if (!degenerate) {
        for (int v = 0; v < num_orbits_; ++v) {
            int turns = 0;
            const auto& st = stars_[v];
            for (size_t i = 0; i < st.size(); ++i) {
                Vec2<K> u = hol(st[i]);
                Vec2<K> w = hol(st[(i + 1) % st.size()]);
                turns += corner_crossings_of_positive_ray(u, w);
            }
            orbit_turns_[v] = turns;
        }
    }

    if (!marked_hint.empty()) {
        if (static_cast<int>(marked_hint.size()) != num_orbits_)
            throw flatstrata_error("marked flag list does not match vertex count");
        marked_ = std::move(marked_hint);
    } else {
        marked_.assign(num_orbits_, 0);
        for (int v = 0; v < num_orbits_; ++v)
            if (orbit_turns_[v] == 1) marked_[v] = 1;
    }

    // Connectivity over triangle adjacency.
    if (num_triangles() > 0) {
        std::vector<char> seen(num_triangles(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                int n = tri_of_edge_[opposite_edge(tris_[t][i])];
                if (!seen[n]) {
                    seen[n] = 1;
                    ++count;
                    stack.push_back(n);
                }
            }
        }
        connected_ = (count == num_triangles());
    }
}

// Ordered tuple of surfaces with area ratios recorded at construction. The
// diagonal GL+(2,R) action and the cylinder deformations keep the recorded
// ratios in sync with the actual component areas.
template <class K>
class MultiSurface {
  public:
    MultiSurface() = default;
    explicit MultiSurface(std::vector<Surface<K>> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw flatstrata_error("MultiSurface: empty component list");
        record_ratios();
    }

    int num_components() const { return static_cast<int>(comps_.size()); }
    const Surface<K>& component(int i) const { return comps_[i]; }
    const std::vector<Surface<K>>& components() const { return comps_; }
    const std::vector<K>& area_ratios() const { return ratios_; }

    MultiSurface apply_matrix(const Mat2<K>& m) const {
        std::vector<Surface<K>> nc;
        nc.reserve(comps_.size());
        for (const auto& c : comps_) nc.push_back(c.apply_matrix(m));
        return MultiSurface(std::move(nc));
    }

    // Replace one component (deformations act componentwise) and re-record.
    MultiSurface with_component(int i, Surface<K> s) const {
        std::vector<Surface<K>> nc = comps_;
        nc[i] = std::move(s);
        return MultiSurface(std::move(nc));
    }

    ValidationReport validate() const {
        ValidationReport r;
        for (int i = 0; i < num_components(); ++i) {
            auto cr = comps_[i].validate();
            for (auto& is : cr.issues)
                r.add("component " + std::to_string(i) + ": " + is.what);
        }
        for (int i = 0; i < num_components(); ++i) {
            if (comps_[i].area2() * ratios_[0] != comps_[0].area2() * ratios_[i])
                r.add("component " + std::to_string(i) + ": recorded area ratio stale");
        }
        return r;
    }

  private:
    void record_ratios() {
        ratios_.clear();
        for (const auto& c : comps_) ratios_.push_back(c.area2());
    }

    std::vector<Surface<K>> comps_;
    std::vector<K> ratios_;
};

using SurfaceQ = Surface<Rational>;
using SurfaceD = Surface<double>;
using MultiSurfaceQ = MultiSurface<Rational>;
using MultiSurfaceD = MultiSurface<double>;

}  // namespace flatstrata
