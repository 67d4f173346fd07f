#pragma once
// Stock constructions used by experiments and tests: square-tiled surfaces
// given by cell permutations, parallelogram tori, and two-copy slit tori.

#include "flatstrata/surface.hpp"

#include <vector>

namespace flatstrata {

// Square-tiled surface from unit cells. right[i] / up[i] name the cell glued
// to the right of / above cell i. Each cell contributes two triangles split
// along the (1,1) diagonal.
template <class K>
Surface<K> make_square_tiled(const std::vector<int>& right, const std::vector<int>& up) {
    int n = static_cast<int>(right.size());
    if (n == 0 || up.size() != right.size())
        throw flatstrata_error("make_square_tiled: bad permutation data");
    std::vector<int> down(n, -1), left(n, -1);
    for (int i = 0; i < n; ++i) {
        if (right[i] < 0 || right[i] >= n || up[i] < 0 || up[i] >= n)
            throw flatstrata_error("make_square_tiled: cell index out of range");
        down[up[i]] = i;
        left[right[i]] = i;
    }
    for (int i = 0; i < n; ++i)
        if (down[i] < 0 || left[i] < 0)
            throw flatstrata_error("make_square_tiled: maps are not permutations");

    // Undirected edges per cell i: 3i horizontal, 3i+1 vertical, 3i+2 diagonal.
    std::vector<Vec2<K>> vec(3 * n);
    for (int i = 0; i < n; ++i) {
        vec[3 * i] = {K(1), K(0)};
        vec[3 * i + 1] = {K(0), K(1)};
        vec[3 * i + 2] = {K(1), K(1)};
    }
    std::vector<std::array<int, 3>> tris(2 * n);
    for (int i = 0; i < n; ++i) {
        int bottom_e = 6 * i;                    // hol (1,0), lower triangle of i
        int diag_pos = 6 * i + 4, diag_neg = 6 * i + 5;
        int right_e = 6 * i + 2;                 // hol (0,1), lower triangle of i
        int top_e = 6 * up[i] + 1;               // reverse of bottom of up[i]
        int left_e = 6 * left[i] + 3;            // reverse of right of left[i]
        tris[2 * i] = {bottom_e, right_e, diag_neg};
        tris[2 * i + 1] = {diag_pos, top_e, left_e};
    }
    return Surface<K>(std::move(tris), std::move(vec));
}

template <class K>
Surface<K> make_square_torus() {
    return make_square_tiled<K>({0}, {0});
}

// L-shaped square-tiled surface: `width` cells in the bottom row and a single
// stack of `height` cells above the leftmost one. width=2, height=1 is the
// three-square surface with one cone point of angle 6pi.
template <class K>
Surface<K> make_l_shape(int width, int height) {
    if (width < 2 || height < 1) throw flatstrata_error("make_l_shape: need width>=2, height>=1");
    int n = width + height;
    // cells 0..width-1: bottom row left to right; width..n-1: tower upwards.
    std::vector<int> right(n), up(n);
    for (int i = 0; i < width; ++i) right[i] = (i + 1) % width;
    for (int j = 0; j < height; ++j) right[width + j] = width + j;
    up[0] = width;
    for (int i = 1; i < width; ++i) up[i] = i;
    for (int j = 0; j < height - 1; ++j) up[width + j] = width + j + 1;
    up[width + height - 1] = 0;
    return make_square_tiled<K>(right, up);
}

// n unit squares stacked into a 1 x n torus; every lattice point is marked.
template <class K>
Surface<K> make_stacked_squares(int n) {
    std::vector<int> right(n), up(n);
    for (int i = 0; i < n; ++i) {
        right[i] = i;
        up[i] = (i + 1) % n;
    }
    return make_square_tiled<K>(right, up);
}

// Torus R^2 / (Z a + Z b); requires cross(a, b) > 0.
template <class K>
Surface<K> make_torus(const Vec2<K>& a, const Vec2<K>& b) {
    if (!(cross(a, b) > 0)) throw flatstrata_error("make_torus: need cross(a,b) > 0");
    std::vector<Vec2<K>> vec = {a, b, a + b};
    std::vector<std::array<int, 3>> tris = {{0, 2, 5}, {4, 1, 3}};
    return Surface<K>(std::move(tris), std::move(vec));
}

// Two unit tori cut along the same slit and cross-glued. The slit runs from
// base to base+s inside the square; endpoints become cone points of angle
// 4pi, the two torus corners stay as marked points.
template <class K>
Surface<K> make_slit_torus(const Vec2<K>& base, const Vec2<K>& s) {
    Vec2<K> p0 = base, p1 = base + s;
    auto inside = [](const Vec2<K>& v) {
        return v.x > 0 && v.x < 1 && v.y > 0 && v.y < 1;
    };
    if (!inside(p0) || !inside(p1) || s.is_zero())
        throw flatstrata_error("make_slit_torus: slit must stay inside the unit square");

    const Vec2<K> A{K(0), K(0)}, B{K(1), K(0)}, C{K(1), K(1)}, D{K(0), K(1)};
    struct Seg {
        Vec2<K> hol;
    };
    // Undirected edges per copy c (offset 9c): o+0 horizontal AB~DC, o+1
    // vertical BC~AD, o+2 A-P0, o+3 B-P0, o+4 B-P1, o+5 C-P1, o+6 D-P1,
    // o+7 D-P0. Slots 8 and 17 hold the two slit edges (upper side of one
    // copy glued to the lower side of the other).
    std::vector<Vec2<K>> vec(18);
    for (int c = 0; c < 2; ++c) {
        int o = 9 * c;
        vec[o + 0] = B - A;
        vec[o + 1] = C - B;
        vec[o + 2] = p0 - A;
        vec[o + 3] = p0 - B;
        vec[o + 4] = p1 - B;
        vec[o + 5] = p1 - C;
        vec[o + 6] = p1 - D;
        vec[o + 7] = p0 - D;
        vec[o + 8] = Vec2<K>{K(0), K(0)};  // unused slot, replaced below
    }
    vec[8] = s;   // slit edge used by copy 0 upper side / copy 1 lower side
    vec[17] = s;  // slit edge used by copy 1 upper side / copy 0 lower side
    auto pos = [&](int u) { return 2 * u; };
    auto neg = [&](int u) { return 2 * u + 1; };
    std::vector<std::array<int, 3>> tris;
    for (int c = 0; c < 2; ++c) {
        int o = 9 * c;
        int upper_slit = (c == 0) ? 8 : 17;  // S1 of this copy
        int lower_slit = (c == 0) ? 17 : 8;  // S2 of this copy
        // T1 (A,B,P0): A->B, B->P0, P0->A
        tris.push_back({pos(o + 0), pos(o + 3), neg(o + 2)});
        // T2 (B,P1,P0): B->P1, P1->P0 (lower slit side, -s), P0->B
        tris.push_back({pos(o + 4), neg(lower_slit), neg(o + 3)});
        // T3 (B,C,P1): B->C, C->P1, P1->B
        tris.push_back({pos(o + 1), pos(o + 5), neg(o + 4)});
        // T4 (C,D,P1): C->D, D->P1, P1->C
        tris.push_back({neg(o + 0), pos(o + 6), neg(o + 5)});
        // T5 (D,P0,P1): D->P0, P0->P1 (upper slit side, +s), P1->D
        tris.push_back({pos(o + 7), pos(upper_slit), neg(o + 6)});
        // T6 (D,A,P0): D->A, A->P0, P0->D
        tris.push_back({neg(o + 1), pos(o + 2), neg(o + 7)});
    }
    Surface<K> surf(std::move(tris), std::move(vec));
    auto rep = surf.validate();
    if (!rep.ok())
        throw flatstrata_error("make_slit_torus: slit position degenerate:\n" + rep.to_string());
    return surf;
}

}  // namespace flatstrata
