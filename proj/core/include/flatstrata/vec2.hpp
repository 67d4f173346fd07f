#pragma once
// Planar holonomy vectors. x is the horizontal period, y the vertical one.

#include "flatstrata/numeric.hpp"

#include <array>
#include <compare>

namespace flatstrata {

template <class K>
struct Vec2 {
    K x{};
    K y{};

    Vec2() = default;
    Vec2(K xx, K yy) : x(std::move(xx)), y(std::move(yy)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const K& s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const {  // lexicographic
        if (x != o.x) return x < o.x;
        return y < o.y;
    }

    K norm2() const { return x * x + y * y; }
    bool is_zero() const { return x == 0 && y == 0; }
};

template <class K>
K cross(const Vec2<K>& a, const Vec2<K>& b) {
    return a.x * b.y - a.y * b.x;
}

template <class K>
K dot(const Vec2<K>& a, const Vec2<K>& b) {
    return a.x * b.x + a.y * b.y;
}

// Lexicographic (x, then y); used to make enumeration orders canonical.
template <class K>
bool lex_less(const Vec2<K>& a, const Vec2<K>& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

template <class K>
double norm(const Vec2<K>& v) {
    return std::sqrt(to_double(v.norm2()));
}

// 2x2 matrix acting on holonomy vectors, row-major.
template <class K>
struct Mat2 {
    K a, b, c, d;  // [[a, b], [c, d]]

    Vec2<K> apply(const Vec2<K>& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    K det() const { return a * d - b * c; }
    Mat2 times(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    static Mat2 identity() { return {K(1), K(0), K(0), K(1)}; }
    static Mat2 horocycle(const K& t) { return {K(1), t, K(0), K(1)}; }
    static Mat2 diagonal(const K& u, const K& v) { return {u, K(0), K(0), v}; }
    // Quarter-turn in GL+; exact, used to study other directions horizontally.
    static Mat2 rotate90() { return {K(0), K(-1), K(1), K(0)}; }
};

}  // namespace flatstrata
