#pragma once
// Independent brute-force oracles. These stay deliberately naive and must not
// share code with the library paths they check.

#include "flatstrata/numeric.hpp"
#include "flatstrata/surface.hpp"

#include <cmath>
#include <numeric>

namespace oracles {

// Number of saddle connections of length <= L on the square torus with its
// marked point: signed primitive lattice vectors (p,q), gcd(|p|,|q|) = 1,
// p^2 + q^2 <= L^2.
inline int coprime_census(double L) {
    int bound = static_cast<int>(std::floor(L)) + 1;
    long long L2num = static_cast<long long>(std::llround(L * L * 1e6));
    int count = 0;
    for (int p = -bound; p <= bound; ++p) {
        for (int q = -bound; q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            long long n2 = 1000000LL * (1LL * p * p + 1LL * q * q);
            if (n2 > L2num) continue;
            if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
            ++count;
        }
    }
    return count;
}

// Minimum of |(a + b t, b)|^2 over lattice vectors with |a|,|b| <= N, exact.
inline flatstrata::Rational torus_min_norm2_under_h(const flatstrata::Rational& t, int N = 60) {
    using flatstrata::Rational;
    Rational best(-1);
    for (int a = -N; a <= N; ++a) {
        for (int b = -N; b <= N; ++b) {
            if (a == 0 && b == 0) continue;
            Rational x = Rational(a) + Rational(b) * t;
            Rational n2 = x * x + Rational(b) * Rational(b);
            if (best < 0 || n2 < best) best = n2;
        }
    }
    return best;
}

// Cone angle at a vertex orbit summed with atan2; an independent route used
// against the exact winding counts.
template <class K>
double angle_sum_at_vertex(const flatstrata::Surface<K>& s, int v) {
    const auto& star = s.vertex_stars()[v];
    double total = 0;
    for (size_t i = 0; i < star.size(); ++i) {
        auto u = s.hol(star[i]);
        auto w = s.hol(star[(i + 1) % star.size()]);
        double ang = std::atan2(flatstrata::to_double(flatstrata::cross(u, w)),
                                flatstrata::to_double(flatstrata::dot(u, w)));
        if (ang < 0) ang += 2 * M_PI;
        total += ang;
    }
    return total;
}

}  // namespace oracles
