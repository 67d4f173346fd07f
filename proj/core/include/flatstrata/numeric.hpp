#pragma once
// Scalar layer: exact rationals for the canonical mode, doubles for flow
// sampling. A surface is built over exactly one of the two scalar types;
// the two never mix inside a computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace flatstrata {

using Integer = boost::multiprecision::cpp_int;
// Expression templates off: values deduce as values in generic code.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline constexpr double kFloatTol = 1e-9;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Exact rational value of an IEEE double.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);         // x = m * 2^exp, |m| in [0.5, 1)
    Integer num = Integer(static_cast<long long>(std::ldexp(m, 53)));
    exp -= 53;
    Rational r(num);
    if (exp > 0)
        r *= Rational(Integer(1) << exp);
    else if (exp < 0)
        r /= Rational(Integer(1) << (-exp));
    return r;
}

// Accepts "p/q", plain integers, and decimal literals ("-0.25", "1e-3" is not
// supported on purpose: config files stay human-auditable).
inline Rational parse_rational(const std::string& s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    };
    if (s.empty()) return fail();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            Integer p(s.substr(0, slash));
            Integer q(s.substr(slash + 1));
            if (q == 0) return fail();
            return Rational(p, q);
        } catch (...) {
            return fail();
        }
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip == "-" || ip.empty()) ip = neg ? "-0" : "0";
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        if (fp.empty()) return fail();
        try {
            Integer whole(ip);
            Integer frac(fp);
            Integer den = 1;
            for (size_t i = 0; i < fp.size(); ++i) den *= 10;
            Rational r = Rational(whole) + (neg ? -Rational(frac, den) : Rational(frac, den));
            return r;
        } catch (...) {
            return fail();
        }
    }
    try {
        return Rational(Integer(s));
    } catch (...) {
        return fail();
    }
}

inline std::string to_string_exact(const Rational& q) {
    std::ostringstream os;
    if (denominator(q) == 1)
        os << numerator(q);
    else
        os << numerator(q) << '/' << denominator(q);
    return os.str();
}

inline std::string to_string_exact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <class K>
struct num_traits;

template <>
struct num_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_string(const std::string& s) { return parse_rational(s); }
    static Rational from_double(double x) { return rational_from_double(x); }
    static const char* mode_name() { return "exact"; }
};

template <>
struct num_traits<double> {
    static constexpr bool is_exact = false;
    static double from_string(const std::string& s) {
        size_t pos = 0;
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("cannot parse number: '" + s + "'");
        return v;
    }
    static double from_double(double x) { return x; }
    static const char* mode_name() { return "float"; }
};

struct flatstrata_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace flatstrata
