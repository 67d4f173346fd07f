#include "doctest.h"

#include "flatstrata/builders.hpp"
#include "flatstrata/io.hpp"
#include "flatstrata/surface.hpp"

#include "oracles.hpp"

using namespace flatstrata;

namespace {
const char* kTorusFile =
    "flatstrata v1\n"
    "tri a b c\n"
    "tri -a -b -c\n"
    "edge a 1 0\n"
    "edge b 0 1\n"
    "edge c -1 -1\n";
}

TEST_CASE("square torus validates and has the expected invariants") {
    auto s = parse_surface<Rational>(kTorusFile);
    CHECK(s.validate().ok());
    CHECK(s.area2() == 2);  // area 1
    CHECK(s.num_vertices() == 1);
    CHECK(s.angle_turns(0) == 1);
    auto sig = s.stratum_signature();
    CHECK(sig == StratumSignature{1, {}, 1});
    CHECK(oracles::angle_sum_at_vertex(s, 0) == doctest::Approx(2 * M_PI));
}

TEST_CASE("builder torus matches the file torus") {
    auto s = make_square_torus<Rational>();
    CHECK(s.validate().ok());
    CHECK(s.area2() == 2);
    CHECK(s.stratum_signature() == StratumSignature{1, {}, 1});
}

TEST_CASE("negating one holonomy breaks the triangle sums") {
    std::string bad =
        "flatstrata v1\n"
        "tri a b c\n"
        "tri -a -b -c\n"
        "edge a 1 0\n"
        "edge b 0 1\n"
        "edge c 1 1\n";  // should be -1 -1
    auto s = parse_surface<Rational>(bad);
    auto rep = s.validate();
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& is : rep.issues) found = found || is.what.find("triangle sum nonzero") != std::string::npos;
    CHECK(found);
}

TEST_CASE("three-square L-shape: one 6pi cone point, H(2)") {
    auto s = make_l_shape<Rational>(2, 1);
    CHECK(s.validate().ok());
    CHECK(s.area2() == 6);  // area 3
    CHECK(s.num_vertices() == 1);
    CHECK(s.angle_turns(0) == 3);
    CHECK(oracles::angle_sum_at_vertex(s, 0) == doctest::Approx(6 * M_PI));
    CHECK(s.stratum_signature() == StratumSignature{2, {2}, 0});
}

TEST_CASE("stacked squares: flat torus with n marked points") {
    auto s = make_stacked_squares<Rational>(2);
    CHECK(s.validate().ok());
    CHECK(s.area2() == 4);
    CHECK(s.stratum_signature() == StratumSignature{1, {}, 2});
}

TEST_CASE("slit torus: H(1,1) with two marked corners") {
    auto s = make_slit_torus<Rational>({Rational(1, 4), Rational(1, 4)},
                                       {Rational(3, 8), Rational(1, 50)});
    CHECK(s.validate().ok());
    CHECK(s.area2() == 4);  // two unit tori
    CHECK(s.num_vertices() == 4);
    CHECK(s.stratum_signature() == StratumSignature{2, {1, 1}, 2});
}

TEST_CASE("apply_matrix is a right action with exact area scaling") {
    auto s = make_square_torus<Rational>();
    auto h1 = Mat2<Rational>::horocycle(1);
    auto h2 = Mat2<Rational>::horocycle(2);
    auto h3 = Mat2<Rational>::horocycle(3);
    CHECK(s.apply_matrix(h1).apply_matrix(h2) == s.apply_matrix(h3));
    CHECK(s.apply_matrix(Mat2<Rational>::identity()) == s);

    auto g = Mat2<Rational>::diagonal(2, 1);
    auto sg = s.apply_matrix(g);
    CHECK(sg.area2() == 4);  // area 2, det scaling exact
    CHECK(sg.stratum_signature() == s.stratum_signature());

    auto l = make_l_shape<Rational>(2, 1);
    auto m = Mat2<Rational>{Rational(2), Rational(1, 3), Rational(1, 7), Rational(5)};
    CHECK(l.apply_matrix(m).area2() == l.area2() * m.det());
    CHECK(l.apply_matrix(m).stratum_signature() == l.stratum_signature());

    CHECK_THROWS_AS(s.apply_matrix(Mat2<Rational>::diagonal(-1, 1)), flatstrata_error);
    CHECK_THROWS_AS(s.apply_matrix(Mat2<Rational>::diagonal(1, 0)), flatstrata_error);
}

TEST_CASE("multisurface: diagonal action keeps area ratios") {
    MultiSurface<Rational> m({make_square_torus<Rational>(), make_l_shape<Rational>(2, 1)});
    CHECK(m.validate().ok());
    auto m2 = m.apply_matrix(Mat2<Rational>{Rational(1), Rational(1, 2), Rational(0), Rational(1)});
    CHECK(m2.validate().ok());
    // ratio 1:3 preserved exactly
    CHECK(m2.component(1).area2() == 3 * m2.component(0).area2());
}

TEST_CASE("torus stays thick under the horocycle flow (lattice oracle)") {
    for (auto t : {Rational(0), Rational(1, 3), Rational(7, 5), Rational(-2), Rational(19, 7)}) {
        CHECK(oracles::torus_min_norm2_under_h(t) == 1);
    }
}

TEST_CASE("surface files round-trip exactly") {
    auto torus = parse_surface<Rational>(kTorusFile);
    CHECK(parse_surface<Rational>(format_surface(torus)) == torus);

    // The writer relabels; a second pass must be byte-stable and preserve
    // every invariant of the surface.
    auto s = make_l_shape<Rational>(3, 1);
    auto text = format_surface(s);
    auto t = parse_surface<Rational>(text);
    CHECK(format_surface(t) == text);
    CHECK(t.validate().ok());
    CHECK(t.area2() == s.area2());
    CHECK(t.stratum_signature() == s.stratum_signature());
    CHECK(detect_mode_text(text) == NumericMode::exact);

    MultiSurface<Rational> m({make_square_torus<Rational>(), s});
    auto mtext = format_multisurface(m);
    auto mt = parse_multisurface<Rational>(mtext);
    CHECK(mt.num_components() == 2);
    CHECK(format_multisurface(mt) == mtext);
}

TEST_CASE("float-mode files round-trip") {
    auto s = make_square_torus<double>().apply_matrix(Mat2<double>::horocycle(0.125));
    auto text = format_surface(s);
    CHECK(detect_mode_text(text) == NumericMode::floating);
    auto t = parse_surface<double>(text);
    CHECK(t == s);
}

TEST_CASE("parse errors carry line numbers") {
    std::string bad =
        "flatstrata v1\n"
        "tri a b\n";
    CHECK_THROWS_WITH_AS(parse_surface<Rational>(bad), doctest::Contains("line 2"), io_error);

    std::string dup =
        "flatstrata v1\n"
        "tri a b c\n"
        "tri a -b -c\n"  // 'a' used positively twice
        "edge a 1 0\nedge b 0 1\nedge c -1 -1\n";
    CHECK_THROWS_WITH_AS(parse_surface<Rational>(dup), doctest::Contains("line 3"), io_error);

    std::string noedge =
        "flatstrata v1\n"
        "tri a b c\n"
        "tri -a -b -c\n"
        "edge a 1 0\nedge b 0 1\n";
    CHECK_THROWS_AS(parse_surface<Rational>(noedge), io_error);
}

TEST_CASE("marked points survive the round trip") {
    auto s = make_stacked_squares<Rational>(3);
    auto t = parse_surface<Rational>(format_surface(s));
    CHECK(t.stratum_signature() == StratumSignature{1, {}, 3});
}
