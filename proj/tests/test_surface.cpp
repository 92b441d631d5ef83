#include <doctest.h>

#include "hilbstab/errors.hpp"
#include "hilbstab/surface.hpp"

using namespace hilbstab;

TEST_CASE("presets validate and carry the advertised lattice data") {
    SurfaceData k3 = k3_preset();
    CHECK(k3.rho == 1);
    CHECK(k3.pair(k3.divisor("H"), k3.divisor("H")) == 4);
    CHECK(k3.canonical == QVec{Rational(0)});
    CHECK(k3.c2 == 24);

    SurfaceData k3_6 = k3_preset(3);
    CHECK(k3_6.pair(k3_6.divisor("H"), k3_6.divisor("H")) == 6);

    SurfaceData q = quintic_preset();
    CHECK(q.rho == 1);
    CHECK(q.pair(q.divisor("H"), q.divisor("H")) == 5);
    CHECK(q.canonical == QVec{Rational(1)});
    CHECK(q.pair(q.divisor("H"), q.canonical) == 5);
    CHECK(q.c2 == 55);

    SurfaceData re = rational_elliptic_preset();
    CHECK(re.rho == 2);
    CHECK(re.pair(re.divisor("sec"), re.divisor("sec")) == -2);
    CHECK(re.pair(re.divisor("sec"), re.divisor("fib")) == 1);
    CHECK(re.pair(re.divisor("fib"), re.divisor("fib")) == 0);
    CHECK(re.pair(re.divisor("H"), re.divisor("H")) == 4);
    CHECK(re.pair(re.canonical, re.canonical) == 0);
    CHECK(re.pair(re.divisor("H"), re.canonical) == -1);
    CHECK(re.c2 == 12);
    CHECK(re.polarization_vector() == QVec{Rational(1), Rational(3)});
}

TEST_CASE("basis vectors and divisor lookup") {
    SurfaceData re = rational_elliptic_preset();
    CHECK(re.basis_vector(0) == QVec{Rational(1), Rational(0)});
    CHECK(re.basis_vector(1) == QVec{Rational(0), Rational(1)});
    CHECK_THROWS_AS(re.divisor("nope"), input_error);
}

TEST_CASE("surface cycles multiply by codimension truncation") {
    SurfaceData k3 = k3_preset();
    CycleX h = CycleX::divisor_class(k3.divisor("H"));
    CycleX one = CycleX::unit(1);
    CycleX pt = CycleX::point(1);

    CHECK(mul_x(h, h, k3) == Poly(4) * pt);
    CHECK(mul_x(one, h, k3) == h);
    CHECK(mul_x(h, pt, k3).is_zero());
    CHECK(mul_x(pt, pt, k3).is_zero());

    SurfaceData re = rational_elliptic_preset();
    CycleX sec = CycleX::divisor_class(re.divisor("sec"));
    CycleX fib = CycleX::divisor_class(re.divisor("fib"));
    CHECK(mul_x(sec, sec, re) == Poly(-2) * CycleX::point(2));
    CHECK(mul_x(sec, fib, re) == CycleX::point(2));

    // polynomial scalars ride along exactly
    CycleX nh = Poly::variable() * h;
    CHECK(mul_x(nh, nh, k3) == Poly::monomial(Rational(4), 2) * pt);
}

TEST_CASE("cycle arithmetic and equality") {
    SurfaceData k3 = k3_preset();
    CycleX h = CycleX::divisor_class(k3.divisor("H"));
    CHECK(h + h == Poly(2) * h);
    CHECK((h - h).is_zero());
    CHECK(-h == Poly(-1) * h);
    CHECK(h != CycleX::unit(1));
}

TEST_CASE("shipped surface files load back to the presets") {
    SurfaceData k3 = load_surface("surfaces/k3_deg4.json");
    SurfaceData k3p = k3_preset();
    CHECK(k3.name == k3p.name);
    CHECK(k3.rho == k3p.rho);
    CHECK(k3.gram == k3p.gram);
    CHECK(k3.canonical == k3p.canonical);
    CHECK(k3.c2 == k3p.c2);
    CHECK(k3.divisors == k3p.divisors);
    CHECK(k3.polarization == k3p.polarization);

    SurfaceData q = load_surface("surfaces/quintic.json");
    SurfaceData qp = quintic_preset();
    CHECK(q.gram == qp.gram);
    CHECK(q.canonical == qp.canonical);
    CHECK(q.c2 == qp.c2);
    CHECK(q.divisors == qp.divisors);

    SurfaceData re = load_surface("surfaces/rational_elliptic.json");
    SurfaceData rep = rational_elliptic_preset();
    CHECK(re.gram == rep.gram);
    CHECK(re.canonical == rep.canonical);
    CHECK(re.c2 == rep.c2);
    CHECK(re.divisors == rep.divisors);
    CHECK(re.polarization == rep.polarization);
}

TEST_CASE("loader rejects malformed documents") {
    CHECK_THROWS_AS(parse_surface("not json"), input_error);
    CHECK_THROWS_AS(parse_surface("[1,2]"), input_error);
    CHECK_THROWS_AS(load_surface("surfaces/does_not_exist.json"), input_error);

    // floats are rejected outright: the calculus is exact
    CHECK_THROWS_AS(parse_surface(R"({"name":"x","rho":1,"gram":[[4.0]],
        "canonical":[0],"c2":24,"divisors":{"H":[1]},"polarization":"H"})"),
        validation_error);

    // rationals as strings work
    SurfaceData s = parse_surface(R"({"name":"x","rho":1,"gram":[["8/2"]],
        "canonical":[0],"c2":"48/2","divisors":{"H":[1]},"polarization":"H"})");
    CHECK(s.pair(s.divisor("H"), s.divisor("H")) == 4);
    CHECK(s.c2 == 24);

    auto doc = [](const std::string& body) {
        return parse_surface("{" + body + "}");
    };
    std::string base = R"("name":"x","rho":1,"gram":[[4]],"canonical":[0],
        "c2":24,"divisors":{"H":[1]},"polarization":"H")";

    // missing field
    CHECK_THROWS_AS(doc(R"("name":"x","rho":1,"gram":[[4]],"canonical":[0],
        "c2":24,"divisors":{"H":[1]})"), validation_error);
    // gram shape
    CHECK_THROWS_AS(doc(R"("name":"x","rho":2,"gram":[[4]],"canonical":[0,0],
        "c2":24,"divisors":{"H":[1,0]},"polarization":"H")"), validation_error);
    // asymmetric gram
    CHECK_THROWS_AS(doc(R"("name":"x","rho":2,"gram":[[0,1],[2,0]],"canonical":[0,0],
        "c2":24,"divisors":{"H":[1,1]},"polarization":"H")"), validation_error);
    // canonical length
    CHECK_THROWS_AS(doc(R"("name":"x","rho":1,"gram":[[4]],"canonical":[0,0],
        "c2":24,"divisors":{"H":[1]},"polarization":"H")"), validation_error);
    // reserved divisor names collide with the expression language
    for (std::string bad : {"D", "N", "pt", "box", "exc", "diag", "e1"})
        CHECK_THROWS_AS(doc(R"("name":"x","rho":1,"gram":[[4]],"canonical":[0],
            "c2":24,"divisors":{"H":[1],")" + bad + R"(":[1]},"polarization":"H")"),
            validation_error);
    // polarization must name a divisor and pair positively with itself
    CHECK_THROWS_AS(doc(R"("name":"x","rho":1,"gram":[[4]],"canonical":[0],
        "c2":24,"divisors":{"H":[1]},"polarization":"A")"), validation_error);
    CHECK_THROWS_AS(doc(R"("name":"x","rho":1,"gram":[[-4]],"canonical":[0],
        "c2":24,"divisors":{"H":[1]},"polarization":"H")"), validation_error);
    (void)base;
}

TEST_CASE("reserved name predicate") {
    CHECK(is_reserved_name("N"));
    CHECK(is_reserved_name("D"));
    CHECK(is_reserved_name("pt"));
    CHECK(is_reserved_name("box"));
    CHECK(is_reserved_name("exc"));
    CHECK(is_reserved_name("diag"));
    CHECK(is_reserved_name("e1"));
    CHECK(is_reserved_name("e12"));
    CHECK_FALSE(is_reserved_name("H"));
    CHECK_FALSE(is_reserved_name("sec"));
    CHECK_FALSE(is_reserved_name("ee"));
    CHECK_FALSE(is_reserved_name("e"));
}
