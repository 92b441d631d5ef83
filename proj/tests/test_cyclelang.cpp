#include <doctest.h>

#include <random>

#include "hilbstab/cyclelang.hpp"
#include "hilbstab/errors.hpp"
#include "hilbstab/taut.hpp"

using namespace hilbstab;

namespace {

CycleBlowup ev(const std::string& text, const SurfaceData& s) {
    return eval(parse(text), s);
}

// Small random expression source used by the round-trip and homomorphism
// properties. Depth-bounded; always grammatically valid.
struct ExprGen {
    std::mt19937_64 rng;
    const SurfaceData& s;

    explicit ExprGen(std::uint64_t seed, const SurfaceData& surface)
        : rng(seed), s(surface) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    std::string rational_lit() {
        // nonnegative: a '-' sign lives at the head of a term, never on a
        // factor after '*'; terms roll their own leading minus
        int num = pick(7);
        if (pick(3) == 0) return std::to_string(num) + "/" + std::to_string(1 + pick(4));
        return std::to_string(num);
    }

    std::string divisor_name() {
        std::vector<std::string> names;
        for (const auto& [name, v] : s.divisors) names.push_back(name);
        names.push_back("e1");
        return names[static_cast<std::size_t>(pick(static_cast<int>(names.size())))];
    }

    std::string satom(int depth) {
        switch (pick(depth > 0 ? 6 : 5)) {
        case 0: return rational_lit();
        case 1: return "N";
        case 2: return "pt";
        case 3: return "1";
        case 4: return divisor_name();
        default: return "(" + sexpr(depth - 1) + ")";
        }
    }

    std::string sfactor(int depth) {
        std::string out = satom(depth);
        if (pick(4) == 0) out += "^" + std::to_string(pick(3));
        return out;
    }

    std::string sterm(int depth) {
        std::string out = pick(5) == 0 ? "-" : "";
        out += sfactor(depth);
        int factors = pick(2);
        for (int i = 0; i < factors; ++i) out += " * " + sfactor(depth);
        return out;
    }

    std::string sexpr(int depth) {
        std::string out = sterm(depth);
        int terms = pick(3);
        for (int i = 0; i < terms; ++i)
            out += (pick(2) ? " + " : " - ") + sterm(depth);
        return out;
    }

    std::string atom(int depth) {
        switch (pick(depth > 0 ? 7 : 3)) {
        case 0: return rational_lit();
        case 1: return "N";
        case 2: return "D";
        case 3: return "box(" + sexpr(depth - 1) + ", " + sexpr(depth - 1) + ")";
        case 4: return "exc(" + sexpr(depth - 1) + ")";
        case 5: return "diag(" + sexpr(depth - 1) + ")";
        default: return "(" + expr(depth - 1) + ")";
        }
    }

    std::string factor(int depth) {
        std::string out = atom(depth);
        if (pick(4) == 0) out += "^" + std::to_string(pick(4));
        return out;
    }

    std::string term(int depth) {
        std::string out = pick(5) == 0 ? "-" : "";
        out += factor(depth);
        int factors = pick(2);
        for (int i = 0; i < factors; ++i) out += " * " + factor(depth);
        return out;
    }

    std::string expr(int depth) {
        std::string out = term(depth);
        int terms = pick(3);
        for (int i = 0; i < terms; ++i)
            out += (pick(2) ? " + " : " - ") + term(depth);
        return out;
    }
};

} // namespace

TEST_CASE("worked expressions") {
    SurfaceData k3 = k3_preset();

    // three top-level terms, evaluating to the twisted polarization class
    Expr e = parse("box(N*H,1) + box(1,N*H) - D");
    PolyVec nh{Poly::variable()};
    CHECK(eval(e, k3) == blowup_divisor(nh, nh, Poly(-1), k3));

    // power node
    CHECK(ev("D^2", k3) == -diagonal_class(k3));

    // blow-up constructors cannot appear in surface-class positions
    CHECK_THROWS_AS(parse("box(exc(H),1)"), parse_error);
    try {
        parse("box(exc(H),1)");
    } catch (const parse_error& err) {
        CHECK(err.column == 5);
        CHECK(std::string(err.what()).find("column 5") != std::string::npos);
    }
}

TEST_CASE("evaluation agrees with the ring constructions") {
    SurfaceData k3 = k3_preset();
    CHECK(ev("D", k3) == exceptional_class(k3));
    CHECK(ev("diag(1)", k3) == diagonal_class(k3));
    CHECK(ev("exc(1)", k3) == exceptional_class(k3));
    CHECK(ev("box(1,1)", k3) == CycleBlowup::unit(1));
    CHECK(ev("3/2", k3) == Poly(Rational(3, 2)) * CycleBlowup::unit(1));
    CHECK(ev("N", k3) == Poly::variable() * CycleBlowup::unit(1));
    CHECK(integrate(ev("box(pt,pt)", k3)) == Poly(1));
    CHECK(integrate(ev("D^4", k3)) == Poly(24));
    CHECK(ev("(box(N*H,1)+box(1,N*H)-D)^3", k3) == hn_cubed(k3));
    CHECK(ev("box(H,H)", k3) ==
          CycleBlowup::from_kunneth(box_product(
              CycleX::divisor_class(k3.divisor("H")),
              CycleX::divisor_class(k3.divisor("H")), k3)));
    CHECK(ev("box(H^2,1)", k3) == ev("4 * box(pt,1)", k3));
    CHECK(ev("D^0", k3) == CycleBlowup::unit(1));
    CHECK(ev("D^9", k3).is_zero()); // truncation absorbs large exponents
    CHECK(ev("0", k3).is_zero());

    SurfaceData re = rational_elliptic_preset();
    CHECK(ev("box(sec + fib, 1)", re) ==
          ev("box(e1,1) + box(e2,1)", re));
    CHECK(ev("box(H,1)", re) == ev("box(e1 + 3*e2, 1)", re));
}

TEST_CASE("operator precedence and associativity") {
    SurfaceData k3 = k3_preset();
    // '*' binds tighter than '+'
    CHECK(ev("box(1,1) + 2 * D", k3) ==
          CycleBlowup::unit(1) + Poly(2) * exceptional_class(k3));
    // '^' binds tighter than unary minus: -D^2 = -(D^2) = diag(1)
    CHECK(ev("-D^2", k3) == diagonal_class(k3));
    // exponents attach to a single atom; compose with parentheses
    CHECK(ev("(2^2)^2", k3) == ev("16", k3));
    CHECK_THROWS_AS(parse("2^2^2"), parse_error); // one exponent per factor
    // unary minus applies to the whole leading product
    CHECK(ev("-2 * D + D", k3) == -exceptional_class(k3));
    // subtraction is left-associative
    CHECK(ev("3 - 2 - 1", k3).is_zero());
    // scalars in surface positions: box(2 * H, 1) = 2 box(H, 1)
    CHECK(ev("box(2 * H, 1)", k3) == ev("2 * box(H,1)", k3));
}

TEST_CASE("canonical printer round-trips through the parser") {
    SurfaceData k3 = k3_preset();
    CHECK(format(ev("D^2", k3), k3) == "- diag(1)");
    CHECK(format(CycleBlowup::zero(1), k3) == "0");
    CHECK(format(ev("0", k3), k3) == "0");

    // fixed point after one pass
    std::string once = format(ev("(box(N*H,1)+box(1,N*H)-D)^3", k3), k3);
    CHECK(format(ev(once, k3), k3) == once);
}

TEST_CASE("round-trip at the value level on generated expressions") {
    int checked = 0;
    std::uint64_t seed = 4242;
    for (const SurfaceData& s :
         {k3_preset(), quintic_preset(), rational_elliptic_preset()}) {
        ExprGen gen(seed++, s);
        for (int i = 0; i < 20; ++i) {
            std::string text = gen.expr(2);
            CAPTURE(text);
            CycleBlowup direct = ev(text, s);
            CycleBlowup reparsed = ev(format(direct, s), s);
            CHECK(direct == reparsed);
            ++checked;
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("evaluation is homomorphic over the ring operations") {
    std::uint64_t seed = 777;
    for (const SurfaceData& s : {k3_preset(), rational_elliptic_preset()}) {
        ExprGen gen(seed++, s);
        for (int i = 0; i < 15; ++i) {
            std::string a = gen.expr(1), b = gen.expr(1);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(ev("(" + a + ") * (" + b + ")", s) ==
                  mul_blowup(ev(a, s), ev(b, s), s));
            CHECK(ev("(" + a + ") + (" + b + ")", s) == ev(a, s) + ev(b, s));
            CHECK(ev("(" + a + ") - (" + b + ")", s) == ev(a, s) - ev(b, s));
            CHECK(ev("-(" + a + ")", s) == -ev(a, s));
        }
    }
}

TEST_CASE("errors carry 1-based columns inside the input") {
    SurfaceData k3 = k3_preset();
    auto column_of = [&](const std::string& text) -> int {
        try {
            eval(parse(text), k3);
        } catch (const parse_error& err) {
            CHECK(err.column >= 1);
            CHECK(err.column <= static_cast<int>(text.size()));
            return err.column;
        } catch (const input_error&) {
            return -1; // eval-level error, no column contract
        }
        return 0;
    };

    CHECK(column_of("box(pt,1") == 8);       // missing ')'
    CHECK(column_of("N + * H") == 5);        // operator with no left factor
    CHECK(column_of("D^-1") == 3);           // exponent must be a natural number
    CHECK(column_of("box(exc(H),1)") == 5);  // nesting violation
    CHECK(column_of("pt") >= 1);             // surface atom at blow-up level
    CHECK(column_of("H") >= 1);              // divisor outside box/exc/diag
    // at end-of-input the column clamps to the last position of the text
    CHECK(column_of("box(1,1") == 7);
    CHECK(column_of("(N") == 2);
    CHECK(column_of("1/0") >= 1);            // zero denominator is lexical
    CHECK(column_of("box(N,") == 6);

    // unknown divisor names fail at evaluation with a named column
    CHECK_THROWS_AS(ev("box(Q,1)", k3), input_error);
    try {
        ev("box(Q,1)", k3);
    } catch (const input_error& err) {
        CHECK(std::string(err.what()).find("Q") != std::string::npos);
    }

    // basis classes beyond the Picard rank are rejected
    CHECK_THROWS_AS(ev("box(e2,1)", k3), input_error);
    CHECK_THROWS_AS(ev("box(e99999999,1)", k3), input_error);
}

TEST_CASE("reserved and resolved names") {
    SurfaceData re = rational_elliptic_preset();
    CHECK(ev("box(e1,1)", re) ==
          CycleBlowup::from_kunneth(box_product(
              CycleX::divisor_class(re.basis_vector(0)), CycleX::unit(2), re)));
    CHECK(ev("box(sec,fib)", re) ==
          CycleBlowup::from_kunneth(box_product(
              CycleX::divisor_class(re.divisor("sec")),
              CycleX::divisor_class(re.divisor("fib")), re)));
}
