#include <doctest.h>

#include "hilbstab/errors.hpp"
#include "hilbstab/identities.hpp"

using namespace hilbstab;

namespace {

CycleBlowup pow_blowup(const CycleBlowup& u, int k, const SurfaceData& s) {
    CycleBlowup acc = CycleBlowup::unit(s.rho);
    for (int i = 0; i < k; ++i) acc = mul_blowup(acc, u, s);
    return acc;
}

} // namespace

TEST_CASE("identity suites pass on every preset") {
    for (const SurfaceData& s :
         {k3_preset(), quintic_preset(), rational_elliptic_preset()}) {
        IdentitySuiteResult res = run_identity_suite(s, 20240 + s.rho, 100);
        INFO(res.to_text());
        CHECK(res.all_passed());
        CHECK(res.checks.size() == 12);
        for (const auto& c : res.checks) CHECK(c.trials == 100);
    }
}

TEST_CASE("box products and diagonal restriction") {
    SurfaceData k3 = k3_preset();
    CycleX h = CycleX::divisor_class(k3.divisor("H"));
    CycleX one = CycleX::unit(1);
    CycleX pt = CycleX::point(1);

    CycleProduct hh = box_product(h, h, k3);
    CHECK(delta_restrict(hh, k3) == mul_x(h, h, k3));
    CHECK(delta_restrict(box_product(h, one, k3), k3) == h);
    CHECK(delta_restrict(box_product(pt, one, k3), k3) == pt);
    // pt (x) pt restricts to a codim-4 class, which a surface cannot hold
    CHECK(delta_restrict(box_product(pt, pt, k3), k3).is_zero());

    // product of box classes is the componentwise product
    CycleProduct lhs = mul_product(box_product(h, one, k3), box_product(one, h, k3), k3);
    CHECK(lhs == box_product(h, h, k3));
}

TEST_CASE("powers of the exceptional divisor") {
    for (const SurfaceData& s :
         {k3_preset(), quintic_preset(), rational_elliptic_preset()}) {
        CAPTURE(s.name);
        CycleBlowup d = exceptional_class(s);
        CycleBlowup d2 = pow_blowup(d, 2, s);

        // D^2 = -(pulled back diagonal)
        CHECK(d2 == -diagonal_class(s));

        // D^3 = -c2 exc(pt)
        CycleX expect3 = CycleX::zero(s.rho);
        expect3.pt = Poly(-s.c2);
        CHECK(pow_blowup(d, 3, s) == CycleBlowup::from_exc(expect3));

        // D^4 integrates to c2
        CHECK(integrate(pow_blowup(d, 4, s)) == Poly(s.c2));

        // the squared diagonal lands in the Kunneth point class
        CycleBlowup diag2 = mul_blowup(diagonal_class(s), diagonal_class(s), s);
        CycleProduct expect = CycleProduct::zero(s.rho);
        expect.s22 = Poly(s.c2);
        CHECK(diag2 == CycleBlowup::from_kunneth(expect));
    }
}

TEST_CASE("exceptional products on the quartic surface") {
    SurfaceData k3 = k3_preset();
    CycleX h = CycleX::divisor_class(k3.divisor("H"));

    // exc(h).exc(h) = -diag(h.h) = -4 diag(pt), and diag(pt) normalizes to pt (x) pt
    CycleBlowup prod = mul_blowup(CycleBlowup::from_exc(h), CycleBlowup::from_exc(h), k3);
    CycleProduct expect = CycleProduct::zero(1);
    expect.s22 = Poly(-4);
    CHECK(prod == CycleBlowup::from_kunneth(expect));
    CHECK(integrate(prod) == Poly(-4));

    // exc(a).box(b,c) = exc(a.b.c)
    CycleBlowup kun = CycleBlowup::from_kunneth(box_product(h, h, k3));
    CycleBlowup mixed = mul_blowup(CycleBlowup::from_exc(CycleX::unit(1)), kun, k3);
    CycleX expect_exc = CycleX::zero(1);
    expect_exc.pt = Poly(4); // restriction h.h of the box class
    CHECK(mixed == CycleBlowup::from_exc(expect_exc));
}

TEST_CASE("restriction to the exceptional divisor") {
    SurfaceData k3 = k3_preset();
    CycleX h = CycleX::divisor_class(k3.divisor("H"));

    // i*(D) = -xi
    CHECK(pull_i(exceptional_class(k3), k3) == -CycleD::xi(1));

    // i*(sigma*(h (x) h)) = sigma_D*(h.h) = 4 sigma_D*(pt)
    CycleD res = pull_i(CycleBlowup::from_kunneth(box_product(h, h, k3)), k3);
    CycleD expect = CycleD::zero(1);
    expect.a0.pt = Poly(4);
    CHECK(res == expect);

    CHECK(pull_i(CycleBlowup::zero(1), k3) == CycleD::zero(1));

    // push-pull composition: pull_i(push_i(x)) = -xi.x, including the xi^2 reduction
    SurfaceData q = quintic_preset();
    CycleD x = CycleD::zero(1);
    x.a0 = CycleX::divisor_class(q.divisor("H"));
    x.a1 = CycleX::unit(1);
    CycleD lhs = pull_i(push_i(x, q), q);
    CycleD rhs = mul_d(-CycleD::xi(1), x, q);
    CHECK(lhs == rhs);

    // push_i lands exc for the xi-free part and diag for the xi part
    CycleBlowup pushed = push_i(x, q);
    CHECK(pushed == CycleBlowup::from_exc(x.a0) + CycleBlowup::from_diag(x.a1));
}

TEST_CASE("ring on the exceptional divisor reduces xi^2") {
    // A*(D) = A*(X)[xi] / (xi^2 + c1(T_X) xi + c2(T_X)) with c1(T_X) = -K
    SurfaceData q = quintic_preset();
    CycleD xi = CycleD::xi(1);
    CycleD xi2 = mul_d(xi, xi, q);
    // xi^2 = -c1 xi - c2 = K xi - c2
    CycleD expect = CycleD::zero(1);
    expect.a1 = CycleX::divisor_class(q.canonical);
    expect.a0.pt = Poly(-q.c2);
    CHECK(xi2 == expect);

    SurfaceData k3 = k3_preset();
    CycleD xi2k = mul_d(CycleD::xi(1), CycleD::xi(1), k3);
    CycleD expectk = CycleD::zero(1);
    expectk.a0.pt = Poly(-24);
    CHECK(xi2k == expectk);
}

TEST_CASE("transfer along the double cover") {
    SurfaceData k3 = k3_preset();
    PolyVec zero1{Poly()};

    // pull(0 + 1 delta) = D
    CHECK(pi_pull(HilbDivisor{zero1, Poly(1)}, k3) == exceptional_class(k3));

    // push(D) = 0 + 2 delta
    CHECK(pi_push(exceptional_class(k3), k3) == HilbDivisor{zero1, Poly(2)});

    // pull(N H - delta) = NH (x) 1 + 1 (x) NH - D
    PolyVec nh{Poly::variable()};
    CycleBlowup pulled = pi_pull(HilbDivisor{nh, Poly(-1)}, k3);
    CHECK(pulled == blowup_divisor(nh, nh, Poly(-1), k3));

    // push o pull doubles
    HilbDivisor d{nh, Poly(3)};
    HilbDivisor doubled = pi_push(pi_pull(d, k3), k3);
    CHECK(doubled == (HilbDivisor{PolyVec{Poly::monomial(2, 1)}, Poly(6)}));

    // push of a non-symmetric divisor has no S2-invariant preimage
    SurfaceData re = rational_elliptic_preset();
    CycleBlowup bad = blowup_divisor(re.divisor("sec"), re.divisor("fib"), Rational(0), re);
    CHECK_THROWS_AS(pi_push(bad, re), input_error);
    // push of a non-divisor class is rejected
    CHECK_THROWS_AS(pi_push(diagonal_class(k3), k3), input_error);
}

TEST_CASE("canonical classes") {
    SurfaceData k3 = k3_preset();
    // K_X = 0 makes the blow-up canonical class exactly the exceptional divisor
    CHECK(canonical_class_blowup(k3) == exceptional_class(k3));
    // and omega_D = -2 xi
    CHECK(canonical_class_d(k3) == Poly(-2) * CycleD::xi(1));

    SurfaceData q = quintic_preset();
    CHECK(canonical_class_blowup(q) ==
          blowup_divisor(q.canonical, q.canonical, Rational(1), q));
    CycleD wd = canonical_class_d(q);
    CycleD expect = Poly(-2) * CycleD::xi(1);
    expect.a0 = Poly(2) * CycleX::divisor_class(q.canonical);
    CHECK(wd == expect);
}

TEST_CASE("integration is supported in the top codimension only") {
    SurfaceData re = rational_elliptic_preset();
    CHECK(integrate(CycleBlowup::unit(2)).is_zero());
    CHECK(integrate(exceptional_class(re)).is_zero());
    CHECK(integrate(diagonal_class(re)).is_zero());
    CycleProduct p22 = CycleProduct::zero(2);
    p22.s22 = Poly(7);
    CHECK(integrate(CycleBlowup::from_kunneth(p22)) == Poly(7));
    // diag(pt) is the class of the diagonal point pair
    CycleX dpt = CycleX::zero(2);
    dpt.pt = Poly(1);
    CHECK(integrate(CycleBlowup::from_diag(dpt)) == Poly(1));
}

TEST_CASE("normalization merges the diagonal point class") {
    SurfaceData k3 = k3_preset();
    CycleX dpt = CycleX::zero(1);
    dpt.pt = Poly(5);
    CycleBlowup u = CycleBlowup::from_diag(dpt);
    CHECK(u.diag.is_zero());
    CHECK(u.kunneth.s22 == Poly(5));

    // equal values written differently compare equal after normalization
    CycleProduct direct = CycleProduct::zero(1);
    direct.s22 = Poly(5);
    CHECK(u == CycleBlowup::from_kunneth(direct));
}

TEST_CASE("canonical text form") {
    SurfaceData k3 = k3_preset();
    CycleBlowup d = exceptional_class(k3);
    CHECK(format_cycle(mul_blowup(d, d, k3), k3) == "- diag(1)");
    CHECK(format_cycle(CycleBlowup::zero(1), k3) == "0");
    CHECK(format_cycle(CycleBlowup::unit(1), k3) == "box(1,1)");
    CHECK(format_cycle(d, k3) == "exc(1)");
    CHECK(format_cycle(blowup_divisor(k3.divisor("H"), k3.divisor("H"), Rational(-1), k3), k3)
          == "box(e1,1) + box(1,e1) - exc(1)");

    SurfaceData re = rational_elliptic_preset();
    CycleBlowup v = blowup_divisor(re.divisor("H"), re.divisor("sec"), Rational(2), re);
    CHECK(format_cycle(v, re) == "box(e1,1) + 3*box(e2,1) + box(1,e1) + 2*exc(1)");
}
