#include "hilbstab/identities.hpp"

#include <functional>

#include "hilbstab/errors.hpp"

namespace hilbstab {

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den_pick(0, 4);
    static const int dens[] = {1, 1, 1, 2, 3};
    return Rational(num(rng), dens[den_pick(rng)]);
}

} // namespace

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
    for (auto& c : coeffs) c = random_rational(rng);
    return Poly::from_coeffs(std::move(coeffs));
}

CycleX random_cycle_x(std::mt19937_64& rng, int rho) {
    CycleX c = CycleX::zero(rho);
    c.r0 = random_poly(rng);
    for (auto& d : c.div) d = random_poly(rng);
    c.pt = random_poly(rng);
    return c;
}

CycleD random_cycle_d(std::mt19937_64& rng, int rho) {
    return {random_cycle_x(rng, rho), random_cycle_x(rng, rho)};
}

CycleProduct random_product(std::mt19937_64& rng, int rho) {
    CycleProduct k = CycleProduct::zero(rho);
    k.s00 = random_poly(rng);
    k.s20 = random_poly(rng);
    k.s02 = random_poly(rng);
    k.s22 = random_poly(rng);
    for (auto& c : k.v10) c = random_poly(rng);
    for (auto& c : k.v01) c = random_poly(rng);
    for (auto& c : k.v12) c = random_poly(rng);
    for (auto& c : k.v21) c = random_poly(rng);
    for (auto& row : k.m11)
        for (auto& c : row) c = random_poly(rng);
    return k;
}

CycleBlowup random_blowup(std::mt19937_64& rng, const SurfaceData& s) {
    CycleBlowup u{random_product(rng, s.rho), random_cycle_x(rng, s.rho),
                  random_cycle_x(rng, s.rho)};
    u.normalize();
    return u;
}

CycleBlowup codim_part(const CycleBlowup& u, int k) {
    if (k < 0 || k > 4) throw input_error("codimension out of range");
    CycleBlowup c = u;
    c.normalize();
    CycleBlowup r = CycleBlowup::zero(c.rho());
    switch (k) {
    case 0:
        r.kunneth.s00 = c.kunneth.s00;
        break;
    case 1:
        r.kunneth.v10 = c.kunneth.v10;
        r.kunneth.v01 = c.kunneth.v01;
        r.exc.r0 = c.exc.r0;
        break;
    case 2:
        r.kunneth.s20 = c.kunneth.s20;
        r.kunneth.s02 = c.kunneth.s02;
        r.kunneth.m11 = c.kunneth.m11;
        r.exc.div = c.exc.div;
        r.diag.r0 = c.diag.r0;
        break;
    case 3:
        r.kunneth.v12 = c.kunneth.v12;
        r.kunneth.v21 = c.kunneth.v21;
        r.exc.pt = c.exc.pt;
        r.diag.div = c.diag.div;
        break;
    default:
        r.kunneth.s22 = c.kunneth.s22;
        break;
    }
    return r;
}

bool IdentitySuiteResult::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

std::string IdentitySuiteResult::to_text() const {
    std::string out = "identity suite on " + surface_name + " (seed "
                    + std::to_string(seed) + ")\n";
    for (const auto& c : checks) {
        out += c.passed() ? "  ok   " : "  FAIL ";
        out += c.name + " (" + std::to_string(c.trials) + " trials";
        if (!c.passed()) out += ", " + std::to_string(c.failures) + " failures";
        out += ")\n";
    }
    out += all_passed() ? "all identities hold\n" : "IDENTITY FAILURES PRESENT\n";
    return out;
}

IdentitySuiteResult run_identity_suite(const SurfaceData& s, std::uint64_t seed,
                                       int trials) {
    std::mt19937_64 rng(seed);
    IdentitySuiteResult result;
    result.surface_name = s.name;
    result.seed = seed;
    const int rho = s.rho;

    auto run = [&](const std::string& name, const std::function<bool()>& trial) {
        IdentityCheckResult c;
        c.name = name;
        c.trials = trials;
        for (int i = 0; i < trials; ++i)
            if (!trial()) ++c.failures;
        result.checks.push_back(std::move(c));
    };

    run("push(xi * a) equals diag(a)", [&] {
        CycleX a = random_cycle_x(rng, rho);
        CycleD xia = CycleD::zero(rho);
        xia.a1 = a;
        return push_i(xia, s) == CycleBlowup::from_diag(a);
    });

    run("pull(push(x)) equals -xi * x", [&] {
        CycleD x = random_cycle_d(rng, rho);
        CycleD neg_xi = CycleD::zero(rho);
        neg_xi.a1 = -CycleX::unit(rho);
        return pull_i(push_i(x, s), s) == mul_d(neg_xi, x, s);
    });

    run("exc(a) * box(b,c) equals exc(a*b*c)", [&] {
        CycleX a = random_cycle_x(rng, rho);
        CycleX b = random_cycle_x(rng, rho);
        CycleX c = random_cycle_x(rng, rho);
        CycleBlowup lhs = mul_blowup(CycleBlowup::from_exc(a),
                                     CycleBlowup::from_kunneth(box_product(b, c, s)), s);
        CycleBlowup rhs = CycleBlowup::from_exc(mul_x(a, mul_x(b, c, s), s));
        return lhs == rhs;
    });

    run("exc(a) * exc(b) equals -diag(a*b)", [&] {
        CycleX a = random_cycle_x(rng, rho);
        CycleX b = random_cycle_x(rng, rho);
        CycleBlowup lhs = mul_blowup(CycleBlowup::from_exc(a), CycleBlowup::from_exc(b), s);
        return lhs == -CycleBlowup::from_diag(mul_x(a, b, s));
    });

    run("pull(D) equals -xi", [&] {
        CycleD expected = CycleD::zero(rho);
        expected.a1 = -CycleX::unit(rho);
        return pull_i(exceptional_class(s), s) == expected;
    });

    run("D^2 equals -diag(1)", [&] {
        CycleBlowup d = exceptional_class(s);
        return mul_blowup(d, d, s) == -diagonal_class(s);
    });

    run("diag(1)^2 equals c2 * box(pt,pt)", [&] {
        CycleBlowup sq = mul_blowup(diagonal_class(s), diagonal_class(s), s);
        CycleBlowup expected = CycleBlowup::zero(rho);
        expected.kunneth.s22 = Poly{s.c2};
        return sq == expected;
    });

    run("product commutes", [&] {
        CycleBlowup u = random_blowup(rng, s);
        CycleBlowup v = random_blowup(rng, s);
        return mul_blowup(u, v, s) == mul_blowup(v, u, s);
    });

    run("product associates", [&] {
        CycleBlowup u = random_blowup(rng, s);
        CycleBlowup v = random_blowup(rng, s);
        CycleBlowup w = random_blowup(rng, s);
        return mul_blowup(mul_blowup(u, v, s), w, s)
            == mul_blowup(u, mul_blowup(v, w, s), s);
    });

    run("product distributes over sums", [&] {
        CycleBlowup u = random_blowup(rng, s);
        CycleBlowup v = random_blowup(rng, s);
        CycleBlowup w = random_blowup(rng, s);
        return mul_blowup(u, v + w, s)
            == mul_blowup(u, v, s) + mul_blowup(u, w, s);
    });

    run("degrees add under products", [&] {
        std::uniform_int_distribution<int> pick(0, 4);
        CycleBlowup u = codim_part(random_blowup(rng, s), pick(rng));
        CycleBlowup v = codim_part(random_blowup(rng, s), pick(rng));
        CycleBlowup prod = mul_blowup(u, v, s);
        CycleBlowup reassembled = CycleBlowup::zero(rho);
        for (int k = 0; k <= 4; ++k) reassembled = reassembled + codim_part(prod, k);
        if (reassembled != prod) return false;
        // The product of pure codims k1, k2 may only occupy k1 + k2.
        for (int k1 = 0; k1 <= 4; ++k1) {
            CycleBlowup u1 = codim_part(u, k1);
            if (u1.is_zero()) continue;
            for (int k2 = 0; k2 <= 4; ++k2) {
                CycleBlowup v2 = codim_part(v, k2);
                if (v2.is_zero()) continue;
                CycleBlowup p = mul_blowup(u1, v2, s);
                for (int k = 0; k <= 4; ++k)
                    if (k != k1 + k2 && !codim_part(p, k).is_zero()) return false;
            }
        }
        return true;
    });

    run("integrate is linear and supported in top degree", [&] {
        CycleBlowup u = random_blowup(rng, s);
        CycleBlowup v = random_blowup(rng, s);
        if (integrate(u + v) != integrate(u) + integrate(v)) return false;
        for (int k = 0; k < 4; ++k)
            if (!integrate(codim_part(u, k)).is_zero()) return false;
        return true;
    });

    return result;
}

} // namespace hilbstab
