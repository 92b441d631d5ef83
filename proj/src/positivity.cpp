#include "hilbstab/positivity.hpp"

#include <algorithm>
#include <vector>

namespace hilbstab {
namespace {

int sign_of(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

// Divide by the (positive) content so coefficients stay small; positive
// scaling preserves every sign needed by Sturm's theorem.
Poly normalize_signs(const Poly& p) {
    if (p.is_zero()) return p;
    Rational scale;
    bool first = true;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            scale = mag;
            first = false;
        } else {
            // gcd of rationals: gcd of numerators over lcm of denominators is
            // overkill here; min keeps things bounded well enough.
            scale = std::min(scale, mag);
        }
    }
    std::vector<Rational> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c / scale);
    return Poly::from_coeffs(std::move(cs));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).rem;
        a = std::move(b);
        b = normalize_signs(r);
    }
    return a;
}

// Squarefree part p / gcd(p, p'); same real roots, all simple.
Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 1) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return poly_divmod(p, g).quot;
}

std::vector<Poly> sturm_chain(const Poly& squarefree) {
    std::vector<Poly> chain;
    chain.push_back(squarefree);
    if (squarefree.degree() >= 1) {
        chain.push_back(squarefree.derivative());
        while (chain.back().degree() >= 1) {
            Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).rem;
            if (r.is_zero()) break;
            chain.push_back(normalize_signs(-r));
        }
    }
    return chain;
}

// Sign variations at a point, zeros dropped. With a squarefree chain this
// makes V(a) - V(b) count roots in the half-open interval (a, b].
int variations_at(const std::vector<Poly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int variations_at_plus_inf(const std::vector<Poly>& chain) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q.leading());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int variations_at_minus_inf(const std::vector<Poly>& chain) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q.leading());
        if (s == 0) continue;
        if (q.degree() % 2 != 0) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// 1 + max |a_i / a_n|: every real root lies in [-B, B].
Rational cauchy_bound(const Poly& p) {
    Rational lead = p.leading();
    Rational best(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational m = p.coeff(k) / lead;
        if (m < 0) m = -m;
        if (m > best) best = m;
    }
    return best + 1;
}

} // namespace

int count_real_roots_in(const Poly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw input_error("root count of the zero polynomial");
    if (b < a) return 0;
    Poly sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    auto chain = sturm_chain(sf);
    return variations_at(chain, a) - variations_at(chain, b);
}

int count_all_real_roots(const Poly& p) {
    if (p.is_zero()) throw input_error("root count of the zero polynomial");
    Poly sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    auto chain = sturm_chain(sf);
    return variations_at_minus_inf(chain) - variations_at_plus_inf(chain);
}

bool has_real_root_geq(const Poly& p, const Rational& a) {
    if (p.is_zero()) throw input_error("root query on the zero polynomial");
    if (p.eval(a) == 0) return true;
    Poly sf = squarefree_part(p);
    if (sf.degree() == 0) return false;
    auto chain = sturm_chain(sf);
    return variations_at(chain, a) - variations_at_plus_inf(chain) > 0;
}

Positivity eventually_positive(const Poly& p) {
    if (p.is_zero()) return Positivity::zero();
    if (p.leading() < 0) return Positivity::never();

    Int m(1);
    if (p.degree() >= 1 && count_all_real_roots(p) > 0) {
        // Smallest integer m with no real root >= m, by binary search between
        // integer Cauchy bounds; the predicate is monotone in m.
        Int hi = floor_rational(cauchy_bound(p)) + 1; // no roots >= hi
        Int lo = -hi;                                 // at least one root >= lo
        while (lo + 1 < hi) {
            Int mid = (lo + hi) / 2;
            if (has_real_root_geq(p, Rational(mid)))
                lo = mid;
            else
                hi = mid;
        }
        m = hi;
        if (m < 1) m = 1;
    }
    if (!(p.eval(Rational(m)) > 0))
        throw std::logic_error("positivity threshold failed its exactness check");
    return Positivity::always_from(m);
}

} // namespace hilbstab
