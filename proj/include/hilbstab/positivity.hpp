#pragma once

#include <optional>
#include <string>

#include "hilbstab/poly.hpp"

namespace hilbstab {

// Answer to "is p(n) > 0 for all large integers n, and from where on?".
//
//   AlwaysFrom(M):    p(n) > 0 for every integer n >= M, where M >= 1 is the
//                     smallest integer strictly beyond every real root
//                     (clamped below at 1); p(M) > 0 is re-verified exactly.
//   NeverEventually:  the leading coefficient is negative, so p(n) < 0 for
//                     all large n.
//   IdenticallyZero:  p = 0.
struct Positivity {
    enum class Kind { AlwaysFrom, NeverEventually, IdenticallyZero };

    Kind kind;
    Int from; // meaningful only for AlwaysFrom

    static Positivity always_from(Int m) { return {Kind::AlwaysFrom, std::move(m)}; }
    static Positivity never() { return {Kind::NeverEventually, 0}; }
    static Positivity zero() { return {Kind::IdenticallyZero, 0}; }

    bool is_always_from() const { return kind == Kind::AlwaysFrom; }

    friend bool operator==(const Positivity& a, const Positivity& b) {
        return a.kind == b.kind && (a.kind != Kind::AlwaysFrom || a.from == b.from);
    }

    std::string to_string() const {
        switch (kind) {
        case Kind::AlwaysFrom: return "positive for all N >= " + from.str();
        case Kind::NeverEventually: return "never eventually positive";
        default: return "identically zero";
        }
    }
};

Positivity eventually_positive(const Poly& p);

// Sturm-sequence root counting, exposed for the property tests.
//
// count_real_roots_in counts distinct real roots of p in the half-open
// interval (a, b]; count_all_real_roots counts them on the whole line.
int count_real_roots_in(const Poly& p, const Rational& a, const Rational& b);
int count_all_real_roots(const Poly& p);
bool has_real_root_geq(const Poly& p, const Rational& a); // any root in [a, oo)

} // namespace hilbstab
