#include "hilbstab/poly.hpp"

namespace hilbstab {

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (k == 0) {
            out += rational_to_string(mag);
        } else {
            if (!unit) out += rational_to_string(mag) + "*";
            out += (k == 1) ? "N" : "N^" + std::to_string(k);
        }
    }
    return out;
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    Rational lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational f = c / lead;
        quot[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

} // namespace hilbstab
