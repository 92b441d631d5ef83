#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hilbstab/rational.hpp"

namespace hilbstab {

// Univariate polynomial in the twist parameter N with exact rational
// coefficients. coeffs[k] is the coefficient of N^k; the vector never carries
// trailing zeros, so the zero polynomial is the empty vector and equality is
// plain representation equality. Poly is the single coefficient ring used by
// every cycle type: slopes stay symbolic in N until a threshold is extracted.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { // implicit: constants embed as degree-0 polys
        if (c != 0) coeffs_.push_back(c);
    }
    Poly(int c) : Poly(Rational(c)) {}

    // coefficients listed from the constant term upward
    static Poly from_coeffs(std::vector<Rational> cs) {
        Poly p;
        p.coeffs_ = std::move(cs);
        p.trim();
        return p;
    }

    // c * N^k
    static Poly monomial(const Rational& c, int k) {
        Poly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
            p.coeffs_.back() = c;
        }
        return p;
    }

    static Poly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for 0

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const { // Horner, exact
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d.coeffs_.push_back(coeffs_[k] * Rational(static_cast<unsigned>(k)));
        d.trim();
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
            r.coeffs_[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim(); // no trimming actually needed over an integral domain, kept for safety
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // "48*N^3 - 24*N^2 - 24*N + 12"; the output parses back as a scalar
    // expression of the cycle language, making it a bit-exact interchange form.
    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

using PolyVec = std::vector<Poly>;

// Euclidean division over Q: a = q*b + r with deg r < deg b.
struct PolyDivMod {
    Poly quot, rem;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

} // namespace hilbstab
