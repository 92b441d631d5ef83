#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbstab/poly.hpp"

namespace hilbstab {

// Numerical model of a smooth projective surface X with irregularity zero:
// the Neron-Severi lattice (a chosen basis with its Gram matrix), the
// canonical class in that basis, the second Chern number of the tangent
// bundle, and a distinguished ample polarization H. Everything downstream
// (the product ring, slopes, scan certificates) reads X only through this.
struct SurfaceData {
    std::string name;
    int rho = 0;
    std::vector<QVec> gram;                // rho x rho, symmetric
    QVec canonical;                        // K_X coordinates
    Rational c2;                           // c2(T_X), a number
    std::map<std::string, QVec> divisors;  // named classes, coordinates in the basis
    std::string polarization;              // key into `divisors`

    const QVec& polarization_vector() const { return divisors.at(polarization); }
    const QVec& divisor(const std::string& dname) const;

    QVec basis_vector(int i) const; // e_{i+1}

    // Intersection number x.y through the Gram matrix.
    Rational pair(const QVec& x, const QVec& y) const;
    Poly pair(const PolyVec& x, const PolyVec& y) const;

    // Throws validation_error naming the offending field.
    void validate() const;
};

inline PolyVec to_polyvec(const QVec& v) {
    PolyVec out;
    out.reserve(v.size());
    for (const auto& q : v) out.emplace_back(q);
    return out;
}

// A cycle class on X, graded by codimension: r0*[X] + (divisor part) + pt*[point].
// Components in codimension > 2 are identically zero on a surface, so products
// truncate silently.
struct CycleX {
    Poly r0;
    PolyVec div; // length rho
    Poly pt;

    static CycleX zero(int rho) { return {Poly(), PolyVec(static_cast<std::size_t>(rho)), Poly()}; }
    static CycleX unit(int rho) {
        CycleX c = zero(rho);
        c.r0 = Poly(1);
        return c;
    }
    static CycleX point(int rho) {
        CycleX c = zero(rho);
        c.pt = Poly(1);
        return c;
    }
    static CycleX divisor_class(PolyVec v) { return {Poly(), std::move(v), Poly()}; }
    static CycleX divisor_class(const QVec& v) { return divisor_class(to_polyvec(v)); }

    int rho() const { return static_cast<int>(div.size()); }
    bool is_zero() const;

    friend CycleX operator+(const CycleX& a, const CycleX& b);
    friend CycleX operator-(const CycleX& a, const CycleX& b);
    friend CycleX operator-(const CycleX& a);
    friend CycleX operator*(const Poly& s, const CycleX& a); // scalar
    friend bool operator==(const CycleX& a, const CycleX& b);
    friend bool operator!=(const CycleX& a, const CycleX& b) { return !(a == b); }
};

// Truncated intersection product on A*(X).
CycleX mul_x(const CycleX& a, const CycleX& b, const SurfaceData& s);

// Shipped example surfaces; each passes validate().
SurfaceData k3_preset(int d = 2);              // rho 1, gram [[2d]], K = 0, c2 = 24
SurfaceData quintic_preset();                  // rho 1, gram [[5]], K = e1, c2 = 55
SurfaceData rational_elliptic_preset();        // rho 2, K = -f != 0 with K^2 = 0, c2 = 12

// Exact JSON loader; rationals are integers or "p/q" strings, float syntax is
// rejected. Throws validation_error / input_error.
SurfaceData parse_surface(const std::string& json_text);
SurfaceData load_surface(const std::string& path);

// True for identifiers the expression language reserves (N, D, pt, box, exc,
// diag, e1, e2, ...); surface files may not use them as divisor names.
bool is_reserved_name(const std::string& name);

} // namespace hilbstab
