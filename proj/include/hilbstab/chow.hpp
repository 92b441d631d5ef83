#pragma once

#include "hilbstab/surface.hpp"

namespace hilbstab {

// Algebraic Kunneth classes on X x X: components indexed by the pair of
// codimensions on the two factors. (1,1) carries a rho x rho coefficient
// matrix over the chosen NS basis, m11[i][j] multiplying e_i (x) e_j.
struct CycleProduct {
    Poly s00, s20, s02, s22;
    PolyVec v10, v01, v12, v21;
    std::vector<PolyVec> m11;

    static CycleProduct zero(int rho);
    static CycleProduct unit(int rho);

    int rho() const { return static_cast<int>(v10.size()); }
    bool is_zero() const;

    friend CycleProduct operator+(const CycleProduct& a, const CycleProduct& b);
    friend CycleProduct operator-(const CycleProduct& a, const CycleProduct& b);
    friend CycleProduct operator-(const CycleProduct& a);
    friend CycleProduct operator*(const Poly& s, const CycleProduct& a);
    friend bool operator==(const CycleProduct& a, const CycleProduct& b);
    friend bool operator!=(const CycleProduct& a, const CycleProduct& b) { return !(a == b); }
};

CycleProduct mul_product(const CycleProduct& a, const CycleProduct& b, const SurfaceData& s);

// x (x) y for cycle classes on the factors.
CycleProduct box_product(const CycleX& x, const CycleX& y, const SurfaceData& s);

// Restriction to the diagonal (the ring map sending x (x) y to x.y).
CycleX delta_restrict(const CycleProduct& k, const SurfaceData& s);

// Classes on the exceptional divisor D = P(T_X): A*(D) is A*(X)[xi] modulo
// xi^2 + c1(T_X) xi + c2(T_X), stored as a0 + xi*a1 with a0, a1 on X.
// c1(T_X) = -K_X is substituted from the surface wherever the relation fires.
struct CycleD {
    CycleX a0, a1;

    static CycleD zero(int rho) { return {CycleX::zero(rho), CycleX::zero(rho)}; }
    static CycleD xi(int rho) { return {CycleX::zero(rho), CycleX::unit(rho)}; }

    friend CycleD operator+(const CycleD& a, const CycleD& b) { return {a.a0 + b.a0, a.a1 + b.a1}; }
    friend CycleD operator-(const CycleD& a, const CycleD& b) { return {a.a0 - b.a0, a.a1 - b.a1}; }
    friend CycleD operator-(const CycleD& a) { return {-a.a0, -a.a1}; }
    friend CycleD operator*(const Poly& s, const CycleD& a) { return {s * a.a0, s * a.a1}; }
    friend bool operator==(const CycleD& a, const CycleD& b) { return a.a0 == b.a0 && a.a1 == b.a1; }
    friend bool operator!=(const CycleD& a, const CycleD& b) { return !(a == b); }
};

CycleD mul_d(const CycleD& a, const CycleD& b, const SurfaceData& s);

// A class on the blow-up of X x X along the diagonal, written as
//
//     sigma^*(kunneth) + i_*(sigma_D^*(exc)) + sigma^*(Delta_*(diag)).
//
// The exc slot holds the input cycle on X (codimension on the blow-up is one
// higher); the diag slot is kept formal for inputs of codimension 0 and 1,
// because those diagonal pushforwards are not in the algebraic Kunneth span.
// Delta_*(pt) = pt (x) pt *is* Kunneth, so normalization merges the diag point
// part into kunneth.s22 and equality is representation equality afterwards.
//
// Products close over this shape:
//   (i)   Kunneth x Kunneth, componentwise on the factors;
//   (ii)  exc(a).sigma^*(K)    = exc(a.Delta^*(K));
//   (iii) exc(a).exc(b)        = -diag(a.b);
//   (iv)  diag(a).sigma^*(K)   = diag(a.Delta^*(K));
//   (v)   diag(a).exc(b)       = c2(T_X).(a.b)_0 exc(pt);
//   (vi)  diag(a).diag(b)      = c2(T_X).(a.b)_0 diag(pt).
// (ii)-(iv) are projection-formula identities; (v) and (vi) follow from the
// projection formula plus the diagonal self-intersection Delta^*Delta_* =
// . c2(T_X). The system is commutative and associative for every surface.
struct CycleBlowup {
    CycleProduct kunneth;
    CycleX exc;
    CycleX diag;

    static CycleBlowup zero(int rho);
    static CycleBlowup unit(int rho);
    static CycleBlowup from_kunneth(CycleProduct k);
    static CycleBlowup from_exc(CycleX a);
    static CycleBlowup from_diag(CycleX a); // normalizes

    int rho() const { return exc.rho(); }
    bool is_zero() const;
    void normalize();

    friend CycleBlowup operator+(const CycleBlowup& a, const CycleBlowup& b);
    friend CycleBlowup operator-(const CycleBlowup& a, const CycleBlowup& b);
    friend CycleBlowup operator-(const CycleBlowup& a);
    friend CycleBlowup operator*(const Poly& s, const CycleBlowup& a);
    friend bool operator==(const CycleBlowup& a, const CycleBlowup& b);
    friend bool operator!=(const CycleBlowup& a, const CycleBlowup& b) { return !(a == b); }
};

CycleBlowup mul_blowup(const CycleBlowup& u, const CycleBlowup& v, const SurfaceData& s);

// Degree of the codimension-4 part; classes of lower codimension integrate to 0.
Poly integrate(const CycleBlowup& u);

// i_* and i^* along the inclusion of the exceptional divisor:
//   push_i(a0 + xi a1) = exc(a0) + diag(a1)
//   pull_i(kunneth)    = sigma_D^*(Delta^* kunneth)
//   pull_i(exc(a))     = -xi.sigma_D^*(a)
//   pull_i(diag(a))    = -xi^2 sigma_D^*(a), reduced in A*(D)
CycleBlowup push_i(const CycleD& d, const SurfaceData& s);
CycleD pull_i(const CycleBlowup& u, const SurfaceData& s);

// The exceptional divisor class D and the pulled-back diagonal sigma^*Delta.
CycleBlowup exceptional_class(const SurfaceData& s);
CycleBlowup diagonal_class(const SurfaceData& s);

// g (x) 1 + 1 (x) h + a D
CycleBlowup blowup_divisor(const PolyVec& g, const PolyVec& h, const Poly& a,
                           const SurfaceData& s);
CycleBlowup blowup_divisor(const QVec& g, const QVec& h, const Rational& a,
                           const SurfaceData& s);

// Divisors on the Hilbert square, written g + m*delta with 2*delta the class
// of the nonreduced locus; the double cover pi identifies pi^*(delta) = D.
struct HilbDivisor {
    PolyVec g;
    Poly delta_mult;

    friend bool operator==(const HilbDivisor& a, const HilbDivisor& b) {
        return a.g == b.g && a.delta_mult == b.delta_mult;
    }
};

CycleBlowup pi_pull(const HilbDivisor& d, const SurfaceData& s);
// Defined for S2-symmetric divisor classes only: (g, g, a) maps to 2g + 2a*delta.
HilbDivisor pi_push(const CycleBlowup& u, const SurfaceData& s);

// Canonical classes: of the blow-up as a divisor class (K_X, K_X, 1), and of
// the exceptional divisor D, where c1(omega_D) = 2 sigma_D^*(K_X) - 2 xi.
CycleBlowup canonical_class_blowup(const SurfaceData& s);
CycleD canonical_class_d(const SurfaceData& s);

// Canonical text form, reparseable by the expression language: a signed sum
// of box(x,y) / exc(a) / diag(a) terms with polynomial coefficients, Kunneth
// terms ordered by bidegree, then exc, then diag; basis classes print as
// e1..e<rho>. The zero class prints as "0".
std::string format_cycle(const CycleBlowup& u, const SurfaceData& s);

} // namespace hilbstab
