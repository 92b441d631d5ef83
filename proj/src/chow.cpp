#include "hilbstab/chow.hpp"

#include "hilbstab/errors.hpp"

namespace hilbstab {

namespace {

PolyVec zero_vec(int rho) { return PolyVec(static_cast<size_t>(rho), Poly{}); }

std::vector<PolyVec> zero_mat(int rho) {
    return std::vector<PolyVec>(static_cast<size_t>(rho), zero_vec(rho));
}

void check_same_rho(int a, int b) {
    if (a != b)
        throw input_error("cycle classes live over surfaces of different Picard rank");
}

PolyVec add_vec(const PolyVec& a, const PolyVec& b) {
    PolyVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

PolyVec scale_vec(const Poly& s, const PolyVec& a) {
    PolyVec r = a;
    for (auto& c : r) c = s * c;
    return r;
}

bool vec_zero(const PolyVec& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

CycleX canonical_cycle(const SurfaceData& s) {
    return CycleX::divisor_class(s.canonical);
}

} // namespace

CycleProduct CycleProduct::zero(int rho) {
    CycleProduct r;
    r.v10 = zero_vec(rho);
    r.v01 = zero_vec(rho);
    r.v12 = zero_vec(rho);
    r.v21 = zero_vec(rho);
    r.m11 = zero_mat(rho);
    return r;
}

CycleProduct CycleProduct::unit(int rho) {
    CycleProduct r = zero(rho);
    r.s00 = Poly{1};
    return r;
}

bool CycleProduct::is_zero() const {
    if (!s00.is_zero() || !s20.is_zero() || !s02.is_zero() || !s22.is_zero()) return false;
    if (!vec_zero(v10) || !vec_zero(v01) || !vec_zero(v12) || !vec_zero(v21)) return false;
    for (const auto& row : m11)
        if (!vec_zero(row)) return false;
    return true;
}

CycleProduct operator+(const CycleProduct& a, const CycleProduct& b) {
    check_same_rho(a.rho(), b.rho());
    CycleProduct r = a;
    r.s00 = r.s00 + b.s00;
    r.s20 = r.s20 + b.s20;
    r.s02 = r.s02 + b.s02;
    r.s22 = r.s22 + b.s22;
    r.v10 = add_vec(r.v10, b.v10);
    r.v01 = add_vec(r.v01, b.v01);
    r.v12 = add_vec(r.v12, b.v12);
    r.v21 = add_vec(r.v21, b.v21);
    for (int i = 0; i < r.rho(); ++i) r.m11[i] = add_vec(r.m11[i], b.m11[i]);
    return r;
}

CycleProduct operator-(const CycleProduct& a, const CycleProduct& b) {
    return a + (-b);
}

CycleProduct operator-(const CycleProduct& a) {
    return Poly{-1} * a;
}

CycleProduct operator*(const Poly& s, const CycleProduct& a) {
    CycleProduct r = a;
    r.s00 = s * r.s00;
    r.s20 = s * r.s20;
    r.s02 = s * r.s02;
    r.s22 = s * r.s22;
    r.v10 = scale_vec(s, r.v10);
    r.v01 = scale_vec(s, r.v01);
    r.v12 = scale_vec(s, r.v12);
    r.v21 = scale_vec(s, r.v21);
    for (auto& row : r.m11) row = scale_vec(s, row);
    return r;
}

bool operator==(const CycleProduct& a, const CycleProduct& b) {
    return (a - b).is_zero();
}

CycleProduct mul_product(const CycleProduct& a, const CycleProduct& b, const SurfaceData& s) {
    check_same_rho(a.rho(), s.rho);
    check_same_rho(b.rho(), s.rho);
    const int rho = s.rho;
    CycleProduct r = CycleProduct::zero(rho);

    // Pairing of divisor coefficient vectors through the intersection form.
    auto q = [&](const PolyVec& x, const PolyVec& y) { return s.pair(x, y); };

    r.s00 = a.s00 * b.s00;
    r.s20 = a.s00 * b.s20 + b.s00 * a.s20 + q(a.v10, b.v10);
    r.s02 = a.s00 * b.s02 + b.s00 * a.s02 + q(a.v01, b.v01);
    for (int i = 0; i < rho; ++i) {
        r.v10[i] = a.s00 * b.v10[i] + b.s00 * a.v10[i];
        r.v01[i] = a.s00 * b.v01[i] + b.s00 * a.v01[i];
    }
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j)
            r.m11[i][j] = a.s00 * b.m11[i][j] + b.s00 * a.m11[i][j]
                        + a.v10[i] * b.v01[j] + b.v10[i] * a.v01[j];

    // (1,1).(0,1) lands in (1,2) by pairing the second-factor slots; likewise
    // (1,1).(1,0) lands in (2,1) through the first factor.
    for (int i = 0; i < rho; ++i) {
        Poly acc = a.s00 * b.v12[i] + b.s00 * a.v12[i]
                 + a.v10[i] * b.s02 + b.v10[i] * a.s02;
        for (int j = 0; j < rho; ++j)
            for (int k = 0; k < rho; ++k)
                acc = acc + (a.m11[i][j] * b.v01[k] + b.m11[i][j] * a.v01[k]) * Poly{s.gram[j][k]};
        r.v12[i] = acc;
    }
    for (int j = 0; j < rho; ++j) {
        Poly acc = a.s00 * b.v21[j] + b.s00 * a.v21[j]
                 + a.v01[j] * b.s20 + b.v01[j] * a.s20;
        for (int i = 0; i < rho; ++i)
            for (int k = 0; k < rho; ++k)
                acc = acc + (a.m11[i][j] * b.v10[k] + b.m11[i][j] * a.v10[k]) * Poly{s.gram[i][k]};
        r.v21[j] = acc;
    }

    Poly top = a.s00 * b.s22 + b.s00 * a.s22
             + a.s20 * b.s02 + a.s02 * b.s20
             + q(a.v10, b.v12) + q(b.v10, a.v12)
             + q(a.v01, b.v21) + q(b.v01, a.v21);
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j)
            for (int k = 0; k < rho; ++k)
                for (int l = 0; l < rho; ++l)
                    top = top + a.m11[i][j] * b.m11[k][l]
                              * Poly{s.gram[i][k] * s.gram[j][l]};
    r.s22 = top;
    return r;
}

CycleProduct box_product(const CycleX& x, const CycleX& y, const SurfaceData& s) {
    check_same_rho(x.rho(), s.rho);
    check_same_rho(y.rho(), s.rho);
    CycleProduct r = CycleProduct::zero(s.rho);
    r.s00 = x.r0 * y.r0;
    r.s20 = x.pt * y.r0;
    r.s02 = x.r0 * y.pt;
    r.s22 = x.pt * y.pt;
    for (int i = 0; i < s.rho; ++i) {
        r.v10[i] = x.div[i] * y.r0;
        r.v01[i] = x.r0 * y.div[i];
        r.v12[i] = x.div[i] * y.pt;
        r.v21[i] = x.pt * y.div[i];
        for (int j = 0; j < s.rho; ++j) r.m11[i][j] = x.div[i] * y.div[j];
    }
    return r;
}

CycleX delta_restrict(const CycleProduct& k, const SurfaceData& s) {
    check_same_rho(k.rho(), s.rho);
    CycleX r = CycleX::zero(s.rho);
    r.r0 = k.s00;
    Poly pt = k.s20 + k.s02;
    for (int i = 0; i < s.rho; ++i) {
        r.div[i] = k.v10[i] + k.v01[i];
        for (int j = 0; j < s.rho; ++j) pt = pt + k.m11[i][j] * Poly{s.gram[i][j]};
    }
    r.pt = pt;
    return r;
}

CycleD mul_d(const CycleD& a, const CycleD& b, const SurfaceData& s) {
    check_same_rho(a.a0.rho(), s.rho);
    check_same_rho(b.a0.rho(), s.rho);
    // xi^2 = -c1 xi - c2 = K_X xi - c2 with c1 = c1(T_X) = -K_X.
    CycleX cross = mul_x(a.a1, b.a1, s);
    CycleD r = CycleD::zero(s.rho);
    r.a0 = mul_x(a.a0, b.a0, s);
    r.a0.pt = r.a0.pt - s.c2 * cross.r0;
    r.a1 = mul_x(a.a0, b.a1, s) + mul_x(a.a1, b.a0, s)
         + mul_x(canonical_cycle(s), cross, s);
    return r;
}

CycleBlowup CycleBlowup::zero(int rho) {
    return {CycleProduct::zero(rho), CycleX::zero(rho), CycleX::zero(rho)};
}

CycleBlowup CycleBlowup::unit(int rho) {
    return {CycleProduct::unit(rho), CycleX::zero(rho), CycleX::zero(rho)};
}

CycleBlowup CycleBlowup::from_kunneth(CycleProduct k) {
    int rho = k.rho();
    return {std::move(k), CycleX::zero(rho), CycleX::zero(rho)};
}

CycleBlowup CycleBlowup::from_exc(CycleX a) {
    int rho = a.rho();
    return {CycleProduct::zero(rho), std::move(a), CycleX::zero(rho)};
}

CycleBlowup CycleBlowup::from_diag(CycleX a) {
    int rho = a.rho();
    CycleBlowup r{CycleProduct::zero(rho), CycleX::zero(rho), std::move(a)};
    r.normalize();
    return r;
}

bool CycleBlowup::is_zero() const {
    CycleBlowup c = *this;
    c.normalize();
    return c.kunneth.is_zero() && c.exc.is_zero() && c.diag.is_zero();
}

// The diagonal pushforward of a point is the Kunneth class pt (x) pt, so the
// point part of the diag slot has a canonical home; moving it there makes
// representation equality the same thing as equality of classes.
void CycleBlowup::normalize() {
    if (diag.pt.is_zero()) return;
    kunneth.s22 = kunneth.s22 + diag.pt;
    diag.pt = Poly{};
}

CycleBlowup operator+(const CycleBlowup& a, const CycleBlowup& b) {
    CycleBlowup r{a.kunneth + b.kunneth, a.exc + b.exc, a.diag + b.diag};
    r.normalize();
    return r;
}

CycleBlowup operator-(const CycleBlowup& a, const CycleBlowup& b) {
    return a + (-b);
}

CycleBlowup operator-(const CycleBlowup& a) {
    return Poly{-1} * a;
}

CycleBlowup operator*(const Poly& s, const CycleBlowup& a) {
    CycleBlowup r{s * a.kunneth, s * a.exc, s * a.diag};
    r.normalize();
    return r;
}

bool operator==(const CycleBlowup& a, const CycleBlowup& b) {
    return (a - b).is_zero();
}

CycleBlowup mul_blowup(const CycleBlowup& u, const CycleBlowup& v, const SurfaceData& s) {
    check_same_rho(u.rho(), s.rho);
    check_same_rho(v.rho(), s.rho);
    CycleBlowup r = CycleBlowup::zero(s.rho);

    r.kunneth = mul_product(u.kunneth, v.kunneth, s);

    const CycleX du = delta_restrict(u.kunneth, s);
    const CycleX dv = delta_restrict(v.kunneth, s);

    // exc x Kunneth and the exc part of diag x exc.
    r.exc = mul_x(u.exc, dv, s) + mul_x(v.exc, du, s);
    r.exc.pt = r.exc.pt + s.c2 * (u.diag.r0 * v.exc.r0 + v.diag.r0 * u.exc.r0);

    // diag x Kunneth, exc x exc, diag x diag.
    r.diag = mul_x(u.diag, dv, s) + mul_x(v.diag, du, s) - mul_x(u.exc, v.exc, s);
    r.diag.pt = r.diag.pt + s.c2 * u.diag.r0 * v.diag.r0;

    r.normalize();
    return r;
}

Poly integrate(const CycleBlowup& u) {
    return u.kunneth.s22 + u.diag.pt;
}

CycleBlowup push_i(const CycleD& d, const SurfaceData& s) {
    check_same_rho(d.a0.rho(), s.rho);
    CycleBlowup r = CycleBlowup::zero(s.rho);
    r.exc = d.a0;
    r.diag = d.a1;
    r.normalize();
    return r;
}

CycleD pull_i(const CycleBlowup& u, const SurfaceData& s) {
    check_same_rho(u.rho(), s.rho);
    CycleD r = CycleD::zero(s.rho);
    r.a0 = delta_restrict(u.kunneth, s);
    // i^* exc(a) = -xi sigma_D^*(a); i^* diag(a) = -xi^2 sigma_D^*(a), and
    // -xi^2 = c1 xi + c2 in A*(D), where c1 = -K_X.
    r.a1 = -u.exc + mul_x(-canonical_cycle(s), u.diag, s);
    r.a0.pt = r.a0.pt + s.c2 * u.diag.r0;
    return r;
}

CycleBlowup exceptional_class(const SurfaceData& s) {
    return CycleBlowup::from_exc(CycleX::unit(s.rho));
}

CycleBlowup diagonal_class(const SurfaceData& s) {
    return CycleBlowup::from_diag(CycleX::unit(s.rho));
}

CycleBlowup blowup_divisor(const PolyVec& g, const PolyVec& h, const Poly& a,
                           const SurfaceData& s) {
    check_same_rho(static_cast<int>(g.size()), s.rho);
    check_same_rho(static_cast<int>(h.size()), s.rho);
    CycleBlowup r = CycleBlowup::zero(s.rho);
    r.kunneth.v10 = g;
    r.kunneth.v01 = h;
    r.exc.r0 = a;
    return r;
}

CycleBlowup blowup_divisor(const QVec& g, const QVec& h, const Rational& a,
                           const SurfaceData& s) {
    return blowup_divisor(to_polyvec(g), to_polyvec(h), Poly{a}, s);
}

CycleBlowup pi_pull(const HilbDivisor& d, const SurfaceData& s) {
    return blowup_divisor(d.g, d.g, d.delta_mult, s);
}

HilbDivisor pi_push(const CycleBlowup& u, const SurfaceData& s) {
    check_same_rho(u.rho(), s.rho);
    CycleBlowup c = u;
    c.normalize();
    CycleBlowup residue = c;
    residue.kunneth.v10 = zero_vec(s.rho);
    residue.kunneth.v01 = zero_vec(s.rho);
    residue.exc.r0 = Poly{};
    if (!residue.is_zero())
        throw input_error("pushforward to the Hilbert square expects a divisor class");
    if (c.kunneth.v10 != c.kunneth.v01)
        throw input_error("pushforward to the Hilbert square needs a symmetric divisor");
    HilbDivisor d;
    d.g = scale_vec(Poly{2}, c.kunneth.v10);
    d.delta_mult = Poly{2} * c.exc.r0;
    return d;
}

CycleBlowup canonical_class_blowup(const SurfaceData& s) {
    return blowup_divisor(s.canonical, s.canonical, Rational{1}, s);
}

CycleD canonical_class_d(const SurfaceData& s) {
    CycleD r = CycleD::zero(s.rho);
    r.a0 = Poly{2} * canonical_cycle(s);
    r.a1 = Poly{-2} * CycleX::unit(s.rho);
    return r;
}

namespace {

std::string basis_name(int i) { return "e" + std::to_string(i + 1); }

// One summand "coeff * body". The sign is stripped into `negative` whenever the
// coefficient is a monomial, so the caller can join terms with " + " / " - ";
// multi-term coefficients are parenthesized and keep their signs inside.
struct FormattedTerm {
    bool negative = false;
    std::string text;
};

FormattedTerm format_term(const Poly& coeff, const std::string& body) {
    FormattedTerm t;
    int terms = 0;
    for (int k = 0; k <= coeff.degree(); ++k)
        if (coeff.coeff(k) != 0) ++terms;
    if (terms > 1) {
        t.text = "(" + coeff.to_string() + ")*" + body;
        return t;
    }
    int k = coeff.degree();
    Rational c = coeff.coeff(k);
    t.negative = c < 0;
    Rational mag = t.negative ? Rational(-c) : c;
    std::string head;
    if (mag != 1) head = rational_to_string(mag);
    if (k >= 1) {
        if (!head.empty()) head += "*";
        head += (k == 1) ? "N" : "N^" + std::to_string(k);
    }
    t.text = head.empty() ? body : head + "*" + body;
    return t;
}

} // namespace

std::string format_cycle(const CycleBlowup& u, const SurfaceData& s) {
    CycleBlowup c = u;
    c.normalize();
    const int rho = s.rho;

    std::vector<std::pair<Poly, std::string>> parts;
    auto add = [&](const Poly& p, std::string body) {
        if (!p.is_zero()) parts.emplace_back(p, std::move(body));
    };

    add(c.kunneth.s00, "box(1,1)");
    for (int i = 0; i < rho; ++i) add(c.kunneth.v10[i], "box(" + basis_name(i) + ",1)");
    for (int i = 0; i < rho; ++i) add(c.kunneth.v01[i], "box(1," + basis_name(i) + ")");
    add(c.kunneth.s20, "box(pt,1)");
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j)
            add(c.kunneth.m11[i][j], "box(" + basis_name(i) + "," + basis_name(j) + ")");
    add(c.kunneth.s02, "box(1,pt)");
    for (int j = 0; j < rho; ++j) add(c.kunneth.v21[j], "box(pt," + basis_name(j) + ")");
    for (int i = 0; i < rho; ++i) add(c.kunneth.v12[i], "box(" + basis_name(i) + ",pt)");
    add(c.kunneth.s22, "box(pt,pt)");

    add(c.exc.r0, "exc(1)");
    for (int i = 0; i < rho; ++i) add(c.exc.div[i], "exc(" + basis_name(i) + ")");
    add(c.exc.pt, "exc(pt)");

    add(c.diag.r0, "diag(1)");
    for (int i = 0; i < rho; ++i) add(c.diag.div[i], "diag(" + basis_name(i) + ")");

    if (parts.empty()) return "0";

    std::string out;
    bool first = true;
    for (const auto& [p, body] : parts) {
        FormattedTerm t = format_term(p, body);
        if (first) {
            out += t.negative ? "- " + t.text : t.text;
            first = false;
        } else {
            out += t.negative ? " - " : " + ";
            out += t.text;
        }
    }
    return out;
}

} // namespace hilbstab
