#include "hilbstab/taut.hpp"

#include "hilbstab/errors.hpp"

namespace hilbstab {

namespace {

QVec add_qvec(const QVec& a, const QVec& b) {
    QVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

QVec neg_qvec(const QVec& a) {
    QVec r = a;
    for (auto& c : r) c = -c;
    return r;
}

bool qvec_zero(const QVec& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

void check_positive_integer_rank(const Rational& rank) {
    if (!is_integer(rank) || rank < 1)
        throw input_error("rank must be a positive integer");
}

} // namespace

void validate_taut(const TautSpec& t, const SurfaceData& s) {
    if (t.r < 1) throw input_error("sheaf rank must be at least 1");
    if (static_cast<int>(t.f.size()) != s.rho)
        throw input_error("c1 vector length does not match the Picard rank");
}

void validate_line(const LineClass& l, const SurfaceData& s) {
    if (static_cast<int>(l.g.size()) != s.rho || static_cast<int>(l.h.size()) != s.rho)
        throw input_error("line class vector length does not match the Picard rank");
}

CycleBlowup taut_c1(const TautSpec& t, const SurfaceData& s) {
    validate_taut(t, s);
    return blowup_divisor(t.f, t.f, Rational(-t.r), s);
}

Int taut_rank(const TautSpec& t) {
    return 2 * t.r;
}

bool dual_c1_check(const TautSpec& t, const SurfaceData& s) {
    validate_taut(t, s);
    CycleBlowup lhs = -taut_c1(t, s);
    TautSpec dual{t.r, neg_qvec(t.f)};
    CycleBlowup rhs = taut_c1(dual, s)
                    + Poly{Rational(2 * t.r)} * exceptional_class(s);
    return lhs == rhs;
}

CycleBlowup hn_cubed(const SurfaceData& s) {
    const QVec& H = s.polarization_vector();
    PolyVec nh;
    nh.reserve(H.size());
    for (const auto& c : H) nh.push_back(Poly::monomial(c, 1));
    CycleBlowup p = blowup_divisor(nh, nh, Poly{-1}, s);
    return mul_blowup(mul_blowup(p, p, s), p, s);
}

SlopeReport slope(const CycleBlowup& c1, const Rational& rank, const SurfaceData& s,
                  std::string subject) {
    check_positive_integer_rank(rank);
    CycleBlowup c = c1;
    c.normalize();
    CycleBlowup residue = c;
    residue.kunneth.v10.assign(residue.kunneth.v10.size(), Poly{});
    residue.kunneth.v01.assign(residue.kunneth.v01.size(), Poly{});
    residue.exc.r0 = Poly{};
    if (!residue.is_zero())
        throw input_error("slope expects a class of pure codimension 1");

    Poly numerator = integrate(mul_blowup(hn_cubed(s), c, s));
    SlopeReport rep;
    rep.subject = std::move(subject);
    rep.rank = rank;
    rep.c1 = std::move(c);
    rep.slope = numerator * Poly{Rational(1) / rank};
    return rep;
}

std::string SlopeReport::to_string(const SurfaceData& s) const {
    std::string out;
    out += "subject: " + subject + "\n";
    out += "rank: " + rational_to_string(rank) + "\n";
    out += "c1: " + format_cycle(c1, s) + "\n";
    out += "slope: " + slope.to_string() + "\n";
    return out;
}

Poly slope_line_closed(const LineClass& l, const Rational& rank, const SurfaceData& s) {
    validate_line(l, s);
    check_positive_integer_rank(rank);
    const QVec& H = s.polarization_vector();
    Rational h2 = s.pair(H, H);
    Rational hgh = s.pair(H, add_qvec(l.g, l.h));
    Poly p = Poly::monomial(3 * h2 * hgh, 3)
           + Poly::monomial(12 * l.a * h2, 2)
           + Poly::monomial(-6 * hgh, 1)
           + Poly{-s.c2 * l.a};
    return p * Poly{Rational(1) / rank};
}

Poly slope_taut_closed(const TautSpec& t, const SurfaceData& s) {
    validate_taut(t, s);
    const QVec& H = s.polarization_vector();
    Rational h2 = s.pair(H, H);
    Rational hf = s.pair(H, t.f);
    Rational r{t.r};
    return Poly::monomial(3 * h2 * hf / r, 3)
         + Poly::monomial(-6 * h2, 2)
         + Poly::monomial(-6 * hf / r, 1)
         + Poly{s.c2 / 2};
}

VerdictReport destabilize_verdict(const LineClass& l, const TautSpec& t, const SurfaceData& s) {
    validate_line(l, s);
    validate_taut(t, s);
    const QVec& H = s.polarization_vector();

    VerdictReport rep;
    rep.lhs = Rational(t.r) * s.pair(H, add_qvec(l.g, l.h));
    rep.rhs = s.pair(H, t.f);
    rep.equality_branch = false;

    bool destabilizing = false;
    if (rep.lhs > rep.rhs) {
        destabilizing = true;
    } else if (rep.lhs == rep.rhs) {
        rep.equality_branch = true;
        // On the boundary the cubic and linear terms of the slope difference
        // cancel and the sign of 2a+1 decides; for integer a that inequality
        // is exactly a >= 0.
        destabilizing = is_integer(l.a) ? (l.a >= 0) : (2 * l.a > -1);
    }
    rep.verdict = destabilizing ? Verdict::Destabilizing : Verdict::NotDestabilizing;
    rep.difference = slope_line_closed(l, 1, s) - slope_taut_closed(t, s);
    rep.threshold = eventually_positive(destabilizing ? rep.difference : -rep.difference);
    return rep;
}

std::string VerdictReport::to_string() const {
    std::string out;
    out += std::string("verdict: ")
         + (destabilizing() ? "destabilizing" : "not destabilizing");
    if (equality_branch) out += " (boundary case, decided by the D-multiplier)";
    out += "\n";
    out += "comparison: r*H.(g+h) = " + rational_to_string(lhs)
         + " vs H.f = " + rational_to_string(rhs) + "\n";
    out += "slope difference (line minus sheaf): " + difference.to_string() + "\n";
    out += std::string(destabilizing() ? "difference: " : "negated difference: ")
         + threshold.to_string() + "\n";
    return out;
}

FilterResult exclusion_filter(const LineClass& l, const TautSpec& t, const SurfaceData& s) {
    validate_line(l, s);
    validate_taut(t, s);
    const QVec& H = s.polarization_vector();

    FilterResult res;
    res.lhs = Rational(t.r) * s.pair(H, add_qvec(l.g, l.h));
    res.rhs = s.pair(H, t.f);
    std::string bound = "r*H.(g+h) = " + rational_to_string(res.lhs)
                      + (res.lhs >= res.rhs ? " >= " : " < ")
                      + "H.f = " + rational_to_string(res.rhs);
    if (res.lhs >= res.rhs) {
        if (t.r == 1 && qvec_zero(l.h) && l.g == t.f) {
            res.kind = Exclusion::ExceptionalCase;
            res.reason = bound + ", but r=1, h=0, g=f is the one configuration "
                                 "the exclusion argument cannot rule out";
        } else {
            res.kind = Exclusion::Excluded;
            res.reason = bound + ": no line subbundle with this class exists "
                                 "(assuming F stable and nontrivial)";
        }
    } else {
        res.kind = Exclusion::NotDecided;
        res.reason = bound + ": below the exclusion bound, no conclusion";
    }
    return res;
}

std::string FilterResult::to_string() const {
    std::string label;
    switch (kind) {
    case Exclusion::Excluded: label = "excluded"; break;
    case Exclusion::ExceptionalCase: label = "exceptional-case"; break;
    default: label = "not-decided"; break;
    }
    return "exclusion: " + label + "\n  " + reason + "\n";
}

} // namespace hilbstab
