#pragma once

#include "hilbstab/chow.hpp"
#include "hilbstab/positivity.hpp"

namespace hilbstab {

// A sheaf F on X seen through its numerical data: rank and first Chern class.
struct TautSpec {
    Int r;  // rank, >= 1
    QVec f; // c1(F) in the NS basis
};

// The class g (x) 1 + 1 (x) h + a D of a line bundle on the blow-up.
struct LineClass {
    QVec g, h;
    Rational a;
};

void validate_taut(const TautSpec& t, const SurfaceData& s);
void validate_line(const LineClass& l, const SurfaceData& s);

// c1 of the induced rank-2r sheaf on the Hilbert square, pulled back to the
// blow-up: f (x) 1 + 1 (x) f - r D.
CycleBlowup taut_c1(const TautSpec& t, const SurfaceData& s);
Int taut_rank(const TautSpec& t); // 2r

// The dual of the induced sheaf is the induced sheaf of the dual twisted by
// the half-diagonal line bundle; at c1 level upstairs this is the identity
//   -taut_c1(r, f) = taut_c1(r, -f) + 2r D,
// checked exactly.
bool dual_c1_check(const TautSpec& t, const SurfaceData& s);

// (N H (x) 1 + 1 (x) N H - D)^3, the cube of the pulled-back polarization.
CycleBlowup hn_cubed(const SurfaceData& s);

struct SlopeReport {
    std::string subject;
    Rational rank;
    CycleBlowup c1;
    Poly slope; // integrate(hn_cubed . c1) / rank

    std::string to_string(const SurfaceData& s) const;
};

// Ring-route slope: cubes the polarization, multiplies, integrates, divides.
// No closed formula is consulted. The class must be pure codimension 1.
SlopeReport slope(const CycleBlowup& c1, const Rational& rank, const SurfaceData& s,
                  std::string subject = "divisor class");

// Closed slope formulas, as polynomials in N:
//   line bundle:  (3H^2(H.(g+h)) N^3 + 12a H^2 N^2 - 6(H.(g+h)) N - c2 a) / rank
//   sheaf:        3H^2(H.f)/r N^3 - 6H^2 N^2 - 6(H.f)/r N + c2/2
// The linear term of the sheaf slope carries a minus sign; it is the g=h=f,
// a=-r, rank-2r specialization of the line formula and the ring confirms it.
Poly slope_line_closed(const LineClass& l, const Rational& rank, const SurfaceData& s);
Poly slope_taut_closed(const TautSpec& t, const SurfaceData& s);

enum class Verdict { Destabilizing, NotDestabilizing };

struct VerdictReport {
    Verdict verdict;
    bool equality_branch; // decided by the a-test on the slope-comparison boundary
    Rational lhs;         // r * H.(g+h)
    Rational rhs;         // H.f
    Poly difference;      // slope_line_closed(l, 1) - slope_taut_closed(t)
    Positivity threshold; // of difference if destabilizing, else of -difference

    bool destabilizing() const { return verdict == Verdict::Destabilizing; }
    std::string to_string() const;
};

// Asymptotic slope comparison of the line class against the rank-2r sheaf:
// destabilizing iff r.H.(g+h) > H.f, or equality holds and the D-multiplier
// passes the boundary test (a >= 0 for integer a, else 2a > -1). The
// threshold reports from which N on the strict comparison holds.
VerdictReport destabilize_verdict(const LineClass& l, const TautSpec& t, const SurfaceData& s);

enum class Exclusion { Excluded, ExceptionalCase, NotDecided };

struct FilterResult {
    Exclusion kind;
    Rational lhs; // r * H.(g+h)
    Rational rhs; // H.f
    std::string reason;

    std::string to_string() const;
};

// Numeric exclusion certificate: when r.H.(g+h) >= H.f, no line subbundle of
// the pulled-back sheaf carries the class (g, h, a) -- provided F is stable
// and nontrivial, and excepting the one configuration r=1, h=0, g=f, which is
// reported separately. Below the bound the filter is silent.
FilterResult exclusion_filter(const LineClass& l, const TautSpec& t, const SurfaceData& s);

} // namespace hilbstab
