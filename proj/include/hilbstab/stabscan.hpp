#pragma once

#include <optional>

#include "hilbstab/taut.hpp"

namespace hilbstab {

// A finite window onto the Picard lattice: per-coordinate inclusive integer
// intervals for g (and h, when asymmetric), one interval for the D-multiplier
// a. The total enumeration count is checked against `cap` before any work.
struct ScanBox {
    std::vector<std::pair<Int, Int>> g_bounds;
    std::pair<Int, Int> a_bounds;
    bool symmetric_only = true;
    Int cap = 500000;

    // Throws input_error on an empty interval, a bounds/rho mismatch, or a
    // count above cap. Returns the number of rows.
    Int enumeration_count(int rho) const;
};

struct ScanRow {
    LineClass line;
    VerdictReport verdict;
    FilterResult exclusion;
};

struct ScanSummary {
    long long rows = 0;
    long long destabilizing = 0;
    long long not_destabilizing = 0;
    long long excluded = 0;
    long long exceptional = 0;
    long long not_decided = 0;
    long long violations = 0; // destabilizing rows not excluded
};

struct ScanReport {
    std::string surface_name;
    TautSpec t;
    ScanBox box;
    bool f_nontrivial_declared = false;
    std::vector<std::string> warnings;
    std::vector<ScanRow> rows;
    ScanSummary summary;
    bool certified = false;

    std::string to_text() const;
    std::string to_json() const; // machine-readable mirror of to_text
};

// Enumerates every candidate class in the box, runs the slope verdict and the
// exclusion filter on each, and certifies the box when every destabilizing
// row is excluded. `f_nontrivial_declared` records the caller's promise that
// F is not the structure sheaf; with f = 0 and no such promise the report
// carries a warning (the certificate cannot hold there anyway: the trivial
// line bundle destabilizes its own tautological sheaf).
ScanReport scan(const ScanBox& box, const TautSpec& t, const SurfaceData& s,
                bool f_nontrivial_declared);

// Closed-form certification of the full symmetric lattice line for NS rank 1:
// solves the destabilizing inequality exactly instead of enumerating a box.
struct AnalyticReport {
    std::string surface_name;
    TautSpec t;
    bool certified = false;
    std::vector<std::string> lines;

    std::string to_text() const;
};

AnalyticReport analytic_certify(const TautSpec& t, const SurfaceData& s);

// Replay of the rank-3 subsheaf inequality chain for a rank-2 sheaf: from
// 4H.e >= 3H.f (the destabilizing condition on the intermediate bundle) the
// bound 2H.(e-f) >= -H.f/2 follows algebraically, and the exclusion filter
// applied to the quotient-dual class (e-f, e-f, 4+a) against (rank 2, -f)
// rules the configuration out.
struct Rank3SubsheafReport {
    Rational he, hf;
    Rational four_he, three_hf;
    bool triggered = false;
    Rational implied_lhs, implied_rhs; // 2H.(e-f) and -H.f/2
    LineClass quotient;
    TautSpec dual;
    std::optional<FilterResult> exclusion;

    std::string to_string(const SurfaceData& s) const;
};

Rank3SubsheafReport rank3_subsheaf_check(const QVec& e, const Rational& a, const TautSpec& t,
                                   const SurfaceData& s);

// Replay of the rank-2 subsheaf branch for a rank-2 sheaf: case (c) turns
// 2H.e >= H.f into an exclusion of every rank-one image class; the case (a)
// effectivity conditions are evaluated as necessary conditions only, and its
// contradiction is asserted only when H.f > 0.
struct Rank2SubsheafReport {
    Rational he, hf;
    bool case_c_triggered = false;
    Rational eff_neg_e, eff_f_minus_e; // H.(-e) and H.(f-e)
    bool hf_positive = false;
    bool case_a_configuration = false; // effectivity + destabilizing met for this e
    bool case_a_contradiction = false; // ... and H.f > 0 makes that impossible

    std::string to_string() const;
};

Rank2SubsheafReport rank2_subsheaf_check(const QVec& e, const TautSpec& t, const SurfaceData& s);

} // namespace hilbstab
