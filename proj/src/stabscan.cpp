#include "hilbstab/stabscan.hpp"

#include <json.hpp>

#include "hilbstab/errors.hpp"

namespace hilbstab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string qvec_to_string(const QVec& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ":";
        out += rational_to_string(v[i]);
    }
    return out;
}

std::string threshold_to_string(const Positivity& p) {
    switch (p.kind) {
    case Positivity::Kind::AlwaysFrom: return p.from.str();
    case Positivity::Kind::NeverEventually: return "never";
    default: return "-";
    }
}

std::string exclusion_tag(Exclusion k) {
    switch (k) {
    case Exclusion::Excluded: return "EXCL";
    case Exclusion::ExceptionalCase: return "EXC-CASE";
    default: return "UNDEC";
    }
}

bool qvec_zero(const QVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

ordered_json qvec_to_json(const QVec& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v) arr.push_back(rational_to_string(c));
    return arr;
}

} // namespace

Int ScanBox::enumeration_count(int rho) const {
    if (static_cast<int>(g_bounds.size()) != rho)
        throw input_error("scan box has " + std::to_string(g_bounds.size())
                          + " g-intervals for Picard rank " + std::to_string(rho));
    Int count = 1;
    for (const auto& [lo, hi] : g_bounds) {
        if (lo > hi) throw input_error("empty g-interval in scan box");
        count *= (hi - lo + 1);
    }
    if (!symmetric_only) count *= count;
    if (a_bounds.first > a_bounds.second)
        throw input_error("empty a-interval in scan box");
    count *= (a_bounds.second - a_bounds.first + 1);
    if (count > cap)
        throw input_error("scan box enumerates " + count.str()
                          + " rows, above the cap of " + cap.str());
    return count;
}

ScanReport scan(const ScanBox& box, const TautSpec& t, const SurfaceData& s,
                bool f_nontrivial_declared) {
    validate_taut(t, s);
    box.enumeration_count(s.rho);

    ScanReport rep;
    rep.surface_name = s.name;
    rep.t = t;
    rep.box = box;
    rep.f_nontrivial_declared = f_nontrivial_declared;

    if (qvec_zero(t.f)) {
        if (!f_nontrivial_declared)
            rep.warnings.push_back(
                "c1(F) = 0 and F was not declared nontrivial: the certificate "
                "theorem does not apply (the structure sheaf destabilizes its "
                "own tautological sheaf)");
        else
            rep.warnings.push_back(
                "c1(F) = 0: exclusion assumes F is stable and not the "
                "structure sheaf");
    }

    // All g vectors in the box, odometer order with the last coordinate fastest.
    std::vector<QVec> gs;
    {
        QVec cur(static_cast<size_t>(s.rho));
        std::vector<Int> pos(static_cast<size_t>(s.rho));
        for (int i = 0; i < s.rho; ++i) pos[i] = box.g_bounds[i].first;
        while (true) {
            for (int i = 0; i < s.rho; ++i) cur[i] = Rational(pos[i]);
            gs.push_back(cur);
            int i = s.rho - 1;
            while (i >= 0) {
                ++pos[i];
                if (pos[i] <= box.g_bounds[i].second) break;
                pos[i] = box.g_bounds[i].first;
                --i;
            }
            if (i < 0) break;
        }
    }

    auto emit = [&](const QVec& g, const QVec& h, const Int& a) {
        LineClass l{g, h, Rational(a)};
        ScanRow row{l, destabilize_verdict(l, t, s), exclusion_filter(l, t, s)};
        ++rep.summary.rows;
        if (row.verdict.destabilizing()) {
            ++rep.summary.destabilizing;
            if (row.exclusion.kind != Exclusion::Excluded) ++rep.summary.violations;
        } else {
            ++rep.summary.not_destabilizing;
        }
        switch (row.exclusion.kind) {
        case Exclusion::Excluded: ++rep.summary.excluded; break;
        case Exclusion::ExceptionalCase: ++rep.summary.exceptional; break;
        default: ++rep.summary.not_decided; break;
        }
        rep.rows.push_back(std::move(row));
    };

    for (const QVec& g : gs) {
        if (box.symmetric_only) {
            for (Int a = box.a_bounds.first; a <= box.a_bounds.second; ++a)
                emit(g, g, a);
        } else {
            for (const QVec& h : gs)
                for (Int a = box.a_bounds.first; a <= box.a_bounds.second; ++a)
                    emit(g, h, a);
        }
    }

    rep.certified = rep.summary.violations == 0;
    return rep;
}

std::string ScanReport::to_text() const {
    std::string out;
    out += "scan: surface=" + surface_name
         + " rank=" + t.r.str()
         + " f=" + qvec_to_string(t.f)
         + " symmetric=" + (box.symmetric_only ? "yes" : "no");
    out += " g-box=";
    for (size_t i = 0; i < box.g_bounds.size(); ++i) {
        if (i) out += ",";
        out += "[" + box.g_bounds[i].first.str() + ":" + box.g_bounds[i].second.str() + "]";
    }
    out += " a-box=[" + box.a_bounds.first.str() + ":" + box.a_bounds.second.str() + "]";
    out += "\n";
    for (const auto& w : warnings) out += "warning: " + w + "\n";
    for (const auto& row : rows) {
        out += "g=" + qvec_to_string(row.line.g)
             + " h=" + qvec_to_string(row.line.h)
             + " a=" + rational_to_string(row.line.a)
             + " verdict=" + (row.verdict.destabilizing() ? "D" : "N")
             + " exclusion=" + exclusion_tag(row.exclusion.kind)
             + " threshold=" + threshold_to_string(row.verdict.threshold)
             + "\n";
    }
    out += "summary: rows=" + std::to_string(summary.rows)
         + " destabilizing=" + std::to_string(summary.destabilizing)
         + " not-destabilizing=" + std::to_string(summary.not_destabilizing)
         + " excluded=" + std::to_string(summary.excluded)
         + " exceptional=" + std::to_string(summary.exceptional)
         + " undecided=" + std::to_string(summary.not_decided)
         + " violations=" + std::to_string(summary.violations)
         + "\n";
    out += std::string("certified: ") + (certified ? "yes" : "no") + "\n";
    return out;
}

std::string ScanReport::to_json() const {
    ordered_json j;
    j["surface"] = surface_name;
    j["rank"] = t.r.str();
    j["f"] = qvec_to_json(t.f);
    ordered_json gb = ordered_json::array();
    for (const auto& [lo, hi] : box.g_bounds) gb.push_back({lo.str(), hi.str()});
    j["box"] = {{"g", gb},
                {"a", {box.a_bounds.first.str(), box.a_bounds.second.str()}},
                {"symmetric", box.symmetric_only}};
    j["f_nontrivial_declared"] = f_nontrivial_declared;
    j["warnings"] = warnings;
    ordered_json rws = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["g"] = qvec_to_json(row.line.g);
        r["h"] = qvec_to_json(row.line.h);
        r["a"] = rational_to_string(row.line.a);
        r["verdict"] = row.verdict.destabilizing() ? "D" : "N";
        r["exclusion"] = exclusion_tag(row.exclusion.kind);
        r["threshold"] = threshold_to_string(row.verdict.threshold);
        r["difference"] = row.verdict.difference.to_string();
        rws.push_back(std::move(r));
    }
    j["rows"] = std::move(rws);
    j["summary"] = {{"rows", summary.rows},
                    {"destabilizing", summary.destabilizing},
                    {"not_destabilizing", summary.not_destabilizing},
                    {"excluded", summary.excluded},
                    {"exceptional", summary.exceptional},
                    {"not_decided", summary.not_decided},
                    {"violations", summary.violations}};
    j["certified"] = certified;
    return j.dump(2) + "\n";
}

AnalyticReport analytic_certify(const TautSpec& t, const SurfaceData& s) {
    validate_taut(t, s);
    if (s.rho != 1)
        throw input_error("analytic certification needs Picard rank 1");

    AnalyticReport rep;
    rep.surface_name = s.name;
    rep.t = t;

    const QVec& H = s.polarization_vector();
    Rational w = s.pair(H, s.basis_vector(0)); // H.e1
    Rational hf = s.pair(H, t.f);
    Rational two_rw = 2 * Rational(t.r) * w;

    rep.lines.push_back("symmetric candidates on a rank-1 lattice: g = h = x*e1, "
                        "destabilizing needs 2*r*x*(H.e1) >= H.f, i.e. "
                        + rational_to_string(two_rw) + "*x >= " + rational_to_string(hf)
                        + " (boundary decided by the D-multiplier a)");
    rep.lines.push_back("every destabilizing x meets the exclusion bound "
                        "r*H.(g+h) >= H.f verbatim, for every a");

    bool trivial = (t.r == 1) && qvec_zero(t.f);
    if (trivial) {
        rep.certified = false;
        rep.lines.push_back("exceptional configuration reachable: r=1 and f=0 put "
                            "x=0 (any a >= 0) in the exceptional case, which the "
                            "exclusion bound cannot remove; the structure sheaf "
                            "destabilizes its own tautological sheaf");
    } else {
        rep.certified = true;
        rep.lines.push_back(t.r == 1
            ? "exceptional configuration unreachable: h = 0 forces g = 0 != f"
            : "exceptional configuration unreachable: it needs rank 1");
        rep.lines.push_back("every destabilizing candidate on the full lattice "
                            "line is excluded");
    }
    return rep;
}

std::string AnalyticReport::to_text() const {
    std::string out;
    out += "analytic scan: surface=" + surface_name + " rank=" + t.r.str()
         + " f=" + qvec_to_string(t.f) + "\n";
    for (const auto& l : lines) out += "  " + l + "\n";
    out += std::string("certified: ") + (certified ? "yes" : "no") + "\n";
    return out;
}

Rank3SubsheafReport rank3_subsheaf_check(const QVec& e, const Rational& a, const TautSpec& t,
                                   const SurfaceData& s) {
    if (t.r != 2) throw input_error("the rank-3 subsheaf replay needs a rank-2 sheaf");
    validate_taut(t, s);
    if (static_cast<int>(e.size()) != s.rho)
        throw input_error("e vector length does not match the Picard rank");

    const QVec& H = s.polarization_vector();
    Rank3SubsheafReport rep;
    rep.he = s.pair(H, e);
    rep.hf = s.pair(H, t.f);
    rep.four_he = 4 * rep.he;
    rep.three_hf = 3 * rep.hf;
    rep.triggered = rep.four_he >= rep.three_hf;

    QVec emf = e;
    for (int i = 0; i < s.rho; ++i) emf[i] -= t.f[i];
    rep.implied_lhs = 2 * s.pair(H, emf);
    rep.implied_rhs = -rep.hf / 2;
    rep.quotient = LineClass{emf, emf, Rational(4) + a};
    rep.dual = TautSpec{2, QVec()};
    rep.dual.f = t.f;
    for (auto& c : rep.dual.f) c = -c;

    if (rep.triggered) {
        // 2H.(e-f) >= -H.f/2 is algebraically the same inequality as the
        // trigger; a failure here would mean broken arithmetic.
        if (!(rep.implied_lhs >= rep.implied_rhs))
            throw std::logic_error("implied rank-3 inequality failed its exact check");
        rep.exclusion = exclusion_filter(rep.quotient, rep.dual, s);
        if (rep.exclusion->kind != Exclusion::Excluded)
            throw std::logic_error("rank-3 quotient exclusion failed its exact check");
    }
    return rep;
}

std::string Rank3SubsheafReport::to_string(const SurfaceData&) const {
    std::string out;
    out += "rank-3 subsheaf replay: H.e = " + rational_to_string(he)
         + ", H.f = " + rational_to_string(hf) + "\n";
    out += "destabilizing condition 4H.e >= 3H.f: "
         + rational_to_string(four_he) + (triggered ? " >= " : " < ")
         + rational_to_string(three_hf) + (triggered ? " (holds)" : " (fails)") + "\n";
    if (triggered) {
        out += "implied bound 2H.(e-f) >= -H.f/2: "
             + rational_to_string(implied_lhs) + " >= " + rational_to_string(implied_rhs)
             + " (holds by algebra)\n";
        out += "quotient-dual class g=h=" + qvec_to_string(quotient.g)
             + ", a=" + rational_to_string(quotient.a)
             + " against rank 2, f=" + qvec_to_string(dual.f) + ":\n";
        out += "  " + exclusion->reason + "\n";
        out += "conclusion: excluded\n";
    } else {
        out += "conclusion: branch not triggered (no rank-3 destabilizer with this e)\n";
    }
    return out;
}

Rank2SubsheafReport rank2_subsheaf_check(const QVec& e, const TautSpec& t, const SurfaceData& s) {
    if (t.r != 2) throw input_error("the rank-2 subsheaf replay needs a rank-2 sheaf");
    validate_taut(t, s);
    if (static_cast<int>(e.size()) != s.rho)
        throw input_error("e vector length does not match the Picard rank");

    const QVec& H = s.polarization_vector();
    Rank2SubsheafReport rep;
    rep.he = s.pair(H, e);
    rep.hf = s.pair(H, t.f);
    rep.case_c_triggered = 2 * rep.he >= rep.hf;

    QVec neg_e = e, fme = t.f;
    for (int i = 0; i < s.rho; ++i) {
        neg_e[i] = -e[i];
        fme[i] -= e[i];
    }
    rep.eff_neg_e = s.pair(H, neg_e);
    rep.eff_f_minus_e = s.pair(H, fme);
    rep.hf_positive = rep.hf > 0;
    rep.case_a_configuration =
        rep.case_c_triggered && rep.eff_neg_e > 0 && rep.eff_f_minus_e >= 0;
    rep.case_a_contradiction = rep.case_a_configuration && rep.hf_positive;
    return rep;
}

std::string Rank2SubsheafReport::to_string() const {
    std::string out;
    out += "rank-2 subsheaf replay: H.e = " + rational_to_string(he)
         + ", H.f = " + rational_to_string(hf) + "\n";
    out += "destabilizing condition 2H.e >= H.f: "
         + rational_to_string(2 * he) + (case_c_triggered ? " >= " : " < ")
         + rational_to_string(hf) + (case_c_triggered ? " (holds)" : " (fails)") + "\n";
    if (case_c_triggered)
        out += "case c: any rank-one image class (g,h,b) with H.(g+h) >= H.e gives "
               "2H.(g+h) >= H.f, so the exclusion bound applies to it and the "
               "exceptional configuration is impossible at rank 2; excluded\n";
    out += "case a effectivity (necessary conditions only): H.(-e) = "
         + rational_to_string(eff_neg_e) + " (> 0: " + (eff_neg_e > 0 ? "yes" : "no")
         + "), H.(f-e) = " + rational_to_string(eff_f_minus_e)
         + " (>= 0: " + (eff_f_minus_e >= 0 ? "yes" : "no") + ")\n";
    if (case_a_contradiction)
        out += "case a: configuration met with H.f > 0, which forces H.e > 0 and "
               "contradicts H.(-e) > 0; no such subsheaf\n";
    else if (case_a_configuration)
        out += "case a: configuration met but H.f <= 0, contradiction not asserted\n";
    else
        out += "case a: configuration not met for this e\n";
    return out;
}

} // namespace hilbstab
