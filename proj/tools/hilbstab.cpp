#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hilbstab/cyclelang.hpp"
#include "hilbstab/errors.hpp"
#include "hilbstab/identities.hpp"
#include "hilbstab/stabscan.hpp"

namespace {

using namespace hilbstab;

SurfaceData resolve_surface(const std::string& arg) {
    if (std::ifstream probe(arg); probe.good()) return load_surface(arg);
    if (arg == "k3") return k3_preset();
    if (arg == "quintic") return quintic_preset();
    if (arg == "rational-elliptic" || arg == "rational_elliptic")
        return rational_elliptic_preset();
    throw input_error("'" + arg + "' is neither a readable surface file nor a "
                      "preset (k3, quintic, rational-elliptic)");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t p = text.find(sep, start);
        if (p == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, p - start));
        start = p + 1;
    }
}

QVec parse_qvec(const std::string& text) {
    QVec v;
    for (const auto& part : split(text, ':')) v.push_back(parse_rational(part));
    return v;
}

// A divisor argument is a known name, a basis name e<k>, or colon-separated
// rational coordinates.
QVec parse_divisor_arg(const std::string& text, const SurfaceData& s) {
    auto it = s.divisors.find(text);
    if (it != s.divisors.end()) return it->second;
    if (text.size() >= 2 && text[0] == 'e'
        && text.find_first_not_of("0123456789", 1) == std::string::npos) {
        long idx = text.size() <= 7 ? std::stol(text.substr(1)) : -1;
        if (idx >= 1 && idx <= s.rho) return s.basis_vector(static_cast<int>(idx) - 1);
        throw input_error("basis class " + text + " exceeds Picard rank "
                          + std::to_string(s.rho));
    }
    QVec v = parse_qvec(text);
    if (static_cast<int>(v.size()) != s.rho)
        throw input_error("vector '" + text + "' has " + std::to_string(v.size())
                          + " components for Picard rank " + std::to_string(s.rho));
    return v;
}

LineClass parse_line_arg(const std::string& text, const SurfaceData& s) {
    auto parts = split(text, ',');
    if (parts.size() != 3)
        throw input_error("--line expects g,h,a (vectors colon-separated)");
    LineClass l;
    l.g = parse_divisor_arg(parts[0], s);
    l.h = parse_divisor_arg(parts[1], s);
    l.a = parse_rational(parts[2]);
    return l;
}

TautSpec parse_taut_arg(const std::string& text, const SurfaceData& s) {
    auto parts = split(text, ',');
    if (parts.size() != 2)
        throw input_error("--taut expects r,f (f a name or colon-separated vector)");
    Rational r = parse_rational(parts[0]);
    if (!is_integer(r) || r < 1) throw input_error("rank must be a positive integer");
    TautSpec t;
    t.r = numerator(r);
    t.f = parse_divisor_arg(parts[1], s);
    return t;
}

std::pair<Int, Int> parse_interval(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() != 2) throw input_error("interval must be lo:hi");
    Rational lo = parse_rational(parts[0]);
    Rational hi = parse_rational(parts[1]);
    if (!is_integer(lo) || !is_integer(hi))
        throw input_error("interval bounds must be integers");
    return {numerator(lo), numerator(hi)};
}

std::vector<std::pair<Int, Int>> parse_gbox(const std::string& text, int rho) {
    std::vector<std::pair<Int, Int>> bounds;
    for (const auto& part : split(text, ',')) bounds.push_back(parse_interval(part));
    if (static_cast<int>(bounds.size()) == 1 && rho > 1)
        bounds.assign(static_cast<size_t>(rho), bounds[0]);
    if (static_cast<int>(bounds.size()) != rho)
        throw input_error("--gbox needs one interval, or one per NS coordinate");
    return bounds;
}

bool qvec_zero(const QVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

std::string line_subject(const LineClass& l) {
    auto vec = [](const QVec& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ":";
            out += rational_to_string(v[i]);
        }
        return out;
    };
    return "line bundle (g=" + vec(l.g) + ", h=" + vec(l.h)
         + ", a=" + rational_to_string(l.a) + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection calculus and slope-stability certificates "
                 "for tautological sheaves on Hilbert squares of surfaces"};
    app.require_subcommand(1);

    std::string surface_arg, expr_arg, line_arg, taut_arg;
    std::string f_arg, gbox_arg, abox_arg;
    bool do_integrate = false, asymmetric = false, allow_trivial_f = false;
    bool json_output = false, analytic = false;
    std::uint64_t seed = 12345;
    int trials = 100;
    std::string cap_arg = "500000";

    auto add_surface = [&](CLI::App* cmd) {
        cmd->add_option("--surface", surface_arg,
                        "surface JSON file, or preset k3 | quintic | rational-elliptic")
           ->required();
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a cycle expression");
    add_surface(eval_cmd);
    eval_cmd->add_option("expr", expr_arg, "cycle expression")->required();
    eval_cmd->add_flag("--integrate", do_integrate, "print the integral instead");

    CLI::App* slope_cmd = app.add_subcommand("slope", "slope of a line bundle or of the tautological sheaf");
    add_surface(slope_cmd);
    slope_cmd->add_option("--line", line_arg, "g,h,a");
    slope_cmd->add_option("--taut", taut_arg, "r,f");

    CLI::App* verdict_cmd = app.add_subcommand("verdict", "destabilization verdict and exclusion filter");
    add_surface(verdict_cmd);
    verdict_cmd->add_option("--taut", taut_arg, "r,f")->required();
    verdict_cmd->add_option("--line", line_arg, "g,h,a")->required();

    CLI::App* threshold_cmd = app.add_subcommand("threshold", "slope-difference sign threshold");
    add_surface(threshold_cmd);
    threshold_cmd->add_option("--taut", taut_arg, "r,f")->required();
    threshold_cmd->add_option("--line", line_arg, "g,h,a")->required();

    CLI::App* scan_cmd = app.add_subcommand("scan", "enumerate candidate classes and certify a box");
    add_surface(scan_cmd);
    scan_cmd->add_option("--rank", taut_arg, "rank r of F")->required();
    scan_cmd->add_option("--f", f_arg, "c1(F): divisor name or colon-separated vector")->required();
    scan_cmd->add_option("--gbox", gbox_arg, "lo:hi, or per-coordinate lo:hi,lo:hi,...");
    scan_cmd->add_option("--abox", abox_arg, "lo:hi for the D-multiplier a");
    scan_cmd->add_flag("--asymmetric", asymmetric, "enumerate g and h independently");
    scan_cmd->add_flag("--allow-trivial-f", allow_trivial_f, "proceed although c1(F) = 0");
    scan_cmd->add_option("--cap", cap_arg, "refuse boxes with more rows than this");
    scan_cmd->add_flag("--json", json_output, "machine-readable output");
    scan_cmd->add_flag("--analytic", analytic,
                       "certify the full symmetric lattice line (Picard rank 1 only)");

    CLI::App* ident_cmd = app.add_subcommand("check-identities", "run the ring identity suites");
    add_surface(ident_cmd);
    ident_cmd->add_option("--seed", seed, "random seed");
    ident_cmd->add_option("--trials", trials, "trials per identity");

    CLI11_PARSE(app, argc, argv);

    try {
        SurfaceData s = resolve_surface(surface_arg);

        if (*eval_cmd) {
            CycleBlowup value = eval(parse(expr_arg), s);
            if (do_integrate)
                std::cout << integrate(value).to_string() << "\n";
            else
                std::cout << format(value, s) << "\n";
            return 0;
        }

        if (*slope_cmd) {
            if (line_arg.empty() == taut_arg.empty())
                throw input_error("slope needs exactly one of --line or --taut");
            SlopeReport rep;
            if (!line_arg.empty()) {
                LineClass l = parse_line_arg(line_arg, s);
                rep = slope(blowup_divisor(l.g, l.h, l.a, s), 1, s, line_subject(l));
            } else {
                TautSpec t = parse_taut_arg(taut_arg, s);
                rep = slope(taut_c1(t, s), Rational(taut_rank(t)), s,
                            "tautological sheaf of a rank-" + t.r.str() + " sheaf");
            }
            std::cout << rep.to_string(s);
            return 0;
        }

        if (*verdict_cmd) {
            TautSpec t = parse_taut_arg(taut_arg, s);
            LineClass l = parse_line_arg(line_arg, s);
            std::cout << destabilize_verdict(l, t, s).to_string();
            std::cout << exclusion_filter(l, t, s).to_string();
            return 0;
        }

        if (*threshold_cmd) {
            TautSpec t = parse_taut_arg(taut_arg, s);
            LineClass l = parse_line_arg(line_arg, s);
            Poly diff = slope_line_closed(l, 1, s) - slope_taut_closed(t, s);
            std::cout << "slope difference (line minus sheaf): "
                      << diff.to_string() << "\n";
            std::cout << "eventually: " << eventually_positive(diff).to_string() << "\n";
            return 0;
        }

        if (*scan_cmd) {
            Rational r = parse_rational(taut_arg);
            if (!is_integer(r) || r < 1)
                throw input_error("rank must be a positive integer");
            TautSpec t{numerator(r), parse_divisor_arg(f_arg, s)};
            if (qvec_zero(t.f) && !allow_trivial_f)
                throw input_error("c1(F) = 0: the certificate cannot rule out the "
                                  "structure sheaf; pass --allow-trivial-f to scan anyway");
            if (analytic) {
                AnalyticReport rep = analytic_certify(t, s);
                std::cout << rep.to_text();
                return rep.certified ? 0 : 2;
            }
            if (gbox_arg.empty() || abox_arg.empty())
                throw input_error("scan needs --gbox and --abox (or --analytic)");
            ScanBox box;
            box.g_bounds = parse_gbox(gbox_arg, s.rho);
            box.a_bounds = parse_interval(abox_arg);
            box.symmetric_only = !asymmetric;
            Rational cap = parse_rational(cap_arg);
            if (!is_integer(cap) || cap < 1)
                throw input_error("--cap must be a positive integer");
            box.cap = numerator(cap);
            ScanReport rep = scan(box, t, s, !qvec_zero(t.f));
            std::cout << (json_output ? rep.to_json() : rep.to_text());
            return rep.certified ? 0 : 2;
        }

        if (*ident_cmd) {
            if (trials < 1) throw input_error("--trials must be positive");
            IdentitySuiteResult res = run_identity_suite(s, seed, trials);
            std::cout << res.to_text();
            return res.all_passed() ? 0 : 2;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
