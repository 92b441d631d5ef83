#include "hilbstab/surface.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hilbstab {

const QVec& SurfaceData::divisor(const std::string& dname) const {
    auto it = divisors.find(dname);
    if (it == divisors.end())
        throw input_error("unknown divisor name '" + dname + "' on surface '" + name + "'");
    return it->second;
}

QVec SurfaceData::basis_vector(int i) const {
    if (i < 0 || i >= rho) throw input_error("basis index out of range");
    QVec v(static_cast<std::size_t>(rho), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

Rational SurfaceData::pair(const QVec& x, const QVec& y) const {
    if (static_cast<int>(x.size()) != rho || static_cast<int>(y.size()) != rho)
        throw input_error("pairing dimension mismatch (expected length " +
                          std::to_string(rho) + ")");
    Rational acc(0);
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j)
            acc += x[static_cast<std::size_t>(i)] * gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   y[static_cast<std::size_t>(j)];
    return acc;
}

Poly SurfaceData::pair(const PolyVec& x, const PolyVec& y) const {
    if (static_cast<int>(x.size()) != rho || static_cast<int>(y.size()) != rho)
        throw input_error("pairing dimension mismatch (expected length " +
                          std::to_string(rho) + ")");
    Poly acc;
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j)
            acc += Poly(gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                   x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    return acc;
}

void SurfaceData::validate() const {
    if (rho < 1) throw validation_error("rho", "must be a positive integer");
    if (static_cast<int>(gram.size()) != rho)
        throw validation_error("gram", "expected " + std::to_string(rho) + " rows");
    for (const auto& row : gram)
        if (static_cast<int>(row.size()) != rho)
            throw validation_error("gram", "expected square " + std::to_string(rho) + "x" +
                                               std::to_string(rho) + " matrix");
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < i; ++j)
            if (gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw validation_error("gram", "matrix is not symmetric");
    if (static_cast<int>(canonical.size()) != rho)
        throw validation_error("canonical", "expected " + std::to_string(rho) + " coordinates");
    for (const auto& [dname, v] : divisors) {
        if (dname.empty() || (!std::isalpha(static_cast<unsigned char>(dname[0])) && dname[0] != '_'))
            throw validation_error("divisors", "name '" + dname + "' is not an identifier");
        for (char ch : dname)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw validation_error("divisors", "name '" + dname + "' is not an identifier");
        if (is_reserved_name(dname))
            throw validation_error("divisors", "name '" + dname + "' is reserved");
        if (static_cast<int>(v.size()) != rho)
            throw validation_error("divisors", "divisor '" + dname + "' expected " +
                                                   std::to_string(rho) + " coordinates");
    }
    if (divisors.find(polarization) == divisors.end())
        throw validation_error("polarization", "names no divisor entry");
    if (!(pair(polarization_vector(), polarization_vector()) > 0))
        throw validation_error("polarization", "polarization not positive");
}

bool is_reserved_name(const std::string& name) {
    if (name == "N" || name == "D" || name == "pt" || name == "box" || name == "exc" ||
        name == "diag")
        return true;
    // e<digits> is the canonical basis spelling of the cycle language
    if (name.size() >= 2 && name[0] == 'e') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
        if (digits) return true;
    }
    return false;
}

bool CycleX::is_zero() const {
    if (!r0.is_zero() || !pt.is_zero()) return false;
    for (const auto& p : div)
        if (!p.is_zero()) return false;
    return true;
}

CycleX operator+(const CycleX& a, const CycleX& b) {
    if (a.div.size() != b.div.size()) throw input_error("cycle rank mismatch in sum");
    CycleX r = a;
    r.r0 += b.r0;
    for (std::size_t i = 0; i < r.div.size(); ++i) r.div[i] += b.div[i];
    r.pt += b.pt;
    return r;
}

CycleX operator-(const CycleX& a, const CycleX& b) { return a + (-b); }

CycleX operator-(const CycleX& a) {
    CycleX r = a;
    r.r0 = -r.r0;
    for (auto& p : r.div) p = -p;
    r.pt = -r.pt;
    return r;
}

CycleX operator*(const Poly& s, const CycleX& a) {
    CycleX r = a;
    r.r0 = s * r.r0;
    for (auto& p : r.div) p = s * p;
    r.pt = s * r.pt;
    return r;
}

bool operator==(const CycleX& a, const CycleX& b) {
    return a.r0 == b.r0 && a.div == b.div && a.pt == b.pt;
}

CycleX mul_x(const CycleX& a, const CycleX& b, const SurfaceData& s) {
    if (a.rho() != s.rho || b.rho() != s.rho)
        throw input_error("cycle rank mismatch with surface '" + s.name + "'");
    CycleX r = CycleX::zero(s.rho);
    r.r0 = a.r0 * b.r0;
    for (int i = 0; i < s.rho; ++i)
        r.div[static_cast<std::size_t>(i)] =
            a.r0 * b.div[static_cast<std::size_t>(i)] + b.r0 * a.div[static_cast<std::size_t>(i)];
    r.pt = a.r0 * b.pt + b.r0 * a.pt + s.pair(a.div, b.div);
    return r;
}

SurfaceData k3_preset(int d) {
    if (d < 1) throw input_error("k3 preset needs d >= 1");
    SurfaceData s;
    s.name = "k3-deg" + std::to_string(2 * d);
    s.rho = 1;
    s.gram = {{Rational(2 * d)}};
    s.canonical = {Rational(0)};
    s.c2 = 24;
    s.divisors["H"] = {Rational(1)};
    s.polarization = "H";
    s.validate();
    return s;
}

SurfaceData quintic_preset() {
    SurfaceData s;
    s.name = "quintic";
    s.rho = 1;
    s.gram = {{Rational(5)}};
    s.canonical = {Rational(1)}; // K = hyperplane class, K^2 = 5
    s.c2 = 55;
    s.divisors["H"] = {Rational(1)};
    s.divisors["K"] = {Rational(1)};
    s.polarization = "H";
    s.validate();
    return s;
}

SurfaceData rational_elliptic_preset() {
    SurfaceData s;
    s.name = "rational-elliptic";
    s.rho = 2;
    // basis {s, f}: a section and the fiber class of the elliptic fibration
    s.gram = {{Rational(-2), Rational(1)}, {Rational(1), Rational(0)}};
    s.canonical = {Rational(0), Rational(-1)}; // K = -f: nonzero, K^2 = 0, K.H != 0
    s.c2 = 12;
    s.divisors["sec"] = {Rational(1), Rational(0)};
    s.divisors["fib"] = {Rational(0), Rational(1)};
    s.divisors["H"] = {Rational(1), Rational(3)};
    s.polarization = "H";
    s.validate();
    return s;
}

namespace {

using nlohmann::json;

Rational json_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) {
        std::ostringstream os;
        os << v;
        return parse_rational(os.str());
    }
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_float())
        throw validation_error(field, "floating point is not accepted; use \"p/q\" strings");
    throw validation_error(field, "expected an integer or a \"p/q\" string");
}

QVec json_qvec(const json& v, const std::string& field) {
    if (!v.is_array()) throw validation_error(field, "expected an array");
    QVec out;
    out.reserve(v.size());
    for (const auto& entry : v) out.push_back(json_rational(entry, field));
    return out;
}

} // namespace

SurfaceData parse_surface(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("surface document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("surface document must be a JSON object");

    auto need = [&](const char* key) -> const json& {
        if (!doc.contains(key)) throw validation_error(key, "missing");
        return doc.at(key);
    };

    SurfaceData s;
    if (!need("name").is_string()) throw validation_error("name", "expected a string");
    s.name = doc["name"].get<std::string>();
    if (!need("rho").is_number_integer()) throw validation_error("rho", "expected an integer");
    s.rho = doc["rho"].get<int>();

    const json& gram = need("gram");
    if (!gram.is_array()) throw validation_error("gram", "expected an array of rows");
    for (const auto& row : gram) s.gram.push_back(json_qvec(row, "gram"));

    s.canonical = json_qvec(need("canonical"), "canonical");
    s.c2 = json_rational(need("c2"), "c2");

    const json& divs = need("divisors");
    if (!divs.is_object()) throw validation_error("divisors", "expected an object");
    for (const auto& [dname, coords] : divs.items())
        s.divisors[dname] = json_qvec(coords, "divisors");

    if (!need("polarization").is_string())
        throw validation_error("polarization", "expected a divisor name");
    s.polarization = doc["polarization"].get<std::string>();

    s.validate();
    return s;
}

SurfaceData load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open surface file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface(buf.str());
}

} // namespace hilbstab
