#include "goodsemi/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <type_traits>

namespace goodsemi::io {

FormatError::FormatError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column) : what),
      line_(line),
      column_(column) {}

std::string to_string(Kind k) {
    switch (k) {
        case Kind::semigroup: return "semigroup";
        case Kind::ideal: return "ideal";
        case Kind::polynomial: return "polynomial";
        case Kind::report: return "report";
    }
    return "?";
}

Kind Document::kind() const { return static_cast<Kind>(value.index()); }

namespace {

template <class T>
const T& get_kind(const Document& d, Kind want) {
    if (const T* p = std::get_if<T>(&d.value)) return *p;
    throw FormatError("expected a " + to_string(want) + " document, got " + to_string(d.kind()));
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw FormatError(where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw FormatError("unknown field \"" + key + "\" in " + where);
    }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw FormatError("missing field \"" + std::string(key) + "\" in " + where);
    return *it;
}

std::int64_t integer(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw FormatError(what + " must be an integer");
    return j.get<std::int64_t>();
}

std::size_t read_dim(const Json& j, const std::string& where) {
    const auto s = integer(field(j, "s", where), where + ".s");
    if (s < 1 || s > static_cast<std::int64_t>(kMaxDim))
        throw FormatError(where + ".s must be between 1 and " + std::to_string(kMaxDim));
    return static_cast<std::size_t>(s);
}

Point read_point(const Json& j, std::size_t s, const std::string& what) {
    if (!j.is_array() || j.size() != s)
        throw FormatError(what + " must be an array of " + std::to_string(s) + " integers");
    Point p(s);
    for (std::size_t i = 0; i < s; ++i) p[i] = integer(j[i], what);
    return p;
}

std::vector<Point> read_points(const Json& j, std::size_t s, const std::string& what) {
    if (!j.is_array()) throw FormatError(what + " must be an array of points");
    std::vector<Point> out;
    for (const auto& x : j) out.push_back(read_point(x, s, what + " entry"));
    return out;
}

void check_header(const Json& j, const char* kind, const std::string& where) {
    const auto& f = field(j, "format", where);
    if (!f.is_string() || f.get<std::string>() != kFormat)
        throw FormatError(where + ": unsupported format, expected \"" + std::string(kFormat) + "\"");
    const auto& k = field(j, "kind", where);
    if (!k.is_string()) throw FormatError(where + ".kind must be a string");
    if (kind && k.get<std::string>() != kind)
        throw FormatError(where + ": expected kind \"" + std::string(kind) + "\", got \"" + k.get<std::string>() + "\"");
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte is 1-based and points at the offending character.
        const std::size_t upto = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < upto; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
        throw FormatError("JSON " + msg, line, col);
    }
}

GoodSemigroup semigroup_from(const Json& j, const std::string& where) {
    check_keys(j, {"format", "kind", "s", "gamma", "small"}, where);
    check_header(j, "semigroup", where);
    const auto s = read_dim(j, where);
    return GoodSemigroup::from_small(read_point(field(j, "gamma", where), s, where + ".gamma"),
                                     read_points(field(j, "small", where), s, where + ".small"));
}

Json read_file_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

GoodSemigroup parent_from(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        const std::filesystem::path rel = j.get<std::string>();
        const auto path = rel.is_absolute() ? rel : base_dir / rel;
        return semigroup_from(read_file_json(path), path.string());
    }
    return semigroup_from(j, "parent");
}

Ideal ideal_from(const Json& j, const std::filesystem::path& base_dir) {
    const std::string where = "ideal";
    check_keys(j, {"format", "kind", "s", "mu", "gamma", "small", "parent"}, where);
    check_header(j, "ideal", where);
    const auto s = read_dim(j, where);
    const auto parent = parent_from(field(j, "parent", where), base_dir);
    if (parent.dim() != s) throw FormatError("ideal and parent differ in dimension");
    return Ideal::from_small(parent, read_point(field(j, "mu", where), s, "ideal.mu"),
                             read_point(field(j, "gamma", where), s, "ideal.gamma"),
                             read_points(field(j, "small", where), s, "ideal.small"));
}

Polynomial polynomial_from(const Json& j) {
    const std::string where = "polynomial";
    check_keys(j, {"format", "kind", "s", "terms"}, where);
    check_header(j, "polynomial", where);
    const auto s = read_dim(j, where);
    const auto& terms = field(j, "terms", where);
    if (!terms.is_array()) throw FormatError("polynomial.terms must be an array");
    Polynomial p(s);
    std::set<Point, LexLess> seen;
    for (const auto& t : terms) {
        check_keys(t, {"exp", "coeff"}, "polynomial term");
        const Point e = read_point(field(t, "exp", "polynomial term"), s, "term exponent");
        const auto c = integer(field(t, "coeff", "polynomial term"), "term coefficient");
        if (!seen.insert(e).second) throw FormatError("repeated exponent " + e.str());
        p.add_term(e, c);
    }
    return p;
}

const std::map<std::string, std::set<std::string>>& report_fields() {
    static const std::map<std::string, std::set<std::string>> fields{
        {"validation", {"object_kind", "passed", "violations"}},
        {"symmetry", {"ideal", "conditions", "distances", "violations", "identity_holds", "p_e", "p_dual"}},
        {"hunt", {"params", "semigroups", "tested", "inconsistent", "failures"}},
    };
    return fields;
}

Json report_from(const Json& j) {
    check_header(j, "report", "report");
    const auto& type = field(j, "report_type", "report");
    if (!type.is_string()) throw FormatError("report.report_type must be a string");
    auto it = report_fields().find(type.get<std::string>());
    if (it == report_fields().end()) throw FormatError("unknown report_type \"" + type.get<std::string>() + "\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "format" && key != "kind" && key != "report_type" && !it->second.count(key))
            throw FormatError("unknown field \"" + key + "\" in " + it->first + " report");
    }
    return j;
}

Json header(const char* kind, std::size_t s) {
    Json j;
    j["format"] = kFormat;
    j["kind"] = kind;
    j["s"] = s;
    return j;
}

Json points_json(const std::vector<Point>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

Json report_header(const char* type) {
    Json j;
    j["format"] = kFormat;
    j["kind"] = "report";
    j["report_type"] = type;
    return j;
}

Json symmetry_json(const SymmetryReport& r) {
    Json c;
    c["i"] = r.cond_i;
    c["ii"] = r.cond_ii;
    c["iii"] = r.cond_iii;
    c["iv"] = r.cond_iv;
    Json d;
    d["lattice_over_ideal"] = r.dist_lattice_over_e;
    d["dual_over_lattice"] = r.dist_dual_over_lattice;
    d["ideal_over_conductor"] = r.dist_e_over_conductor;
    d["lattice_window"] = r.dist_lattice_window;
    d["dual_over_filtration"] = r.dist_dual_over_filtration;
    Json v = Json::array();
    for (const auto& x : r.violations) {
        Json o;
        o["condition"] = x.condition;
        o["delta"] = to_json(x.delta);
        if (x.axis) o["axis"] = *x.axis + 1;
        v.push_back(std::move(o));
    }
    Json out;
    out["conditions"] = std::move(c);
    out["distances"] = std::move(d);
    out["violations"] = std::move(v);
    return out;
}

}  // namespace

const GoodSemigroup& Document::semigroup() const { return get_kind<GoodSemigroup>(*this, Kind::semigroup); }
const Ideal& Document::ideal() const { return get_kind<Ideal>(*this, Kind::ideal); }
const Polynomial& Document::polynomial() const { return get_kind<Polynomial>(*this, Kind::polynomial); }
const Json& Document::report() const { return get_kind<Json>(*this, Kind::report); }

Document parse(std::string_view text, const std::filesystem::path& base_dir) {
    const Json j = parse_json(text);
    if (!j.is_object()) throw FormatError("document must be a JSON object");
    check_header(j, nullptr, "document");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "semigroup") return {semigroup_from(j, "semigroup")};
    if (kind == "ideal") return {ideal_from(j, base_dir)};
    if (kind == "polynomial") return {polynomial_from(j)};
    if (kind == "report") return {report_from(j)};
    throw FormatError("unknown kind \"" + kind + "\"");
}

Document parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.parent_path());
}

std::string print(const Json& j) {
    if (!j.is_object() || j.empty()) return j.dump() + "\n";
    std::string out = "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
        out += "  " + Json(key).dump() + ": ";
        const bool listing = value.is_array() && !value.empty() && value.front().is_object();
        if (listing) {
            out += "[\n";
            for (std::size_t n = 0; n < value.size(); ++n)
                out += "    " + value[n].dump() + (n + 1 < value.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += value.dump();
        }
        out += ++k < j.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

std::string print(const Document& doc) {
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Json>)
                return print(v);
            else
                return print(to_json(v));
        },
        doc.value);
}

Json to_json(const Point& p) {
    Json a = Json::array();
    for (auto x : p) a.push_back(x);
    return a;
}

Json to_json(const GoodSemigroup& s) {
    Json j = header("semigroup", s.dim());
    j["gamma"] = to_json(s.gamma());
    j["small"] = points_json(s.small());
    return j;
}

Json to_json(const Ideal& e) {
    Json j = header("ideal", e.dim());
    j["mu"] = to_json(e.mu());
    j["gamma"] = to_json(e.gamma());
    j["small"] = points_json(e.small());
    j["parent"] = to_json(e.parent());
    return j;
}

Json to_json(const Polynomial& p) {
    Json j = header("polynomial", p.dim());
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = to_json(e);
        t["coeff"] = c;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json report_json(const ValidationReport& r, Kind object_kind) {
    Json j = report_header("validation");
    j["object_kind"] = to_string(object_kind);
    j["passed"] = r.passed;
    Json v = Json::array();
    for (const auto& x : r.violations) {
        Json o;
        o["axiom"] = to_string(x.axiom);
        o["witnesses"] = points_json(x.witnesses);
        o["message"] = x.message;
        v.push_back(std::move(o));
    }
    j["violations"] = std::move(v);
    return j;
}

Json report_json(const SymmetryVerdict& v, const Ideal& e) {
    Json j = report_header("symmetry");
    j["ideal"] = to_json(e);
    const Json body = symmetry_json(v.report);
    for (const auto& [key, value] : body.items()) j[key] = value;
    j["identity_holds"] = v.identity_holds;
    j["p_e"] = to_json(v.p_e);
    j["p_dual"] = to_json(v.p_dual);
    return j;
}

Json report_json(const HuntReport& r) {
    Json j = report_header("hunt");
    Json params;
    params["s"] = r.params.s;
    params["gamma_max"] = to_json(r.params.gamma_max);
    params["mu_box"] = Json::array({to_json(r.params.mu_box.lo()), to_json(r.params.mu_box.hi())});
    params["gamma_box"] = r.params.gamma_box
                              ? Json::array({to_json(r.params.gamma_box->lo()), to_json(r.params.gamma_box->hi())})
                              : Json(nullptr);
    j["params"] = std::move(params);
    j["semigroups"] = r.semigroups;
    j["tested"] = r.tested;
    j["inconsistent"] = r.inconsistent;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json o;
        o["ideal"] = to_json(f.ideal);
        const Json body = symmetry_json(f.report);
        for (const auto& [key, value] : body.items()) o[key] = value;
        failures.push_back(std::move(o));
    }
    j["failures"] = std::move(failures);
    return j;
}

}  // namespace goodsemi::io
