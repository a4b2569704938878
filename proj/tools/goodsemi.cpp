// goodsemi: command-line front end for good semigroups and their ideals.
//
// Exit codes: 0 ok / true, 1 mathematical false, 2 usage, 3 invalid input
// or unmet precondition, 4 budget exceeded, 5 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "goodsemi/catalog.hpp"
#include "goodsemi/duality.hpp"
#include "goodsemi/idealops.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/metric.hpp"
#include "goodsemi/poincare.hpp"
#include "goodsemi/render.hpp"

namespace gs = goodsemi;
namespace io = goodsemi::io;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kInvalid = 3, kBudget = 4, kInternal = 5 };

class UsageError : public gs::Error {
public:
    using gs::Error::Error;
};

std::vector<gs::Coord> parse_list(const std::string& text, const std::string& what) {
    std::vector<gs::Coord> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(what + ": not a comma-separated list of integers: " + text);
        }
    }
    return out;
}

gs::Point parse_point(const std::string& text, std::size_t s, const std::string& what) {
    auto v = parse_list(text, what);
    if (v.size() != s) throw UsageError(what + " needs " + std::to_string(s) + " coordinates");
    return gs::Point(std::span<const gs::Coord>(v));
}

gs::Box parse_box(const std::string& text, std::size_t s, const std::string& what) {
    auto v = parse_list(text, what);
    if (v.size() != 2 * s) throw UsageError(what + " needs " + std::to_string(2 * s) + " numbers (lo then hi)");
    const gs::Point lo(std::span<const gs::Coord>(v.data(), s)), hi(std::span<const gs::Coord>(v.data() + s, s));
    if (!gs::leq(lo, hi)) throw UsageError(what + ": lower corner exceeds upper corner");
    return gs::Box(lo, hi);
}

gs::GoodSemigroup load_semigroup(const std::string& path) { return io::parse_file(path).semigroup(); }

gs::Ideal load_ideal(const gs::GoodSemigroup& s, const std::string& path) {
    auto doc = io::parse_file(path);
    if (doc.kind() == io::Kind::semigroup) {
        if (!(doc.semigroup() == s)) throw gs::DomainError(path + " is a different semigroup");
        return gs::Ideal::whole(s);
    }
    const auto& e = doc.ideal();
    if (!(e.parent() == s)) throw gs::DomainError(path + ": ideal does not belong to the given semigroup");
    return e;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Good semigroups of N^s: validation, duality, distances, Poincare polynomials"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string file, file2, file3, out_path, window_text, format_text = "ascii";
    bool json = false, print_canonical = false, no_marks = false;

    auto* validate = app.add_subcommand("validate", "check the axioms of a semigroup or ideal file");
    validate->add_option("FILE", file)->required();
    validate->add_flag("--print", print_canonical, "print the canonical form on success");

    auto* info = app.add_subcommand("info", "summarize a document");
    info->add_option("FILE", file)->required();

    auto* canonical = app.add_subcommand("canonical", "the canonical ideal K0 of a semigroup (or of an ideal's parent)");
    canonical->add_option("FILE", file)->required();

    auto* dual = app.add_subcommand("dual", "K0 - E");
    dual->add_option("SEMIGROUP", file)->required();
    dual->add_option("IDEAL", file2)->required();

    auto* distance = app.add_subcommand("distance", "dist(OUTER \\ INNER) for INNER contained in OUTER");
    distance->add_option("SEMIGROUP", file)->required();
    distance->add_option("OUTER", file2)->required();
    distance->add_option("INNER", file3)->required();

    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of S or of an ideal");
    poincare->add_option("SEMIGROUP", file)->required();
    poincare->add_option("IDEAL", file2);
    poincare->add_flag("--json", json, "emit a polynomial document");

    auto* symmetry = app.add_subcommand("symmetry", "the four symmetry conditions and the Poincare identity");
    symmetry->add_option("SEMIGROUP", file)->required();
    symmetry->add_option("IDEAL", file2)->required();
    symmetry->add_flag("--json", json, "emit a report document");

    std::size_t s_dim = 2;
    std::string gamma_max_text, mu_box_text, gamma_box_text;
    unsigned jobs = 1;
    auto* search = app.add_subcommand("search", "test every enumerated (S, E) for the symmetry conditions");
    search->add_option("--s", s_dim, "dimension (1 or 2)")->check(CLI::Range(1, 2));
    search->add_option("--gamma-max", gamma_max_text, "largest conductor of S, e.g. 2,2")->required();
    search->add_option("--mu-box", mu_box_text, "box for the minimum of E: lo then hi, e.g. -2,-2,2,2");
    search->add_option("--gamma-box", gamma_box_text, "box for the conductor of E: lo then hi");
    search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", out_path, "write the report here instead of stdout");

    auto* render = app.add_subcommand("render", "staircase picture of an s = 2 semigroup or ideal");
    render->add_option("FILE", file)->required();
    render->add_option("--window", window_text, "x0,y0,x1,y1 (default: one cell around [mu, gamma])");
    render->add_option("--format", format_text, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", out_path, "write here instead of stdout");
    render->add_flag("--no-marks", no_marks, "do not mark mu and gamma");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) {
            const auto doc = io::parse_file(file);
            if (doc.kind() == io::Kind::report || doc.kind() == io::Kind::polynomial) {
                std::cout << "well-formed " << io::to_string(doc.kind()) << "\n";
            } else {
                std::cout << "valid " << io::to_string(doc.kind()) << "\n";
            }
            if (print_canonical) std::cout << io::print(doc);
            return kOk;
        }
        if (*info) {
            const auto doc = io::parse_file(file);
            std::cout << "kind: " << io::to_string(doc.kind()) << "\n";
            auto describe = [](const gs::Ideal& e, bool is_semigroup) {
                const auto& s = e.parent();
                std::cout << "s: " << e.dim() << "\n"
                          << "mu: " << e.mu().str() << "\n"
                          << "gamma: " << e.gamma().str() << "\n"
                          << "small: " << e.small().size() << "\n";
                if (is_semigroup) {
                    std::cout << "symmetric: " << yes_no(gs::is_canonical(s, e)) << "\n";
                } else {
                    std::cout << "goodness: " << gs::to_string(e.goodness()) << "\n"
                              << "canonical: " << yes_no(gs::is_canonical(s, e)) << "\n";
                }
                std::cout << "poincare: " << gs::poincare_polynomial(e).str() << "\n";
            };
            switch (doc.kind()) {
                case io::Kind::semigroup: describe(gs::Ideal::whole(doc.semigroup()), true); break;
                case io::Kind::ideal: describe(doc.ideal(), false); break;
                case io::Kind::polynomial:
                    std::cout << "s: " << doc.polynomial().dim() << "\n"
                              << "terms: " << doc.polynomial().terms().size() << "\n"
                              << "value: " << doc.polynomial().str() << "\n";
                    break;
                case io::Kind::report: std::cout << "report_type: " << doc.report().at("report_type").get<std::string>() << "\n"; break;
            }
            return kOk;
        }
        if (*canonical) {
            const auto doc = io::parse_file(file);
            const auto s = doc.kind() == io::Kind::ideal ? doc.ideal().parent() : doc.semigroup();
            std::cout << io::print(io::to_json(gs::normalized_canonical(s)));
            return kOk;
        }
        if (*dual) {
            const auto s = load_semigroup(file);
            std::cout << io::print(io::to_json(gs::dual(s, load_ideal(s, file2))));
            return kOk;
        }
        if (*distance) {
            const auto s = load_semigroup(file);
            std::cout << gs::ideal_distance(load_ideal(s, file2), load_ideal(s, file3)) << "\n";
            return kOk;
        }
        if (*poincare) {
            const auto s = load_semigroup(file);
            const auto e = file2.empty() ? gs::Ideal::whole(s) : load_ideal(s, file2);
            const auto p = gs::poincare_polynomial(e);
            std::cout << (json ? io::print(io::to_json(p)) : p.str() + "\n");
            return kOk;
        }
        if (*symmetry) {
            const auto s = load_semigroup(file);
            const auto e = load_ideal(s, file2);
            const auto v = gs::check_symmetry_theorem(s, e);
            if (json) {
                std::cout << io::print(io::report_json(v, e));
            } else {
                std::cout << "cond_i: " << yes_no(v.report.cond_i) << "\n"
                          << "cond_ii: " << yes_no(v.report.cond_ii) << "\n"
                          << "cond_iii: " << yes_no(v.report.cond_iii) << "\n"
                          << "cond_iv: " << yes_no(v.report.cond_iv) << "\n"
                          << "P_E: " << v.p_e.str() << "\n"
                          << "P_dual: " << v.p_dual.str() << "\n"
                          << "identity: " << (v.identity_holds ? "holds" : "fails") << "\n";
            }
            return v.report.all_true() && v.identity_holds ? kOk : kFalse;
        }
        if (*search) {
            gs::HuntParams params;
            params.s = s_dim;
            params.gamma_max = parse_point(gamma_max_text, s_dim, "--gamma-max");
            params.mu_box = mu_box_text.empty() ? gs::Box(gs::Point(s_dim), gs::Point(s_dim))
                                                : parse_box(mu_box_text, s_dim, "--mu-box");
            if (!gamma_box_text.empty()) params.gamma_box = parse_box(gamma_box_text, s_dim, "--gamma-box");
            params.jobs = jobs;
            params.budget = gs::Budget::from_env();
            const auto report = gs::hunt_symmetry(params);
            write_out(out_path, io::print(io::report_json(report)));
            std::cerr << "semigroups " << report.semigroups << ", pairs tested " << report.tested << ", failures "
                      << report.failures.size() << ", inconsistent " << report.inconsistent << "\n";
            return report.failures.empty() ? kOk : kFalse;
        }
        if (*render) {
            const auto doc = io::parse_file(file);
            const gs::Representation& rep =
                doc.kind() == io::Kind::ideal ? doc.ideal().rep() : doc.semigroup().rep();
            if (rep.dim() != 2) throw gs::DimensionMismatch("render needs s = 2");
            const auto window = window_text.empty()
                                    ? gs::Box(rep.mu() - gs::Point::filled(2, 1), rep.conductor() + gs::Point::filled(2, 1))
                                    : parse_box(window_text, 2, "--window");
            const auto fmt = format_text == "svg" ? gs::RenderFormat::svg : gs::RenderFormat::ascii;
            write_out(out_path, gs::render_staircase(rep, window, fmt, {!no_marks}));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const gs::ValidationError& e) {
        std::cerr << "invalid: " << e.report().summary() << "\n";
        return kInvalid;
    } catch (const gs::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const gs::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const gs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
