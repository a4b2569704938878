#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "goodsemi/catalog.hpp"
#include "goodsemi/poincare.hpp"
#include "goodsemi/semigroup.hpp"

namespace goodsemi::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "goodsemi/1";

/// Malformed document: bad JSON, wrong shape, unknown or missing fields.
/// line/column are 1-based and 0 when the problem has no text position.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

enum class Kind { semigroup, ideal, polynomial, report };
std::string to_string(Kind k);

/// A parsed interchange document. Reports are kept as JSON.
struct Document {
    std::variant<GoodSemigroup, Ideal, Polynomial, Json> value;

    Kind kind() const;
    const GoodSemigroup& semigroup() const;  // throws FormatError on other kinds
    const Ideal& ideal() const;
    const Polynomial& polynomial() const;
    const Json& report() const;
};

/// Parses a document. Relative "parent" paths resolve against base_dir.
/// Throws FormatError, or ValidationError when the object fails the axioms.
Document parse(std::string_view text, const std::filesystem::path& base_dir = {});
Document parse_file(const std::filesystem::path& path);

/// Canonical text: one top-level key per line, values compact, trailing
/// newline. parse(print(d)) reproduces d.
std::string print(const Document& doc);
std::string print(const Json& j);

Json to_json(const GoodSemigroup& s);
Json to_json(const Ideal& e);  // parent embedded inline
Json to_json(const Polynomial& p);
Json to_json(const Point& p);

Json report_json(const ValidationReport& r, Kind object_kind);
Json report_json(const SymmetryVerdict& v, const Ideal& e);
/// Deterministic: contains no timings and does not depend on params.jobs.
Json report_json(const HuntReport& r);

}  // namespace goodsemi::io
