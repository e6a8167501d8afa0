#pragma once

/*
 * JSON algebra specifications.
 *
 *   {"kind": "gwpa", "variables": ["H1"], "a": ["H1"], "partials": [{"H1": "1"}]}
 *
 * Keys by kind:
 *   gwpa: variables, bracket (optional n x n matrix), a, partials or b,
 *         x_names / y_names (optional), rank (optional, must match a)
 *   ore:  variables, bracket, partials or b, alpha
 *   gwa:  variables (names or {"name", "weight"}), sigmas, a, d, nu
 * Every kind accepts "gallery": {"name", "params"}; a spec holding only the
 * gallery entry builds that gallery algebra, and a spec holding both must
 * agree with it. Polynomials are strings in the canonical grammar.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gwpa/gwa.hpp"
#include "gwpa/gwpa.hpp"

namespace gwpa {

/// Schema error at a JSON pointer such as "/partials/0/H1".
class SpecError : public Error {
public:
    SpecError(ErrorKind kind, std::string path, const std::string& what)
        : Error(kind, (path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// GWPA conditions violated by otherwise well-formed data. Each violation is
/// paired with the JSON pointers of the entries involved.
class SpecValidationError : public Error {
public:
    SpecValidationError(ValidationReport report, std::vector<std::string> locations);

    const ValidationReport& report() const noexcept { return report_; }
    const std::vector<std::string>& locations() const noexcept { return locations_; }

private:
    ValidationReport report_;
    std::vector<std::string> locations_;
};

struct GalleryRef {
    std::string name;
    std::map<std::string, int> params;
    bool operator==(const GalleryRef&) const = default;
};

using Algebra = std::variant<GWPAData, GWAData>;

struct AlgebraSpec {
    std::string kind;
    Algebra algebra;
    std::optional<GalleryRef> gallery;

    bool is_gwa() const { return std::holds_alternative<GWAData>(algebra); }
    const GWPAData& gwpa() const;
    const GWAData& gwa() const;
};

/// Throws ParseError (JSON syntax, with line and column), SpecError (schema,
/// polynomial syntax, unknown variables, bracket matrix problems) or
/// SpecValidationError.
AlgebraSpec parse_algebra_spec(std::string_view text);

/// Canonical JSON document, two-space indented, ending in a newline. An ore
/// spec is written out as the gwpa it realizes.
std::string render_algebra_spec(const AlgebraSpec& spec);

/// p2, p2n_<n>, gr_usl2, gr_heisenberg_<n>, weyl_<n>, usl2. A trailing
/// ".json" or ".gwa.json" is ignored. Throws InvalidArgument otherwise.
AlgebraSpec gallery_spec(std::string_view name);
std::vector<std::string> gallery_names();

}  // namespace gwpa
