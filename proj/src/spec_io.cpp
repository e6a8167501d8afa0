#include "gwpa/spec_io.hpp"

#include <json.hpp>

#include "gwpa/constructions.hpp"

namespace gwpa {

using Json = nlohmann::ordered_json;

namespace {

std::string describe(const ValidationReport& report, const std::vector<std::string>& locations) {
    std::string out = "the data violates the GWPA conditions:";
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
        const auto& v = report.violations[k];
        out += "\n  " + locations[k] + ": " + to_string(v.kind) + ": " + v.detail;
    }
    return out;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& require_key(const Json& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw SpecError(ErrorKind::Parse, "", "missing key \"" + key + "\"");
    return *it;
}

const Json& require_array(const Json& value, const std::string& path) {
    if (!value.is_array()) throw SpecError(ErrorKind::Parse, path, "expected an array");
    return value;
}

std::string require_string(const Json& value, const std::string& path) {
    if (!value.is_string()) throw SpecError(ErrorKind::Parse, path, "expected a string");
    return value.get<std::string>();
}

int require_int(const Json& value, const std::string& path) {
    if (!value.is_number_integer()) throw SpecError(ErrorKind::Parse, path, "expected an integer");
    return value.get<int>();
}

Polynomial poly_at(const Json& value, const std::string& path, const RingPtr& ring) {
    const std::string text = require_string(value, path);
    try {
        return parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        throw SpecError(ErrorKind::Parse, path, e.message() + " at column " + std::to_string(e.column()));
    } catch (const Error& e) {
        throw SpecError(e.kind(), path, e.what());
    }
}

std::vector<Polynomial> polys_at(const Json& doc, const std::string& key, const RingPtr& ring) {
    const std::string path = "/" + key;
    const Json& arr = require_array(require_key(doc, key), path);
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(poly_at(arr[k], child(path, k), ring));
    return out;
}

std::vector<std::string> names_at(const Json& doc, const std::string& key) {
    std::vector<std::string> out;
    auto it = doc.find(key);
    if (it == doc.end()) return out;
    const std::string path = "/" + key;
    require_array(*it, path);
    for (std::size_t k = 0; k < it->size(); ++k) out.push_back(require_string((*it)[k], child(path, k)));
    return out;
}

struct Variables {
    RingPtr ring;
    std::vector<int> weights;
};

Variables variables_at(const Json& doc) {
    const Json& arr = require_array(require_key(doc, "variables"), "/variables");
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string path = child("/variables", k);
        if (arr[k].is_object()) {
            names.push_back(require_string(require_key(arr[k], "name"), child(path, "name")));
            auto w = arr[k].find("weight");
            weights.push_back(w == arr[k].end() ? 1 : require_int(*w, child(path, "weight")));
        } else {
            names.push_back(require_string(arr[k], path));
            weights.push_back(1);
        }
    }
    try {
        return {make_ring(std::move(names)), std::move(weights)};
    } catch (const Error& e) {
        throw SpecError(e.kind(), "/variables", e.what());
    }
}

// Images per variable from an object {"var": "poly"}; absent variables get
// fallback(j).
template <class Fallback>
std::vector<Polynomial> images_at(const Json& obj, const std::string& path, const RingPtr& ring, Fallback fallback) {
    if (!obj.is_object()) throw SpecError(ErrorKind::Parse, path, "expected an object mapping variables to polynomials");
    std::vector<std::optional<Polynomial>> images(ring->size());
    for (const auto& [name, value] : obj.items()) {
        auto idx = ring->index_of(name);
        if (!idx) throw SpecError(ErrorKind::UnknownVariable, child(path, name), "unknown variable \"" + name + "\"");
        images[*idx] = poly_at(value, child(path, name), ring);
    }
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < ring->size(); ++j) out.push_back(images[j] ? *images[j] : fallback(j));
    return out;
}

BasePoissonAlgebra base_at(const Json& doc, const RingPtr& ring) {
    auto it = doc.find("bracket");
    if (it == doc.end()) return BasePoissonAlgebra::trivial(ring);
    const std::string path = "/bracket";
    require_array(*it, path);
    if (it->size() != ring->size()) throw SpecError(ErrorKind::Parse, path, "expected one row per variable");
    BracketMatrix m;
    for (std::size_t j = 0; j < it->size(); ++j) {
        const Json& row = require_array((*it)[j], child(path, j));
        if (row.size() != ring->size()) throw SpecError(ErrorKind::Parse, child(path, j), "expected one entry per variable");
        std::vector<Polynomial> r;
        for (std::size_t k = 0; k < row.size(); ++k) r.push_back(poly_at(row[k], child(child(path, j), k), ring));
        m.push_back(std::move(r));
    }
    try {
        return BasePoissonAlgebra(ring, std::move(m));
    } catch (const Error& e) {
        throw SpecError(e.kind(), path, e.what());
    }
}

struct Derivations {
    std::vector<BaseDerivation> list;
    std::string key;  // "partials" or "b"
};

Derivations derivations_at(const Json& doc, const RingPtr& ring) {
    const bool has_partials = doc.contains("partials");
    const bool has_b = doc.contains("b");
    if (has_partials == has_b) throw SpecError(ErrorKind::Parse, "", "give exactly one of \"partials\" and \"b\"");
    Derivations out;
    if (has_partials) {
        out.key = "partials";
        const Json& arr = require_array(doc["partials"], "/partials");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            auto images = images_at(arr[i], child("/partials", i), ring, [&](std::size_t) { return Polynomial(ring); });
            out.list.emplace_back(ring, std::move(images));
        }
    } else {
        out.key = "b";
        const auto bs = polys_at(doc, "b", ring);
        if (bs.size() > ring->size()) throw SpecError(ErrorKind::Parse, "/b", "more entries than variables");
        for (std::size_t i = 0; i < bs.size(); ++i) out.list.push_back(BaseDerivation::scaled_partial(ring, i, bs[i]));
    }
    return out;
}

std::vector<std::string> locate(const Violation& v, const std::string& dkey) {
    // Violation indices are 1-based; JSON pointers are 0-based.
    const std::string di = "/" + dkey + "/" + std::to_string(v.i - 1);
    switch (v.kind) {
        case Violation::Kind::NotPoissonDerivation: return {di};
        case Violation::Kind::NonCommuting: return {di, "/" + dkey + "/" + std::to_string(*v.j - 1)};
        case Violation::Kind::NotPoissonCentral: return {"/a/" + std::to_string(v.i - 1)};
        case Violation::Kind::CrossDerivation: return {di, "/a/" + std::to_string(*v.j - 1)};
    }
    return {};
}

GWPAData gwpa_from(const Json& doc) {
    const auto vars = variables_at(doc);
    const RingPtr& ring = vars.ring;
    BasePoissonAlgebra base = base_at(doc, ring);
    auto a = polys_at(doc, "a", ring);
    auto ds = derivations_at(doc, ring);
    if (a.size() != ds.list.size()) {
        throw SpecError(ErrorKind::Parse, "/" + ds.key, "expected " + std::to_string(a.size()) + " entries, one per a_i");
    }
    if (auto r = doc.find("rank"); r != doc.end() && require_int(*r, "/rank") != static_cast<int>(a.size())) {
        throw SpecError(ErrorKind::Parse, "/rank", "rank does not match the length of \"a\"");
    }
    try {
        GWPAData A(std::move(base), std::move(a), std::move(ds.list), names_at(doc, "x_names"), names_at(doc, "y_names"));
        auto report = validate_gwpa(A);
        if (!report.ok) {
            std::vector<std::string> locations;
            for (const auto& v : report.violations) {
                std::string joined;
                for (const auto& l : locate(v, ds.key)) joined += (joined.empty() ? "" : ", ") + l;
                locations.push_back(joined);
            }
            throw SpecValidationError(std::move(report), std::move(locations));
        }
        return A;
    } catch (const SpecValidationError&) {
        throw;
    } catch (const Error& e) {
        throw SpecError(e.kind(), "", e.what());
    }
}

GWPAData ore_from(const Json& doc) {
    const auto vars = variables_at(doc);
    BasePoissonAlgebra base = base_at(doc, vars.ring);
    auto ds = derivations_at(doc, vars.ring);
    auto alphas = polys_at(doc, "alpha", vars.ring);
    if (alphas.size() != ds.list.size()) throw SpecError(ErrorKind::Parse, "/alpha", "expected one entry per derivation");
    try {
        return from_ore_data(base, ds.list, alphas);
    } catch (const Error& e) {
        throw SpecError(e.kind(), "", e.what());
    }
}

GWAData gwa_from(const Json& doc) {
    const auto vars = variables_at(doc);
    const RingPtr& ring = vars.ring;
    auto a = polys_at(doc, "a", ring);
    const Json& sarr = require_array(require_key(doc, "sigmas"), "/sigmas");
    std::vector<AffineMap> sigmas;
    for (std::size_t i = 0; i < sarr.size(); ++i) {
        const std::string path = child("/sigmas", i);
        auto images = images_at(sarr[i], path, ring, [&](std::size_t j) { return Polynomial::variable(ring, j); });
        try {
            sigmas.emplace_back(ring, std::move(images));
        } catch (const Error& e) {
            throw SpecError(e.kind(), path, e.what());
        }
    }
    const Json& darr = require_array(require_key(doc, "d"), "/d");
    std::vector<int> d;
    for (std::size_t i = 0; i < darr.size(); ++i) d.push_back(require_int(darr[i], child("/d", i)));
    const int nu = require_int(require_key(doc, "nu"), "/nu");
    try {
        return GWAData(ring, std::move(sigmas), std::move(a), vars.weights, std::move(d), nu, names_at(doc, "x_names"),
                       names_at(doc, "y_names"));
    } catch (const Error& e) {
        throw SpecError(e.kind(), "", e.what());
    }
}

int param(const GalleryRef& g, const std::string& key) {
    auto it = g.params.find(key);
    if (it == g.params.end()) throw SpecError(ErrorKind::Parse, "/gallery/params", "missing parameter \"" + key + "\"");
    if (it->second < 1) throw SpecError(ErrorKind::InvalidArgument, "/gallery/params/" + key, "must be at least 1");
    return it->second;
}

Algebra build_gallery(const GalleryRef& g) {
    if (g.name == "p2n") return gallery_p2n(static_cast<std::size_t>(param(g, "n")));
    if (g.name == "gr_usl2") return gallery_gr_usl2();
    if (g.name == "gr_heisenberg") return gallery_gr_heisenberg(static_cast<std::size_t>(param(g, "n")));
    if (g.name == "weyl") return gallery_weyl(static_cast<std::size_t>(param(g, "n")));
    if (g.name == "usl2") return gallery_usl2();
    throw SpecError(ErrorKind::InvalidArgument, "/gallery/name", "unknown gallery algebra \"" + g.name + "\"");
}

std::string kind_of(const GalleryRef& g) { return (g.name == "weyl" || g.name == "usl2") ? "gwa" : "gwpa"; }

GalleryRef gallery_at(const Json& value) {
    if (!value.is_object()) throw SpecError(ErrorKind::Parse, "/gallery", "expected an object");
    GalleryRef g;
    g.name = require_string(require_key(value, "name"), "/gallery/name");
    if (auto p = value.find("params"); p != value.end()) {
        if (!p->is_object()) throw SpecError(ErrorKind::Parse, "/gallery/params", "expected an object");
        for (const auto& [k, v] : p->items()) g.params[k] = require_int(v, "/gallery/params/" + k);
    }
    return g;
}

Json poly_array(const std::vector<Polynomial>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

Json images_object(const std::vector<Polynomial>& images, const RingPtr& ring, bool skip_identity) {
    Json obj = Json::object();
    for (std::size_t j = 0; j < images.size(); ++j) {
        const bool skip = skip_identity ? images[j] == Polynomial::variable(ring, j) : images[j].is_zero();
        if (!skip) obj[ring->name(j)] = images[j].to_string();
    }
    return obj;
}

}  // namespace

SpecValidationError::SpecValidationError(ValidationReport report, std::vector<std::string> locations)
    : Error(ErrorKind::Validation, describe(report, locations)),
      report_(std::move(report)),
      locations_(std::move(locations)) {}

const GWPAData& AlgebraSpec::gwpa() const {
    if (is_gwa()) throw Error(ErrorKind::InvalidArgument, "this command needs a GWPA spec, not a GWA spec");
    return std::get<GWPAData>(algebra);
}

const GWAData& AlgebraSpec::gwa() const {
    if (!is_gwa()) throw Error(ErrorKind::InvalidArgument, "this command needs a GWA spec");
    return std::get<GWAData>(algebra);
}

AlgebraSpec parse_algebra_spec(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Translate the byte offset into a line and column.
        std::size_t line = 1, column = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (auto pos = what.find("; "); pos != std::string::npos) what = what.substr(pos + 2);
        throw ParseError("invalid JSON: " + what, line, column);
    }
    if (!doc.is_object()) throw SpecError(ErrorKind::Parse, "", "the spec must be a JSON object");

    std::optional<GalleryRef> gallery;
    if (auto g = doc.find("gallery"); g != doc.end()) gallery = gallery_at(*g);

    std::string kind;
    if (auto k = doc.find("kind"); k != doc.end()) {
        kind = require_string(*k, "/kind");
    } else if (gallery) {
        kind = kind_of(*gallery);
    } else {
        throw SpecError(ErrorKind::Parse, "", "missing key \"kind\"");
    }
    if (kind != "gwpa" && kind != "gwa" && kind != "ore") {
        throw SpecError(ErrorKind::Parse, "/kind", "expected \"gwpa\", \"gwa\" or \"ore\"");
    }

    const bool has_data = doc.contains("variables");
    if (!has_data) {
        if (!gallery) throw SpecError(ErrorKind::Parse, "", "missing key \"variables\"");
        if (kind_of(*gallery) != kind) throw SpecError(ErrorKind::Parse, "/kind", "does not match the gallery algebra");
        return {kind, build_gallery(*gallery), gallery};
    }
    AlgebraSpec spec{kind, kind == "gwa" ? Algebra(gwa_from(doc)) : Algebra(kind == "ore" ? ore_from(doc) : gwpa_from(doc)),
                     gallery};
    if (gallery && !(build_gallery(*gallery) == spec.algebra)) {
        throw SpecError(ErrorKind::Validation, "/gallery", "the data does not match the named gallery algebra");
    }
    return spec;
}

std::string render_algebra_spec(const AlgebraSpec& spec) {
    Json doc;
    doc["kind"] = spec.is_gwa() ? "gwa" : "gwpa";
    if (spec.gallery) {
        Json params = Json::object();
        for (const auto& [k, v] : spec.gallery->params) params[k] = v;
        doc["gallery"] = {{"name", spec.gallery->name}, {"params", params}};
    }
    if (spec.is_gwa()) {
        const GWAData& A = spec.gwa();
        Json vars = Json::array();
        for (std::size_t j = 0; j < A.ring()->size(); ++j) {
            vars.push_back({{"name", A.ring()->name(j)}, {"weight", A.weights()[j]}});
        }
        doc["variables"] = vars;
        Json sigmas = Json::array();
        for (const auto& s : A.sigmas()) sigmas.push_back(images_object(s.images(), A.ring(), true));
        doc["sigmas"] = sigmas;
        doc["a"] = poly_array(A.a());
        doc["d"] = A.d();
        doc["nu"] = A.nu();
        doc["x_names"] = A.x_names();
        doc["y_names"] = A.y_names();
    } else {
        const GWPAData& A = spec.gwpa();
        doc["variables"] = A.ring()->names();
        if (!A.base().is_trivial()) {
            Json m = Json::array();
            for (const auto& row : A.base().matrix()) m.push_back(poly_array(row));
            doc["bracket"] = m;
        }
        doc["a"] = poly_array(A.a());
        Json partials = Json::array();
        for (const auto& d : A.partials()) partials.push_back(images_object(d.images(), A.ring(), false));
        doc["partials"] = partials;
        doc["x_names"] = A.x_names();
        doc["y_names"] = A.y_names();
    }
    return doc.dump(2) + "\n";
}

AlgebraSpec gallery_spec(std::string_view name) {
    std::string n(name);
    for (const std::string suffix : {".gwa.json", ".json"}) {
        if (n.size() > suffix.size() && n.ends_with(suffix)) {
            n.resize(n.size() - suffix.size());
            break;
        }
    }
    GalleryRef g;
    auto indexed = [&](const std::string& prefix) -> std::optional<int> {
        if (!n.starts_with(prefix)) return std::nullopt;
        const std::string digits = n.substr(prefix.size());
        if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) {
            return std::nullopt;
        }
        return std::stoi(digits);
    };
    if (n == "p2") {
        g = {"p2n", {{"n", 1}}};
    } else if (auto k = indexed("p2n_")) {
        g = {"p2n", {{"n", *k}}};
    } else if (n == "gr_usl2" || n == "usl2") {
        g = {n, {}};
    } else if (auto k = indexed("gr_heisenberg_")) {
        g = {"gr_heisenberg", {{"n", *k}}};
    } else if (auto k = indexed("weyl_")) {
        g = {"weyl", {{"n", *k}}};
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown gallery algebra \"" + std::string(name) +
                                                    "\"; known: p2, p2n_<n>, gr_usl2, gr_heisenberg_<n>, weyl_<n>, usl2");
    }
    return {kind_of(g), build_gallery(g), g};
}

std::vector<std::string> gallery_names() {
    return {"p2", "p2n_<n>", "gr_usl2", "gr_heisenberg_<n>", "weyl_<n>", "usl2"};
}

}  // namespace gwpa
