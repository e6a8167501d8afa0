#include "gwpa/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gwpa/centre.hpp"
#include "gwpa/simplicity.hpp"
#include "gwpa/spec_io.hpp"

namespace gwpa::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string target;
    std::vector<std::string> args;
    int degree = 6;
    int window = 4;
    int filtration = 2;
    std::string alpha;
    std::string kind = "poisson";
    std::string format = "text";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCommands{"validate", "bracket",  "mul",           "centre", "field-check",
                                         "simple",   "closure", "quantize-check", "gallery"};

AlgebraSpec load(const std::string& target) {
    if (std::filesystem::is_regular_file(target)) {
        std::ifstream in(target);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return parse_algebra_spec(buf.str());
        } catch (const SpecValidationError&) {
            throw;
        } catch (const ParseError& e) {
            throw ParseError(target + ": " + e.message(), e.line(), e.column());
        } catch (const Error& e) {
            throw Error(e.kind(), target + ": " + e.what());
        }
    }
    return gallery_spec(target);
}

std::string describe_algebra(const AlgebraSpec& spec) {
    std::string names;
    const RingPtr& ring = spec.is_gwa() ? spec.gwa().ring() : spec.gwpa().ring();
    for (const auto& n : ring->names()) names += (names.empty() ? "" : ", ") + n;
    const std::size_t rank = spec.is_gwa() ? spec.gwa().rank() : spec.gwpa().rank();
    return (spec.is_gwa() ? "gwa" : "gwpa") + std::string(" of rank ") + std::to_string(rank) + " over K[" + names + "]";
}

std::string grade_text(const GradeVector& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    return s + ")";
}

GradeVector parse_alpha(const std::string& text, std::size_t rank) {
    if (text.empty()) return zero_grade(rank);
    GradeVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--alpha expects comma-separated integers, got \"" + text + "\"");
        }
    }
    if (out.size() != rank) {
        throw Error(ErrorKind::InvalidArgument,
                    "--alpha has " + std::to_string(out.size()) + " entries but the rank is " + std::to_string(rank));
    }
    return out;
}

Json verdict_json(const CriterionVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["exact"] = v.exact;
    j["summary"] = v.evidence.summary;
    if (v.evidence.witness) j["witness"] = v.evidence.witness->to_string();
    if (v.evidence.degree) j["degree"] = *v.evidence.degree;
    if (v.evidence.bound) j["bound"] = *v.evidence.bound;
    return j;
}

std::string verdict_text(const CriterionVerdict& v) {
    std::string s = std::string(to_string(v.status)) + (v.exact ? " (exact)" : " (up to the search bounds)") + ": " +
                    v.evidence.summary;
    if (v.evidence.witness) s += "; witness " + v.evidence.witness->to_string();
    if (v.evidence.degree) s += " in degree " + grade_text(*v.evidence.degree);
    return s;
}

void require_args(const Options& o, std::size_t n, const std::string& shape) {
    if (o.args.size() != n) throw UsageError(o.command + " expects " + shape);
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
    if (o.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

Json settings(const Options& o) {
    return {{"degree", o.degree}, {"window", o.window}, {"filtration", o.filtration}};
}

void cmd_validate(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    Json j{{"command", "validate"}, {"algebra", describe_algebra(spec)}, {"ok", true}, {"violations", Json::array()}};
    emit(out, o, j, "algebra: " + describe_algebra(spec) + "\nvalidation: ok\n");
}

void cmd_binary(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    require_args(o, 2, "two elements");
    std::string result;
    if (spec.is_gwa()) {
        const GWAData& A = spec.gwa();
        auto u = parse_element(A, o.args[0]);
        auto v = parse_element(A, o.args[1]);
        result = render(A, o.command == "mul" ? gwa_mul(A, u, v) : gwa_commutator(A, u, v));
    } else {
        const GWPAData& A = spec.gwpa();
        auto u = parse_element(A, o.args[0]);
        auto v = parse_element(A, o.args[1]);
        result = render(A, o.command == "mul" ? gwpa_mul(A, u, v) : gwpa_bracket(A, u, v));
    }
    Json j{{"command", o.command}, {"u", o.args[0]}, {"v", o.args[1]}, {"result", result}};
    emit(out, o, j, result + "\n");
}

void cmd_centre(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    require_args(o, 0, "no element arguments");
    const GWPAData& A = spec.gwpa();
    const GradeVector alpha = parse_alpha(o.alpha, A.rank());
    CentreKind kind;
    if (o.kind == "constants") {
        kind = CentreKind::Constants;
    } else if (o.kind == "absolute") {
        kind = CentreKind::Absolute;
    } else {
        kind = CentreKind::Poisson;
    }
    const auto c = centre_component(A, alpha, o.degree, kind);
    Json basis = Json::array();
    std::string text = "centre component of " + describe_algebra(spec) + "\nkind: " + to_string(c.kind) +
                       "\nalpha: " + grade_text(c.degree) + "\ndegree bound: " + std::to_string(o.degree) +
                       "\ndimension: " + std::to_string(c.basis.size()) + "\nbasis:\n";
    for (const auto& p : c.basis) {
        basis.push_back(p.to_string());
        text += "  " + p.to_string() + "\n";
    }
    Json j{{"command", "centre"},     {"kind", to_string(c.kind)}, {"alpha", c.degree},
           {"settings", settings(o)}, {"dimension", c.basis.size()}, {"basis", basis}};
    emit(out, o, j, text);
}

void cmd_field_check(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    require_args(o, 0, "no element arguments");
    const auto r = field_criterion(spec.gwpa(), o.degree, o.window);
    Json j{{"command", "field-check"},
           {"settings", settings(o)},
           {"characteristic", verdict_json(r.characteristic)},
           {"constants_field", verdict_json(r.constants_field)},
           {"absolute_components", verdict_json(r.absolute_components)},
           {"overall", verdict_json(r.overall)}};
    std::string text = "field criterion for " + describe_algebra(spec) + "\ndegree bound: " + std::to_string(o.degree) +
                       ", window: " + std::to_string(o.window) + "\ncharacteristic zero: " +
                       verdict_text(r.characteristic) + "\nconstants form a field: " + verdict_text(r.constants_field) +
                       "\nabsolute components vanish: " + verdict_text(r.absolute_components) +
                       "\noverall: " + verdict_text(r.overall) + "\n";
    emit(out, o, j, text);
}

void cmd_simple(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    require_args(o, 0, "no element arguments");
    const auto r = simplicity_check(spec.gwpa(), o.degree, o.window);
    Json j{{"command", "simple"},
           {"settings", settings(o)},
           {"univariate_family", r.univariate_family},
           {"condition1", verdict_json(r.condition1)},
           {"condition2", verdict_json(r.condition2)},
           {"condition3", verdict_json(r.condition3)},
           {"field",
            {{"characteristic", verdict_json(r.field.characteristic)},
             {"constants_field", verdict_json(r.field.constants_field)},
             {"absolute_components", verdict_json(r.field.absolute_components)}}},
           {"overall", to_string(r.overall)}};
    std::string text = "simplicity of " + describe_algebra(spec) + "\ndegree bound: " + std::to_string(o.degree) +
                       ", window: " + std::to_string(o.window) + "\nfamily: " +
                       (r.univariate_family ? "univariate" : "general") +
                       "\ncondition 1 (no proper invariant Poisson ideal of D): " + verdict_text(r.condition1) +
                       "\ncondition 2 (a_i and d_i(a_i) generate D): " + verdict_text(r.condition2) +
                       "\ncondition 3 (absolute centre is a field): " + verdict_text(r.condition3) +
                       "\n  characteristic zero: " + verdict_text(r.field.characteristic) +
                       "\n  constants form a field: " + verdict_text(r.field.constants_field) +
                       "\n  absolute components vanish: " + verdict_text(r.field.absolute_components) +
                       "\noverall: " + to_string(r.overall) + "\n";
    emit(out, o, j, text);
}

void cmd_closure(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    if (o.args.empty()) throw UsageError("closure expects at least one generator");
    const GWPAData& A = spec.gwpa();
    std::vector<GWPAElement> gens;
    Json jgens = Json::array();
    for (const auto& s : o.args) {
        gens.push_back(parse_element(A, s));
        jgens.push_back(render(A, gens.back()));
    }
    const auto c = poisson_ideal_closure(A, gens, o.degree);
    Json j{{"command", "closure"},         {"settings", settings(o)},          {"generators", jgens},
           {"contains_unit", c.contains_unit}, {"dimension", c.basis.size()}, {"overflow", c.overflow}};
    std::string gtext;
    for (const auto& g : jgens) gtext += (gtext.empty() ? "" : ", ") + g.get<std::string>();
    std::string text = "Poisson ideal closure of [" + gtext + "] in " + describe_algebra(spec) +
                       "\nweight bound: " + std::to_string(o.degree) +
                       "\ncontains unit: " + (c.contains_unit ? "yes" : "no") +
                       "\ndimension: " + std::to_string(c.basis.size()) +
                       "\noverflow (dropped above the bound): " + std::to_string(c.overflow) + "\n";
    emit(out, o, j, text);
}

void cmd_quantize(const Options& o, const AlgebraSpec& spec, std::ostream& out) {
    const GWAData& A = spec.gwa();
    std::vector<std::pair<GWAElement, GWAElement>> pairs;
    if (!o.args.empty()) {
        if (o.args.size() % 2 != 0) throw UsageError("quantize-check expects elements in pairs");
        for (std::size_t k = 0; k < o.args.size(); k += 2) {
            pairs.emplace_back(parse_element(A, o.args[k]), parse_element(A, o.args[k + 1]));
        }
    } else {
        const auto monos = gwa_filtration_monomials(A, 2 * o.filtration);
        for (std::size_t p = 0; p < monos.size(); ++p) {
            for (std::size_t q = p; q < monos.size(); ++q) pairs.emplace_back(monos[p], monos[q]);
        }
    }
    const auto rep = gr_correspondence_check(A, pairs);
    const GWPAData& P = rep.predicted;
    Json predicted{{"a", Json::array()}, {"partials", Json::array()}};
    std::string ptext;
    for (std::size_t i = 0; i < P.rank(); ++i) {
        predicted["a"].push_back(P.a(i).to_string());
        Json images = Json::object();
        std::string dtext;
        for (std::size_t jv = 0; jv < P.ring()->size(); ++jv) {
            const auto& img = P.partial(i).image(jv);
            if (img.is_zero()) continue;
            images[P.ring()->name(jv)] = img.to_string();
            dtext += (dtext.empty() ? "" : ", ") + P.ring()->name(jv) + " -> " + img.to_string();
        }
        predicted["partials"].push_back(images);
        ptext += "  a_" + std::to_string(i + 1) + " = " + P.a(i).to_string() + "; d_" + std::to_string(i + 1) + ": " +
                 (dtext.empty() ? "0" : dtext) + "\n";
    }
    Json jpairs = Json::array();
    std::string failures;
    for (const auto& pc : rep.pairs) {
        const bool ok = pc.drops && pc.matches;
        if (!o.args.empty() || !ok) {
            Json jp{{"u", pc.u}, {"v", pc.v}, {"s", pc.s.to_string()}, {"t", pc.t.to_string()},
                    {"commutator_degree", pc.commutator_degree.to_string()}, {"drops", pc.drops}, {"matches", pc.matches}};
            if (!ok) {
                jp["graded_commutator"] = pc.graded_commutator;
                jp["predicted_bracket"] = pc.predicted_bracket;
            }
            jpairs.push_back(jp);
        }
        if (!o.args.empty() || !ok) {
            failures += "  [" + pc.u + ", " + pc.v + "]: degrees " + pc.s.to_string() + " + " + pc.t.to_string() +
                        ", commutator degree " + pc.commutator_degree.to_string() + ", " +
                        (ok ? "match" : "MISMATCH (graded " + pc.graded_commutator + ", predicted " +
                                            pc.predicted_bracket + ")") +
                        "\n";
        }
    }
    Json j{{"command", "quantize-check"},
           {"settings", settings(o)},
           {"nu", A.nu()},
           {"predicted", predicted},
           {"predicted_valid", rep.validation.ok},
           {"derivations_consistent", rep.derivations_consistent},
           {"pairs_checked", rep.pairs.size()},
           {"mismatches", rep.mismatches},
           {"pairs", jpairs},
           {"ok", rep.ok}};
    std::string text = "associated graded check for " + describe_algebra(spec) + "\nnu: " + std::to_string(A.nu()) +
                       "\n" +
                       (o.args.empty() ? "pairs: all monomial pairs of filtration degree <= " +
                                             std::to_string(o.filtration) + "\n"
                                       : "") +
                       "predicted GWPA (zero bracket on D):\n" + ptext +
                       "predicted GWPA valid: " + (rep.validation.ok ? "yes" : "no") +
                       "\ninduced derivations consistent: " + (rep.derivations_consistent ? "yes" : "no") +
                       "\npairs checked: " + std::to_string(rep.pairs.size()) +
                       "\nmismatches: " + std::to_string(rep.mismatches) + "\n" + failures +
                       "result: " + (rep.ok ? "pass" : "fail") + "\n";
    emit(out, o, j, text);
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
    if (std::find(kCommands.begin(), kCommands.end(), o.command) == kCommands.end()) {
        err << "error: unknown command \"" << o.command << "\"\n";
        return kExitUsage;
    }
    if (o.target.empty()) {
        err << "error: " << o.command << " needs a spec file or gallery name\n";
        return kExitUsage;
    }
    if (o.command == "gallery") {
        if (o.target == "list") {
            for (const auto& n : gallery_names()) out << n << "\n";
            return kExitOk;
        }
        out << render_algebra_spec(gallery_spec(o.target));
        return kExitOk;
    }
    const AlgebraSpec spec = load(o.target);
    if (o.command == "validate") {
        cmd_validate(o, spec, out);
    } else if (o.command == "bracket" || o.command == "mul") {
        cmd_binary(o, spec, out);
    } else if (o.command == "centre") {
        cmd_centre(o, spec, out);
    } else if (o.command == "field-check") {
        cmd_field_check(o, spec, out);
    } else if (o.command == "simple") {
        cmd_simple(o, spec, out);
    } else if (o.command == "closure") {
        cmd_closure(o, spec, out);
    } else {
        cmd_quantize(o, spec, out);
    }
    return kExitOk;
}

void report_violations(const Options& o, const SpecValidationError& e, std::ostream& out) {
    Json violations = Json::array();
    std::string text = "validation: failed\n";
    for (std::size_t k = 0; k < e.report().violations.size(); ++k) {
        const auto& v = e.report().violations[k];
        violations.push_back({{"kind", to_string(v.kind)}, {"location", e.locations()[k]}, {"detail", v.detail}});
        text += "  " + e.locations()[k] + ": " + to_string(v.kind) + ": " + v.detail + "\n";
    }
    Json j{{"command", o.command}, {"ok", false}, {"violations", violations}};
    emit(out, o, j, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Generalized Weyl Poisson algebras: brackets, centres, simplicity and quantization checks", "gwpa"};
    app.add_option("command", o.command, "validate | bracket | mul | centre | field-check | simple | closure | "
                                         "quantize-check | gallery")
        ->required();
    app.add_option("target", o.target, "spec file or gallery name (p2, p2n_2, gr_usl2, gr_heisenberg_1, weyl_1, usl2)");
    app.add_option("args", o.args, "elements, e.g. \"Y1\" \"X1\"; put -- before arguments starting with '-'");
    app.add_option("--degree", o.degree, "base degree bound (default 6)")->check(CLI::NonNegativeNumber);
    app.add_option("--window", o.window, "grading window |alpha| (default 4)")->check(CLI::NonNegativeNumber);
    app.add_option("--filtration", o.filtration, "filtration bound for quantize-check (default 2)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--alpha", o.alpha, "degree a1,...,an for centre (default 0)");
    app.add_option("--kind", o.kind, "centre kind (default poisson)")
        ->check(CLI::IsMember({"constants", "poisson", "absolute"}));
    app.add_option("--format", o.format, "text or json (default text)")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "usage: gwpa <command> <specfile|gallery-name> [args] [options]\n";
        return kExitUsage;
    }

    try {
        return dispatch(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecValidationError& e) {
        report_violations(o, e, out);
        return kExitError;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace gwpa::cli
