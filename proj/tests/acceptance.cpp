// Acceptance run: one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gwpa/centre.hpp"
#include "gwpa/constructions.hpp"
#include "gwpa/gwa.hpp"
#include "gwpa/simplicity.hpp"
#include "gwpa/spec_io.hpp"
#include "support.hpp"

using namespace gwpa;
using gwpa::gen::Rng;

namespace {

// Collects the first few failure messages of a criterion.
struct Check {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
    bool ok() const { return failures.empty(); }
};

using Named = std::vector<std::pair<std::string, GWPAData>>;

Named axiom_gallery() {
    return {{"p2n(1)", gallery_p2n(1)},
            {"p2n(2)", gallery_p2n(2)},
            {"gr_usl2", gallery_gr_usl2()},
            {"gr_heisenberg(1)", gallery_gr_heisenberg(1)}};
}

Named full_gallery() {
    auto g = axiom_gallery();
    g.emplace_back("p2n(3)", gallery_p2n(3));
    g.emplace_back("gr_heisenberg(2)", gallery_gr_heisenberg(2));
    g.emplace_back("univariate(H1^2, 1)", gallery_univariate_family({"H1^2"}, {"1"}));
    g.emplace_back("univariate(H1^2 - H1, H2; 1, H2)", gallery_univariate_family({"H1^2 - H1", "H2"}, {"1", "H2"}));
    return g;
}

void criterion1(Check& c) {
    for (const auto& [name, A] : axiom_gallery()) {
        Rng rng(101);
        for (int t = 0; t < 200; ++t) {
            const auto u = gen::random_element(A, rng, 4);
            const auto v = gen::random_element(A, rng, 4);
            const auto w = gen::random_element(A, rng, 4);
            auto br = [&](const GWPAElement& x, const GWPAElement& y) { return gwpa_bracket(A, x, y); };
            auto mul = [&](const GWPAElement& x, const GWPAElement& y) { return gwpa_mul(A, x, y); };
            const std::string where = name + " triple " + std::to_string(t);
            c.expect(br(u, v) == -br(v, u), where + ": antisymmetry");
            c.expect(br(mul(u, v), w) == mul(u, br(v, w)) + mul(br(u, w), v), where + ": Leibniz (left slot)");
            c.expect(br(u, mul(v, w)) == mul(br(u, v), w) + mul(v, br(u, w)), where + ": Leibniz (right slot)");
            c.expect((br(u, br(v, w)) + br(v, br(w, u)) + br(w, br(u, v))).is_zero(), where + ": Jacobi");
        }
    }
}

void criterion2(Check& c) {
    for (const auto& [name, A] : full_gallery()) {
        Rng rng(202);
        std::vector<Polynomial> probes;
        for (std::size_t j = 0; j < A.ring()->size(); ++j) probes.push_back(Polynomial::variable(A.ring(), j));
        for (int t = 0; t < 10; ++t) probes.push_back(gen::random_polynomial(A.ring(), rng, 3, 3));
        for (std::size_t i = 0; i < A.rank(); ++i) {
            const auto X = gwpa_x(A, i), Y = gwpa_y(A, i);
            const std::string at = name + " index " + std::to_string(i + 1);
            c.expect(gwpa_bracket(A, Y, X) == gwpa_from_base(A, apply_derivation(A.partial(i), A.a(i))),
                     at + ": {Y,X} = d(a)");
            for (const auto& d : probes) {
                const auto dd = apply_derivation(A.partial(i), d);
                const auto D = gwpa_from_base(A, d);
                c.expect(gwpa_bracket(A, X, D) == gwpa_monomial(A, -dd, unit_grade(A.rank(), i, 1)),
                         at + ": {X,d} = -d(d)X for d = " + d.to_string());
                c.expect(gwpa_bracket(A, Y, D) == gwpa_monomial(A, dd, unit_grade(A.rank(), i, -1)),
                         at + ": {Y,d} = d(d)Y for d = " + d.to_string());
            }
            c.expect(gwpa_bracket(A, X, X).is_zero() && gwpa_bracket(A, Y, Y).is_zero(), at + ": {X,X} = {Y,Y} = 0");
            for (std::size_t j = 0; j < A.rank(); ++j) {
                if (j == i) continue;
                const auto Xj = gwpa_x(A, j), Yj = gwpa_y(A, j);
                c.expect(gwpa_bracket(A, X, Xj).is_zero() && gwpa_bracket(A, X, Yj).is_zero() &&
                             gwpa_bracket(A, Y, Xj).is_zero() && gwpa_bracket(A, Y, Yj).is_zero(),
                         at + ": cross brackets with index " + std::to_string(j + 1));
            }
        }
    }
}

void criterion3(Check& c) {
    for (const auto& [name, A] : axiom_gallery()) {
        Rng rng(303);
        std::size_t positive = 0, negative = 0;
        for (int t = 0; t < 500; ++t) {
            const GradeVector alpha = gen::random_grade(A.rank(), rng, 3);
            const Polynomial lambda = gen::random_polynomial(A.ring(), rng, 3, 3);
            const std::size_t i = rng() % A.rank();
            std::variant<Polynomial, GeneratorRef> first = GeneratorRef{GeneratorRef::Kind::X, i};
            GWPAElement lhs = gwpa_zero(A);
            switch (rng() % 3) {
                case 0: {
                    const Polynomial d = gen::random_polynomial(A.ring(), rng, 2, 2);
                    first = d;
                    lhs = gwpa_from_base(A, d);
                    break;
                }
                case 1:
                    first = GeneratorRef{GeneratorRef::Kind::X, i};
                    lhs = gwpa_x(A, i);
                    break;
                default:
                    first = GeneratorRef{GeneratorRef::Kind::Y, i};
                    lhs = gwpa_y(A, i);
                    break;
            }
            if (std::holds_alternative<GeneratorRef>(first)) {
                if (alpha[i] > 0) ++positive;
                if (alpha[i] < 0) ++negative;
            }
            c.expect(gwpa_bracket(A, lhs, gwpa_monomial(A, lambda, alpha)) ==
                         bracket_oracle_graded(A, first, lambda, alpha),
                     name + " instance " + std::to_string(t));
        }
        c.expect(positive > 0 && negative > 0, name + ": both sign cases of the generator formula were exercised");
    }
}

void criterion4(Check& c) {
    auto K = BasePoissonAlgebra::trivial(make_ring({}));
    auto Dz = BasePoissonAlgebra::trivial(make_ring({"Z"}));
    struct Case {
        std::string name;
        BasePoissonAlgebra D;
        Polynomial alpha;
    };
    std::vector<Case> cases{{"alpha = 1", K, Polynomial::constant(K.ring(), 1)},
                            {"alpha = 0", K, Polynomial(K.ring())},
                            {"alpha = Z over K[Z]", Dz, Polynomial::variable(Dz.ring(), 0)}};
    for (const auto& cs : cases) {
        const GWPAData A = from_ore_data(cs.D, {BaseDerivation::zero(cs.D.ring())}, {cs.alpha});
        const std::size_t h = cs.D.ring()->size();  // the new central variable follows the base variables
        const auto H = gwpa_from_base(A, Polynomial::variable(A.ring(), h));
        c.expect(gwpa_mul(A, gwpa_x(A, 0), gwpa_y(A, 0)) - H == gwpa_zero(A), cs.name + ": XY - H = 0 in normal form");
        std::vector<GWPAElement> gens{gwpa_x(A, 0), gwpa_y(A, 0)};
        for (std::size_t j = 0; j < A.ring()->size(); ++j) gens.push_back(gwpa_from_base(A, Polynomial::variable(A.ring(), j)));
        // {XY - H, g} expanded by Leibniz, so the check does not reduce to bracketing the zero normal form.
        const auto X = gwpa_x(A, 0), Y = gwpa_y(A, 0);
        for (const auto& g : gens) {
            const auto z = gwpa_mul(A, gwpa_bracket(A, X, g), Y) + gwpa_mul(A, X, gwpa_bracket(A, Y, g)) -
                           gwpa_bracket(A, H, g);
            c.expect(z.is_zero(), cs.name + ": {XY - H, " + render(A, g) + "} = 0");
        }
        c.expect(gwpa_bracket(A, gwpa_y(A, 0), gwpa_x(A, 0)) == gwpa_from_base(A, embed(cs.alpha, A.ring())),
                 cs.name + ": {Y, X} = alpha");
    }
}

void criterion5(Check& c) {
    const auto P4 = gallery_p2n(2);
    const auto z = centre_component(P4, {0, 0}, 6);
    c.expect(z.basis.size() == 1 && z.basis[0].to_string() == "1", "p2n(2), alpha = 0: span{1}");
    const auto U = gallery_gr_usl2();
    const auto zu = centre_component(U, {0}, 6);
    std::vector<std::string> expected{"1", "C", "C^2", "C^3", "C^4", "C^5", "C^6"};
    std::vector<std::string> got;
    for (const auto& p : zu.basis) got.push_back(p.to_string());
    c.expect(got == expected, "gr_usl2, alpha = 0: span{1, C, ..., C^6}");
    const auto C = gwpa_mul(U, gwpa_x(U, 0), gwpa_y(U, 0)) + gwpa_from_base(U, parse_polynomial("H^2", U.ring()));
    c.expect(render(U, C) == "C", "gr_usl2: XY + H^2 = C");
    for (const auto& g : {gwpa_x(U, 0), gwpa_y(U, 0), gwpa_from_base(U, Polynomial::variable(U.ring(), 1))}) {
        c.expect(gwpa_bracket(U, C, g).is_zero(), "gr_usl2: C is Poisson central");
    }
    std::size_t degrees = 0;
    for (int a1 = -4; a1 <= 4; ++a1) {
        for (int a2 = -4; a2 <= 4; ++a2) {
            const int norm = std::abs(a1) + std::abs(a2);
            if (norm == 0 || norm > 4) continue;
            ++degrees;
            c.expect(centre_component(P4, {a1, a2}, 6).basis.empty(),
                     "p2n(2), alpha = (" + std::to_string(a1) + "," + std::to_string(a2) + "): zero");
        }
    }
    c.expect(degrees == 40, "all 40 degrees with 0 < |alpha| <= 4 were checked");
}

void criterion6(Check& c) {
    for (std::size_t n = 1; n <= 3; ++n) {
        c.expect(simplicity_check(gallery_p2n(n), 6).overall == VerdictStatus::Holds,
                 "p2n(" + std::to_string(n) + ") holds");
    }
    auto witness = [](const CriterionVerdict& v) { return v.evidence.witness ? v.evidence.witness->to_string() : "-"; };
    const auto sq = simplicity_check(gallery_univariate_family({"H1^2"}, {"1"}), 6);
    c.expect(sq.overall == VerdictStatus::Fails && sq.condition2.status == VerdictStatus::Fails &&
                 witness(sq.condition2) == "H1",
             "univariate(a = H^2, b = 1) fails condition 2 with gcd H");
    const auto sf = simplicity_check(gallery_univariate_family({"H1^2 - H1"}, {"1"}), 6);
    c.expect(sf.overall == VerdictStatus::Holds, "univariate(a = H(H-1), b = 1) holds");
    const auto u = simplicity_check(gallery_gr_usl2(), 6);
    c.expect(u.overall == VerdictStatus::Fails && u.condition3.status == VerdictStatus::Fails &&
                 witness(u.condition3) == "C",
             "gr_usl2 fails condition 3 with witness C");
    const auto h = simplicity_check(gallery_gr_heisenberg(1), 6);
    c.expect(h.overall == VerdictStatus::Fails && h.condition1.status == VerdictStatus::Fails &&
                 witness(h.condition1) == "Z",
             "gr_heisenberg(1) fails condition 1 with the ideal ZD");
}

void criterion7(Check& c) {
    const auto P2 = gallery_p2n(1);
    c.expect(poisson_ideal_closure(P2, {gwpa_x(P2, 0)}, 2).contains_unit, "p2n(1): closure of [X] at d = 2 contains 1");
    const auto F = gallery_univariate_family({"H1^2"}, {"1"});
    c.expect(!poisson_ideal_closure(F, {gwpa_x(F, 0)}, 4).contains_unit,
             "univariate(H^2, 1): closure of [X] at d = 4 is proper");
}

void correspondence(Check& c, const std::string& name, const GWAData& A, const GWPAData& expected,
                    const std::vector<std::pair<GWAElement, GWAElement>>& pairs) {
    const auto rep = gr_correspondence_check(A, pairs);
    c.expect(rep.predicted == expected, name + ": predicted GWPA is the expected gallery algebra");
    c.expect(rep.validation.ok, name + ": predicted GWPA passes validation");
    c.expect(rep.derivations_consistent, name + ": induced derivations satisfy Leibniz");
    for (const auto& pc : rep.pairs) {
        c.expect(pc.drops, name + ": [" + pc.u + ", " + pc.v + "] drops by nu");
        c.expect(pc.matches, name + ": [" + pc.u + ", " + pc.v + "] graded " + pc.graded_commutator + " vs predicted " +
                                 pc.predicted_bracket);
    }
}

std::vector<std::pair<GWAElement, GWAElement>> all_pairs(const std::vector<GWAElement>& xs, bool ordered) {
    std::vector<std::pair<GWAElement, GWAElement>> out;
    for (std::size_t p = 0; p < xs.size(); ++p) {
        for (std::size_t q = ordered ? 0 : p; q < xs.size(); ++q) out.emplace_back(xs[p], xs[q]);
    }
    return out;
}

void criterion8(Check& c, std::string& detail) {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        const GWAData W = gallery_weyl(n);
        const auto monos = gwa_filtration_monomials(W, 8);
        const auto pairs = all_pairs(monos, false);
        total += pairs.size();
        correspondence(c, "weyl(" + std::to_string(n) + ")", W, gallery_p2n(n), pairs);
    }
    const GWAData U = gallery_usl2();
    const std::vector<GWAElement> gens{gwa_x(U, 0), gwa_y(U, 0), gwa_from_base(U, parse_polynomial("H", U.ring())),
                                       gwa_from_base(U, parse_polynomial("C", U.ring()))};
    const auto upairs = all_pairs(gens, true);
    total += upairs.size();
    correspondence(c, "usl2", U, gallery_gr_usl2(), upairs);

    const GWAData W1 = gallery_weyl(1);
    const GWPAData P2 = gallery_p2n(1);
    c.expect(render(W1, gwa_commutator(W1, gwa_y(W1, 0), gwa_x(W1, 0))) == "1" &&
                 render(P2, gwpa_bracket(P2, gwpa_y(P2, 0), gwpa_x(P2, 0))) == "1",
             "[Y,X] = 1 and {Y,X} = 1");
    const GWPAData G = gallery_gr_usl2();
    c.expect(render(U, gwa_commutator(U, gwa_x(U, 0), gwa_y(U, 0))) == "2*H" &&
                 render(G, gwpa_bracket(G, gwpa_x(G, 0), gwpa_y(G, 0))) == "2*H",
             "[X,Y] = 2H and {X,Y} = 2H");
    detail = std::to_string(total) + " pairs";
}

void criterion9(Check& c) {
    for (const auto& [name, A] : full_gallery()) {
        Rng rng(909);
        std::vector<Rational> ones(A.rank(), Rational(1));
        for (int t = 0; t < 200; ++t) {
            std::set<std::size_t> I;
            for (std::size_t i = 0; i < A.rank(); ++i) {
                if (rng() % 2) I.insert(i);
            }
            if (I.empty()) I.insert(rng() % A.rank());
            std::vector<Rational> lambda;
            for (std::size_t i = 0; i < A.rank(); ++i) lambda.push_back(gen::random_nonzero_rational(rng));
            const auto u = gen::random_element(A, rng, 4, 2);
            const auto v = gen::random_element(A, rng, 4, 2);
            const auto B = sI_algebra(A, I);
            auto s = [&](const GWPAElement& x) { return sI_element(A, I, x); };
            auto tl = [&](const GWPAElement& x) { return torus_apply(A, lambda, x); };
            const std::string at = name + " pair " + std::to_string(t);
            c.expect(s(gwpa_mul(A, u, v)) == gwpa_mul(B, s(u), s(v)), at + ": s_I preserves products");
            c.expect(s(gwpa_bracket(A, u, v)) == gwpa_bracket(B, s(u), s(v)), at + ": s_I preserves brackets");
            c.expect(sI_element(B, I, s(u)) == u, at + ": s_I is an involution on elements");
            c.expect(tl(gwpa_mul(A, u, v)) == gwpa_mul(A, tl(u), tl(v)), at + ": torus preserves products");
            c.expect(tl(gwpa_bracket(A, u, v)) == gwpa_bracket(A, tl(u), tl(v)), at + ": torus preserves brackets");
            c.expect(torus_apply(A, ones, u) == u, at + ": t_(1,...,1) is the identity");
            const auto [B2, su] = apply_sI(A, I, u);
            c.expect(B2 == B && su == s(u), at + ": apply_sI agrees with its parts");
        }
        c.expect(sI_algebra(sI_algebra(A, {0}), {0}) == A, name + ": s_I is an involution on algebras");
    }
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(GWPA_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return out + "<status " + std::to_string(status) + ">";
}

void criterion10(Check& c) {
    const std::string specs = GWPA_SPECS_DIR;
    const std::vector<std::string> invocations{
        "validate " + specs + "/p2n_2.json",
        "bracket " + specs + "/p2.json Y1 X1",
        "mul " + specs + "/gr_usl2.json X1 Y1",
        "centre " + specs + "/gr_usl2.json --alpha 0 --degree 4",
        "field-check " + specs + "/gr_heisenberg_1.json --format json",
        "simple " + specs + "/p2.json",
        "simple " + specs + "/gr_usl2.json --format json",
        "closure " + specs + "/p2.json X1 --degree 2",
        "quantize-check " + specs + "/usl2.gwa.json",
        "quantize-check " + specs + "/weyl_1.gwa.json --filtration 2 --format json",
        "gallery p2n_2",
    };
    for (const auto& args : invocations) {
        const std::string first = run_cli(args);
        const std::string second = run_cli(args);
        c.expect(first == second, "byte-identical output for: gwpa " + args);
        c.expect(first.ends_with("<status 0>"), "exit status 0 for: gwpa " + args);
    }
    c.expect(run_cli("bracket " + specs + "/p2.json Y1 X1") == "1\n<status 0>", "gwpa bracket p2.json Y1 X1 prints 1");

    for (const std::string name : {"p2.json", "p2n_2.json", "gr_usl2.json", "gr_heisenberg_1.json", "weyl_1.gwa.json",
                                   "usl2.gwa.json"}) {
        std::ifstream in(specs + "/" + name);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto spec = parse_algebra_spec(buf.str());
        c.expect(render_algebra_spec(spec) == buf.str(), name + ": render(parse(text)) = text");
        c.expect(parse_algebra_spec(render_algebra_spec(spec)).algebra == spec.algebra,
                 name + ": parse(render(x)) = x");
    }
    for (const char* name : {"p2n_3", "gr_heisenberg_2", "weyl_2"}) {
        const auto spec = gallery_spec(name);
        c.expect(parse_algebra_spec(render_algebra_spec(spec)).algebra == spec.algebra,
                 std::string(name) + ": gallery export re-imports to equal data");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<void(Check&, std::string&)> body;
    };
    const std::vector<Criterion> criteria{
        {1, "axiom suite", [](Check& c, std::string&) { criterion1(c); }},
        {2, "relation suite", [](Check& c, std::string&) { criterion2(c); }},
        {3, "oracle equivalence", [](Check& c, std::string&) { criterion3(c); }},
        {4, "centrality of the Ore variable", [](Check& c, std::string&) { criterion4(c); }},
        {5, "centre reproduction", [](Check& c, std::string&) { criterion5(c); }},
        {6, "simplicity verdicts", [](Check& c, std::string&) { criterion6(c); }},
        {7, "ideal closure coherence", [](Check& c, std::string&) { criterion7(c); }},
        {8, "quantization", criterion8},
        {9, "morphism suite", [](Check& c, std::string&) { criterion9(c); }},
        {10, "determinism and round-trip", [](Check& c, std::string&) { criterion10(c); }},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c, detail);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << c.checks
                  << " checks" << (detail.empty() ? "" : ", " + detail) << ", " << ms.count() << " ms)\n";
        for (const auto& f : c.failures) std::cout << "    " << f << "\n";
        std::cout.flush();
        if (!c.ok()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
