#include "gwpa/simplicity.hpp"

#include <algorithm>
#include <set>

namespace gwpa {

namespace {

bool supported_in(const Polynomial& p, std::size_t var) {
    for (std::size_t v : p.support()) {
        if (v != var) return false;
    }
    return true;
}

CriterionVerdict holds_exact(std::string why) { return {VerdictStatus::Holds, true, {std::move(why), {}, {}, {}}}; }

CriterionVerdict fails_with(std::string why, Polynomial witness) {
    return {VerdictStatus::Fails, true, {std::move(why), std::move(witness), {}, {}}};
}

CriterionVerdict undecided(std::string why) { return {VerdictStatus::Undecided, false, {std::move(why), {}, {}, {}}}; }

bool is_nonzero_constant(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

// gD is a proper d-invariant Poisson ideal of D.
bool is_invariant_principal_ideal(const GWPAData& A, const Polynomial& g) {
    if (g.is_constant()) return false;
    auto divides = [&](const Polynomial& f) { return f.is_zero() || exact_divide(f, g).has_value(); };
    for (std::size_t i = 0; i < A.rank(); ++i) {
        if (!divides(apply_derivation(A.partial(i), g))) return false;
    }
    for (std::size_t j = 0; j < A.ring()->size(); ++j) {
        if (!divides(base_bracket(A.base(), Polynomial::variable(A.ring(), j), g))) return false;
    }
    return true;
}

CriterionVerdict general_condition1(const GWPAData& A, int d) {
    if (constant_full_rank_jacobian(A)) {
        return holds_exact("the derivations have a constant Jacobian of full rank, so every nonzero d-invariant "
                           "ideal contains a nonzero constant");
    }
    std::vector<Polynomial> candidates;
    for (const auto& dv : A.partials()) {
        for (const auto& img : dv.images()) {
            if (!img.is_constant()) candidates.push_back(img);
        }
    }
    for (const auto& c : constants_basis(A, d).basis) {
        if (!c.is_constant()) candidates.push_back(c);
    }
    for (std::size_t j = 0; j < A.ring()->size(); ++j) candidates.push_back(Polynomial::variable(A.ring(), j));
    for (const auto& g : candidates) {
        if (is_invariant_principal_ideal(A, g)) {
            return fails_with("the ideal (" + g.to_string() + ") of D is proper, d-invariant and Poisson", g);
        }
    }
    return undecided("no candidate principal ideal is d-invariant and Poisson; no decision procedure applies");
}

// Decides D f + D g = D where possible.
CriterionVerdict unit_ideal(const Polynomial& f, const Polynomial& g, std::size_t i) {
    const std::string idx = std::to_string(i + 1);
    const std::string pair = "(a_" + idx + ", d_" + idx + "(a_" + idx + ")) = (" + f.to_string() + ", " +
                             g.to_string() + ")";
    if (is_nonzero_constant(f) || is_nonzero_constant(g)) return holds_exact(pair + " contains a unit");
    if (f.is_zero() && g.is_zero()) return fails_with(pair + " generate the zero ideal", f);
    if (f.is_zero()) return fails_with(pair + " generate the proper principal ideal (" + g.to_string() + ")", g);
    if (g.is_zero()) return fails_with(pair + " generate the proper principal ideal (" + f.to_string() + ")", f);

    const auto sf = f.support();
    const auto sg = g.support();
    std::set<std::size_t> all(sf.begin(), sf.end());
    all.insert(sg.begin(), sg.end());
    if (all.size() == 1) {
        const std::string var = f.ring()->name(*all.begin());
        Polynomial h = univariate_gcd(f, g, var);
        if (is_nonzero_constant(h)) return holds_exact(pair + " have gcd 1");
        return fails_with(pair + " have gcd " + h.to_string(), h);
    }
    // A linear generator can be solved for one variable; the ideal is the unit
    // ideal iff the other generator becomes a nonzero constant.
    for (const auto& [lin, other] : {std::pair{f, g}, std::pair{g, f}}) {
        if (lin.degree() != Degree(1)) continue;
        const auto& ring = lin.ring();
        const std::size_t k = lin.support().front();
        Monomial xk(ring->size());
        xk.exponents[k] = 1;
        const Rational ck = lin.coefficient(xk);
        std::vector<Polynomial> images;
        for (std::size_t v = 0; v < ring->size(); ++v) images.push_back(Polynomial::variable(ring, v));
        images[k] = (Polynomial::monomial(ring, xk, ck) - lin) * (Rational(1) / ck);
        Polynomial r = substitute(other, images, ring);
        if (is_nonzero_constant(r)) return holds_exact(pair + ": eliminating " + ring->name(k) + " leaves a unit");
        return fails_with(pair + ": modulo " + lin.to_string() + " the other generator becomes " + r.to_string() +
                              ", which is not a unit",
                          r);
    }
    if (std::none_of(sf.begin(), sf.end(), [&](std::size_t v) { return std::find(sg.begin(), sg.end(), v) != sg.end(); })) {
        return fails_with(pair + " are nonconstant in disjoint variables, so they have a common zero", f);
    }
    return undecided(pair + ": ideal membership outside the decidable cases");
}

CriterionVerdict combine_per_index(const std::vector<CriterionVerdict>& parts, const std::string& all_hold) {
    for (const auto& p : parts) {
        if (p.status == VerdictStatus::Fails) return p;
    }
    for (const auto& p : parts) {
        if (p.status == VerdictStatus::Undecided) return p;
    }
    return holds_exact(all_hold);
}

CriterionVerdict condition3_from(const FieldCriterionReport& field) {
    CriterionVerdict v = field.overall;
    if (v.status == VerdictStatus::Holds && !v.exact) {
        v.status = VerdictStatus::Undecided;
        v.evidence.summary = "no obstruction found up to degree " + std::to_string(field.degree_bound) +
                             " and |alpha| <= " + std::to_string(field.window) + ", which does not decide the condition";
    }
    return v;
}

}  // namespace

std::optional<UnivariateFamily> detect_univariate_family(const GWPAData& A) {
    const std::size_t n = A.rank();
    if (A.ring()->size() != n || !A.base().is_trivial()) return std::nullopt;
    UnivariateFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
        if (!supported_in(A.a(i), i)) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && !A.partial(i).image(j).is_zero()) return std::nullopt;
        }
        const Polynomial& b = A.partial(i).image(i);
        if (!supported_in(b, i)) return std::nullopt;
        fam.a.push_back(A.a(i));
        fam.b.push_back(b);
    }
    return fam;
}

SimplicityReport simplicity_check(const GWPAData& A, int d, int window) {
    SimplicityReport rep;
    rep.degree_bound = d;
    const auto fam = detect_univariate_family(A);
    rep.univariate_family = fam.has_value();
    const auto& ring = A.ring();

    if (fam) {
        rep.condition1 = holds_exact("every b_i is a nonzero constant");
        for (std::size_t i = 0; i < A.rank(); ++i) {
            const Polynomial& b = fam->b[i];
            if (is_nonzero_constant(b)) continue;
            const std::string idx = std::to_string(i + 1);
            Polynomial w = b.is_zero() ? Polynomial::variable(ring, i) : b;
            rep.condition1 = fails_with("b_" + idx + " = " + b.to_string() + " is not a nonzero constant; the ideal (" +
                                            w.to_string() + ") is d-invariant and proper",
                                        w);
            break;
        }
        std::vector<CriterionVerdict> parts;
        for (std::size_t i = 0; i < A.rank(); ++i) {
            const std::string idx = std::to_string(i + 1);
            Polynomial g = fam->b[i] * partial(fam->a[i], i);
            Polynomial h = univariate_gcd(fam->a[i], g, ring->name(i));
            if (is_nonzero_constant(h)) {
                parts.push_back(holds_exact("gcd(a_" + idx + ", d_" + idx + "(a_" + idx + ")) = 1"));
            } else {
                parts.push_back(fails_with("gcd(a_" + idx + ", d_" + idx + "(a_" + idx + ")) = gcd(" +
                                               fam->a[i].to_string() + ", " + g.to_string() + ") = " + h.to_string(),
                                           h));
            }
        }
        rep.condition2 = combine_per_index(parts, "every a_i is coprime to d_i(a_i)");
    } else {
        rep.condition1 = general_condition1(A, d);
        std::vector<CriterionVerdict> parts;
        for (std::size_t i = 0; i < A.rank(); ++i) {
            parts.push_back(unit_ideal(A.a(i), apply_derivation(A.partial(i), A.a(i)), i));
        }
        rep.condition2 = combine_per_index(parts, "every D a_i + D d_i(a_i) is the unit ideal");
    }

    rep.field = field_criterion(A, d, window);
    if (fam && rep.condition1.status == VerdictStatus::Holds && rep.condition2.status == VerdictStatus::Holds) {
        rep.condition3 = holds_exact("conditions 1 and 2 force D^d = K = Z(D) and D_[alpha] = 0");
    } else {
        rep.condition3 = condition3_from(rep.field);
    }

    const CriterionVerdict* parts[] = {&rep.condition1, &rep.condition2, &rep.condition3};
    rep.overall = VerdictStatus::Holds;
    for (const auto* p : parts) {
        if (p->status == VerdictStatus::Fails) {
            rep.overall = VerdictStatus::Fails;
            return rep;
        }
        if (p->status == VerdictStatus::Undecided) rep.overall = VerdictStatus::Undecided;
    }
    return rep;
}

}  // namespace gwpa
