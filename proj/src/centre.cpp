#include "gwpa/centre.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "gwpa/linear.hpp"

namespace gwpa {

const char* to_string(CentreKind kind) {
    switch (kind) {
        case CentreKind::Constants: return "constants";
        case CentreKind::Poisson: return "poisson";
        case CentreKind::Absolute: return "absolute";
    }
    return "unknown";
}

const char* to_string(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::Fails: return "fails";
        case VerdictStatus::Undecided: return "undecided";
    }
    return "unknown";
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial m(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
        if (var == nvars) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.exponents[var] = static_cast<std::uint32_t>(e);
            rec(var + 1, left - e);
        }
        m.exponents[var] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) == std::strong_ordering::less; });
    return out;
}

namespace {

using LinearOperator = std::function<Polynomial(const Polynomial&)>;

// Solves L_k(lambda) = 0 for all k over lambda of degree <= d.
std::vector<Polynomial> solve_kernel(const RingPtr& ring, int d, const std::vector<LinearOperator>& ops) {
    const auto unknowns = monomials_up_to(ring->size(), d);
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> row_of;
    RationalMatrix rows;
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
        const Polynomial m = Polynomial::monomial(ring, unknowns[col]);
        for (std::size_t k = 0; k < ops.size(); ++k) {
            const Polynomial image = ops[k](m);
            for (const auto& [mono, c] : image.terms()) {
                auto [it, inserted] = row_of.try_emplace({k, mono.exponents}, rows.size());
                if (inserted) rows.emplace_back(unknowns.size(), Rational(0));
                rows[it->second][col] = c;
            }
        }
    }
    std::vector<Polynomial> basis;
    for (const auto& v : nullspace(rows, unknowns.size())) {
        Polynomial p(ring);
        for (std::size_t col = 0; col < v.size(); ++col) {
            if (sgn(v[col]) != 0) p += Polynomial::monomial(ring, unknowns[col], v[col]);
        }
        basis.push_back(std::move(p));
    }
    return basis;
}

std::vector<LinearOperator> constant_constraints(const GWPAData& A) {
    std::vector<LinearOperator> ops;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        ops.push_back([&A, i](const Polynomial& f) { return apply_derivation(A.partial(i), f); });
    }
    return ops;
}

}  // namespace

CentreComponent constants_basis(const GWPAData& A, int d) {
    CentreComponent out;
    out.degree = zero_grade(A.rank());
    out.kind = CentreKind::Constants;
    out.truncation = d;
    out.basis = solve_kernel(A.ring(), d, constant_constraints(A));
    return out;
}

CentreComponent centre_component(const GWPAData& A, const GradeVector& alpha, int d, CentreKind kind) {
    if (alpha.size() != A.rank()) throw Error(ErrorKind::InvalidArgument, "degree has the wrong length");
    if (kind == CentreKind::Constants) return constants_basis(A, d);
    const auto& ring = A.ring();
    auto ops = constant_constraints(A);
    for (std::size_t j = 0; j < ring->size(); ++j) {
        Polynomial shift(ring);
        for (std::size_t i = 0; i < A.rank(); ++i) {
            if (alpha[i] != 0) shift += A.partial(i).image(j) * Rational(alpha[i]);
        }
        const Polynomial hj = Polynomial::variable(ring, j);
        ops.push_back([&A, hj, shift](const Polynomial& f) { return base_bracket(A.base(), f, hj) - f * shift; });
    }
    for (std::size_t i = 0; i < A.rank(); ++i) {
        if (alpha[i] == 0) continue;
        const Polynomial da = apply_derivation(A.partial(i), A.a(i));
        ops.push_back([da](const Polynomial& f) { return f * da; });
    }
    CentreComponent out;
    out.degree = alpha;
    out.kind = kind;
    out.truncation = d;
    out.basis = solve_kernel(ring, d, ops);
    return out;
}

bool constant_full_rank_jacobian(const GWPAData& A) {
    const std::size_t nvars = A.ring()->size();
    RationalMatrix jac;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < nvars; ++j) {
            const Polynomial& img = A.partial(i).image(j);
            if (!img.is_constant()) return false;
            row.push_back(img.constant_term());
        }
        jac.push_back(std::move(row));
    }
    return matrix_rank(jac, nvars) == nvars;
}

namespace {

// Nonzero grades with |alpha| <= window, by norm then lexicographically.
std::vector<GradeVector> grades_in_window(std::size_t n, int window) {
    std::vector<GradeVector> out;
    GradeVector g(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            if (grade_norm(g) > 0) out.push_back(g);
            return;
        }
        for (int v = -left; v <= left; ++v) {
            g[i] = v;
            rec(i + 1, left - std::abs(v));
        }
        g[i] = 0;
    };
    rec(0, window);
    std::stable_sort(out.begin(), out.end(),
                     [](const GradeVector& a, const GradeVector& b) { return grade_norm(a) < grade_norm(b); });
    return out;
}

}  // namespace

FieldCriterionReport field_criterion(const GWPAData& A, int d, int window) {
    FieldCriterionReport rep;
    rep.degree_bound = d;
    rep.window = window;

    rep.characteristic = {VerdictStatus::Holds, true, {"the coefficient field is the rationals", {}, {}, {}}};

    if (constant_full_rank_jacobian(A)) {
        rep.constants_field = {VerdictStatus::Holds, true,
                               {"the derivations have a constant Jacobian of full rank, so D^d = K", {}, {}, {}}};
    } else {
        auto c = centre_component(A, zero_grade(A.rank()), d, CentreKind::Absolute);
        auto it = std::find_if(c.basis.begin(), c.basis.end(), [](const Polynomial& p) { return !p.is_constant(); });
        if (it != c.basis.end()) {
            rep.constants_field = {VerdictStatus::Fails, true,
                                   {"nonconstant central d-constant " + it->to_string() + " is not invertible", *it,
                                    zero_grade(A.rank()), {}}};
        } else {
            rep.constants_field = {VerdictStatus::Holds, false,
                                   {"no nonconstant central d-constant of degree <= " + std::to_string(d), {}, {}, d}};
        }
    }

    bool all_nonzero = true;
    for (std::size_t i = 0; i < A.rank(); ++i) all_nonzero &= !apply_derivation(A.partial(i), A.a(i)).is_zero();
    if (all_nonzero) {
        rep.absolute_components = {VerdictStatus::Holds, true,
                                   {"every d_i(a_i) is nonzero and D is a domain, so D_[alpha] = 0", {}, {}, {}}};
    } else {
        rep.absolute_components = {VerdictStatus::Holds, false,
                                   {"D_[alpha] = 0 for 0 < |alpha| <= " + std::to_string(window) +
                                        " and coefficients of degree <= " + std::to_string(d),
                                    {}, {}, d}};
        for (const auto& alpha : grades_in_window(A.rank(), window)) {
            auto c = centre_component(A, alpha, d, CentreKind::Absolute);
            if (!c.basis.empty()) {
                rep.absolute_components = {VerdictStatus::Fails, true,
                                           {"D_[alpha] contains " + c.basis.front().to_string(), c.basis.front(),
                                            alpha, {}}};
                break;
            }
        }
    }

    const CriterionVerdict* parts[] = {&rep.characteristic, &rep.constants_field, &rep.absolute_components};
    rep.overall = {VerdictStatus::Holds, true, {"all three conditions hold", {}, {}, {}}};
    for (const auto* p : parts) {
        if (p->status == VerdictStatus::Fails) {
            rep.overall = *p;
            return rep;
        }
    }
    for (const auto* p : parts) {
        if (!p->exact) {
            rep.overall = {VerdictStatus::Holds, false, {"holds up to the search bounds", {}, {}, d}};
        }
    }
    return rep;
}

std::vector<GWPAElement> weight_monomials(const GWPAData& A, int d) {
    std::vector<GWPAElement> out;
    const auto grades = grades_in_window(A.rank(), d);
    std::vector<GradeVector> all{zero_grade(A.rank())};
    all.insert(all.end(), grades.begin(), grades.end());
    for (const auto& alpha : all) {
        for (const auto& m : monomials_up_to(A.ring()->size(), d - grade_norm(alpha))) {
            out.push_back(gwpa_monomial(A, Polynomial::monomial(A.ring(), m), alpha));
        }
    }
    return out;
}

namespace {

using ClosureKey = std::pair<GradeVector, std::vector<std::uint32_t>>;

EchelonSpace<ClosureKey>::Vector coordinates(const GWPAElement& u) {
    EchelonSpace<ClosureKey>::Vector v;
    for (const auto& [alpha, coeff] : u.terms()) {
        for (const auto& [m, c] : coeff.terms()) v.emplace(ClosureKey{alpha, m.exponents}, c);
    }
    return v;
}

}  // namespace

ClosureReport poisson_ideal_closure(const GWPAData& A, const std::vector<GWPAElement>& gens, int d) {
    ClosureReport rep;
    rep.bound = d;
    const auto monomials = weight_monomials(A, d);
    std::vector<GWPAElement> movers;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        movers.push_back(gwpa_x(A, i));
        movers.push_back(gwpa_y(A, i));
    }
    for (std::size_t j = 0; j < A.ring()->size(); ++j) {
        movers.push_back(gwpa_from_base(A, Polynomial::variable(A.ring(), j)));
    }
    const auto unit = coordinates(gwpa_constant(A, 1));

    EchelonSpace<ClosureKey> space;
    std::deque<GWPAElement> work;
    auto add = [&](const GWPAElement& u) {
        if (u.is_zero()) return;
        if (element_weight(u) > Degree(d)) {
            ++rep.overflow;
            return;
        }
        if (space.insert(coordinates(u))) {
            rep.basis.push_back(u);
            work.push_back(u);
        }
    };
    for (const auto& g : gens) {
        require_element_of(A, g);
        add(g);
    }
    while (!work.empty()) {
        if (space.contains(unit)) {
            // With 1 inside, multiplication by monomials already yields the
            // whole space of weight <= d, so the closure is known.
            rep.contains_unit = true;
            EchelonSpace<ClosureKey> full;
            rep.basis.clear();
            for (const auto& m : monomials) {
                if (full.insert(coordinates(m))) rep.basis.push_back(m);
            }
            return rep;
        }
        GWPAElement u = work.front();
        work.pop_front();
        for (const auto& m : monomials) {
            if (m.terms().begin()->first == zero_grade(A.rank()) && m.terms().begin()->second.is_constant()) continue;
            add(gwpa_mul(A, u, m));
        }
        for (const auto& g : movers) add(gwpa_bracket(A, g, u));
    }
    rep.contains_unit = space.contains(unit);
    return rep;
}

}  // namespace gwpa
