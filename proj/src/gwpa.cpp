#include "gwpa/gwpa.hpp"

#include <algorithm>
#include <cstdlib>

namespace gwpa {

// ---------------------------------------------------------------------------
// Grade vectors and shared rendering.

GradeVector zero_grade(std::size_t n) { return GradeVector(n, 0); }

GradeVector unit_grade(std::size_t n, std::size_t i, int sign) {
    GradeVector g(n, 0);
    g.at(i) = sign;
    return g;
}

GradeVector operator+(const GradeVector& a, const GradeVector& b) {
    GradeVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b.at(i);
    return out;
}

int grade_norm(const GradeVector& a) {
    int s = 0;
    for (int x : a) s += std::abs(x);
    return s;
}

std::string render_graded(const std::map<GradeVector, Polynomial>& terms, const RingPtr& ring,
                          const std::vector<std::string>& x_names, const std::vector<std::string>& y_names) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& alpha = it->first;
        std::string gens;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] <= 0) continue;
            if (!gens.empty()) gens += "*";
            gens += x_names.at(i);
            if (alpha[i] > 1) gens += "^" + std::to_string(alpha[i]);
        }
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] >= 0) continue;
            if (!gens.empty()) gens += "*";
            gens += y_names.at(i);
            if (alpha[i] < -1) gens += "^" + std::to_string(-alpha[i]);
        }
        for (const auto& [m, c] : it->second.terms()) {
            const bool negative = sgn(c) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t j = 0; j < m.exponents.size(); ++j) {
                if (!m.exponents[j]) continue;
                if (!mono.empty()) mono += "*";
                mono += ring->name(j);
                if (m.exponents[j] > 1) mono += "^" + std::to_string(m.exponents[j]);
            }
            if (!gens.empty()) {
                if (!mono.empty()) mono += "*";
                mono += gens;
            }
            const Rational mag = abs(c);
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + "*" + mono;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// GWPAData and validation.

std::vector<std::string> default_x_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("X" + std::to_string(i));
    return v;
}

std::vector<std::string> default_y_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("Y" + std::to_string(i));
    return v;
}

GWPAData::GWPAData(BasePoissonAlgebra base, std::vector<Polynomial> a, std::vector<BaseDerivation> partials)
    : GWPAData(std::move(base), std::move(a), std::move(partials), {}, {}) {}

GWPAData::GWPAData(BasePoissonAlgebra base, std::vector<Polynomial> a, std::vector<BaseDerivation> partials,
                   std::vector<std::string> x_names, std::vector<std::string> y_names)
    : base_(std::move(base)),
      a_(std::move(a)),
      partials_(std::move(partials)),
      x_names_(std::move(x_names)),
      y_names_(std::move(y_names)) {
    const std::size_t n = a_.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "a GWPA must have rank at least 1");
    if (partials_.size() != n) {
        throw Error(ErrorKind::InvalidArgument, "rank mismatch: " + std::to_string(n) + " defining elements but " +
                                                    std::to_string(partials_.size()) + " derivations");
    }
    if (x_names_.empty()) x_names_ = default_x_names(n);
    if (y_names_.empty()) y_names_ = default_y_names(n);
    if (x_names_.size() != n || y_names_.size() != n) {
        throw Error(ErrorKind::InvalidArgument, "need one X and one Y name per rank");
    }
    for (const auto& p : a_) require_same_ring(p.ring(), ring());
    for (const auto& d : partials_) require_same_ring(d.ring(), ring());
    std::vector<std::string> all = ring()->names();
    all.insert(all.end(), x_names_.begin(), x_names_.end());
    all.insert(all.end(), y_names_.begin(), y_names_.end());
    // PolyRing rejects duplicates, which is exactly the name-collision check.
    PolyRing check(std::move(all));
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::NotPoissonDerivation: return "not-poisson-derivation";
        case Violation::Kind::NonCommuting: return "non-commuting";
        case Violation::Kind::NotPoissonCentral: return "not-poisson-central";
        case Violation::Kind::CrossDerivation: return "cross-derivation";
    }
    return "unknown";
}

ValidationReport validate_gwpa(const GWPAData& data) {
    ValidationReport report;
    const std::size_t n = data.rank();
    const auto& ring = data.ring();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_poisson_derivation(data.base(), data.partial(i))) {
            report.violations.push_back({Violation::Kind::NotPoissonDerivation, i + 1, std::nullopt,
                                         "d_" + std::to_string(i + 1) + " does not preserve the bracket of D"});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < ring->size(); ++k) {
                Polynomial c = derivation_commutator(data.partial(i), data.partial(j), Polynomial::variable(ring, k));
                if (!c.is_zero()) {
                    report.violations.push_back({Violation::Kind::NonCommuting, i + 1, j + 1,
                                                 "[d_" + std::to_string(i + 1) + ", d_" + std::to_string(j + 1) +
                                                     "](" + ring->name(k) + ") = " + c.to_string()});
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < ring->size(); ++k) {
            Polynomial b = base_bracket(data.base(), data.a(i), Polynomial::variable(ring, k));
            if (!b.is_zero()) {
                report.violations.push_back({Violation::Kind::NotPoissonCentral, i + 1, std::nullopt,
                                             "{a_" + std::to_string(i + 1) + ", " + ring->name(k) +
                                                 "} = " + b.to_string()});
                break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Polynomial v = apply_derivation(data.partial(i), data.a(j));
            if (!v.is_zero()) {
                report.violations.push_back({Violation::Kind::CrossDerivation, i + 1, j + 1,
                                             "d_" + std::to_string(i + 1) + "(a_" + std::to_string(j + 1) +
                                                 ") = " + v.to_string()});
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Elements and multiplication.

GWPAElement gwpa_zero(const GWPAData& A) { return GWPAElement(A.ring(), A.rank()); }

GWPAElement gwpa_constant(const GWPAData& A, const Rational& c) {
    return gwpa_from_base(A, Polynomial::constant(A.ring(), c));
}

GWPAElement gwpa_from_base(const GWPAData& A, const Polynomial& lambda) {
    return gwpa_monomial(A, lambda, zero_grade(A.rank()));
}

GWPAElement gwpa_monomial(const GWPAData& A, const Polynomial& lambda, const GradeVector& alpha) {
    require_same_ring(lambda.ring(), A.ring());
    if (alpha.size() != A.rank()) throw Error(ErrorKind::AlgebraMismatch, "degree has the wrong length");
    return GWPAElement::monomial(A.ring(), alpha, lambda);
}

GWPAElement gwpa_x(const GWPAData& A, std::size_t i) {
    return gwpa_monomial(A, Polynomial::constant(A.ring(), 1), unit_grade(A.rank(), i, +1));
}

GWPAElement gwpa_y(const GWPAData& A, std::size_t i) {
    return gwpa_monomial(A, Polynomial::constant(A.ring(), 1), unit_grade(A.rank(), i, -1));
}

void require_element_of(const GWPAData& A, const GWPAElement& u) {
    if (u.rank() != A.rank()) {
        throw Error(ErrorKind::AlgebraMismatch, "element of rank " + std::to_string(u.rank()) +
                                                    " used with an algebra of rank " + std::to_string(A.rank()));
    }
    if (!(*u.ring() == *A.ring())) throw Error(ErrorKind::AlgebraMismatch, "element has a different base ring");
}

namespace {

// Coefficient produced by v_alpha * v_beta in normal form.
Polynomial overlap_factor(const GWPAData& A, const GradeVector& alpha, const GradeVector& beta) {
    Polynomial factor = Polynomial::constant(A.ring(), 1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if ((alpha[i] > 0 && beta[i] < 0) || (alpha[i] < 0 && beta[i] > 0)) {
            const int m = std::min(std::abs(alpha[i]), std::abs(beta[i]));
            factor = factor * pow(A.a(i), static_cast<unsigned>(m));
        }
    }
    return factor;
}

}  // namespace

GWPAElement gwpa_mul(const GWPAData& A, const GWPAElement& u, const GWPAElement& v) {
    require_element_of(A, u);
    require_element_of(A, v);
    GWPAElement out = gwpa_zero(A);
    for (const auto& [alpha, lambda] : u.terms()) {
        for (const auto& [beta, mu] : v.terms()) {
            Polynomial coeff = lambda * mu;
            Polynomial f = overlap_factor(A, alpha, beta);
            if (!f.is_constant() || f.constant_term() != 1) coeff = coeff * f;
            out.add_term(alpha + beta, coeff);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bracket: factored Leibniz.

namespace {

struct Factor {
    // index == npos marks the coefficient factor.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index = npos;
    int power = 0;  // signed: > 0 for X^power, < 0 for Y^|power|
};

std::vector<Factor> factorize(const GradeVector& alpha) {
    std::vector<Factor> fs{Factor{}};
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) fs.push_back(Factor{i, alpha[i]});
    }
    return fs;
}

// The term lambda * v_alpha with the given factor removed.
GWPAElement term_without(const GWPAData& A, const Polynomial& lambda, const GradeVector& alpha, const Factor& f) {
    if (f.index == Factor::npos) return gwpa_monomial(A, Polynomial::constant(A.ring(), 1), alpha);
    GradeVector rest = alpha;
    rest[f.index] = 0;
    return gwpa_monomial(A, lambda, rest);
}

GWPAElement factor_bracket(const GWPAData& A, const Factor& f, const Polynomial& lambda, const Factor& g,
                           const Polynomial& mu) {
    const std::size_t n = A.rank();
    const bool f_coeff = f.index == Factor::npos;
    const bool g_coeff = g.index == Factor::npos;
    if (f_coeff && g_coeff) return gwpa_from_base(A, base_bracket(A.base(), lambda, mu));
    if (!f_coeff && g_coeff) {
        // {X_i^p, mu} = -p d_i(mu) X_i^p,  {Y_i^q, mu} = q d_i(mu) Y_i^q
        Polynomial d = apply_derivation(A.partial(f.index), mu);
        if (d.is_zero()) return gwpa_zero(A);
        GradeVector deg = zero_grade(n);
        deg[f.index] = f.power;
        return gwpa_monomial(A, d * Rational(-f.power), deg);
    }
    if (f_coeff && !g_coeff) return -factor_bracket(A, g, mu, f, lambda);
    if (f.index != g.index || (f.power > 0) == (g.power > 0)) return gwpa_zero(A);
    // {X^p, Y^q} = -pq d(a) X^{p-1} Y^{q-1}, {Y^q, X^p} = pq d(a) Y^{q-1} X^{p-1}
    const std::size_t i = f.index;
    const int p = std::abs(f.power);
    const int q = std::abs(g.power);
    Polynomial da = apply_derivation(A.partial(i), A.a(i));
    if (da.is_zero()) return gwpa_zero(A);
    const Rational scale = f.power > 0 ? Rational(-p * q) : Rational(p * q);
    const int first = f.power > 0 ? f.power - 1 : f.power + 1;
    const int second = g.power > 0 ? g.power - 1 : g.power + 1;
    GradeVector d1 = zero_grade(n);
    GradeVector d2 = zero_grade(n);
    d1[i] = first;
    d2[i] = second;
    return gwpa_mul(A, gwpa_monomial(A, da * scale, d1), gwpa_monomial(A, Polynomial::constant(A.ring(), 1), d2));
}

GWPAElement bracket_terms_factored(const GWPAData& A, const Polynomial& lambda, const GradeVector& alpha,
                                   const Polynomial& mu, const GradeVector& beta) {
    GWPAElement out = gwpa_zero(A);
    const auto fs = factorize(alpha);
    const auto gs = factorize(beta);
    for (const auto& f : fs) {
        for (const auto& g : gs) {
            GWPAElement fg = factor_bracket(A, f, lambda, g, mu);
            if (fg.is_zero()) continue;
            GWPAElement rest = gwpa_mul(A, term_without(A, lambda, alpha, f), term_without(A, mu, beta, g));
            out += gwpa_mul(A, rest, fg);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bracket: atomic Leibniz with binary splitting.

struct Atom {
    enum class Kind { Var, X, Y };
    Kind kind;
    std::size_t index;
};

struct Word {
    Rational coeff;
    std::vector<Atom> atoms;
};

std::vector<Word> expand_words(const GWPAData& A, const GWPAElement& u) {
    std::vector<Word> words;
    for (const auto& [alpha, lambda] : u.terms()) {
        for (const auto& [m, c] : lambda.terms()) {
            Word w{c, {}};
            // Generators first, highest index first, then base variables in
            // reverse order: deliberately unlike the factored strategy.
            for (std::size_t i = alpha.size(); i-- > 0;) {
                for (int k = 0; k < std::abs(alpha[i]); ++k) {
                    w.atoms.push_back({alpha[i] > 0 ? Atom::Kind::X : Atom::Kind::Y, i});
                }
            }
            for (std::size_t j = m.exponents.size(); j-- > 0;) {
                for (std::uint32_t k = 0; k < m.exponents[j]; ++k) w.atoms.push_back({Atom::Kind::Var, j});
            }
            words.push_back(std::move(w));
        }
    }
    (void)A;
    return words;
}

GWPAElement atom_element(const GWPAData& A, const Atom& a) {
    switch (a.kind) {
        case Atom::Kind::Var: return gwpa_from_base(A, Polynomial::variable(A.ring(), a.index));
        case Atom::Kind::X: return gwpa_x(A, a.index);
        case Atom::Kind::Y: return gwpa_y(A, a.index);
    }
    return gwpa_zero(A);
}

GWPAElement eval_atoms(const GWPAData& A, std::span<const Atom> atoms) {
    GWPAElement out = gwpa_constant(A, 1);
    for (const auto& a : atoms) out = gwpa_mul(A, out, atom_element(A, a));
    return out;
}

GWPAElement atom_bracket(const GWPAData& A, const Atom& a, const Atom& b) {
    using K = Atom::Kind;
    if (a.kind == K::Var && b.kind == K::Var) {
        return gwpa_from_base(A, A.base().generator_bracket(a.index, b.index));
    }
    if (a.kind == K::Var) return -atom_bracket(A, b, a);
    if (b.kind == K::Var) {
        const Polynomial& img = A.partial(a.index).image(b.index);
        if (img.is_zero()) return gwpa_zero(A);
        if (a.kind == K::X) return gwpa_monomial(A, -img, unit_grade(A.rank(), a.index, +1));
        return gwpa_monomial(A, img, unit_grade(A.rank(), a.index, -1));
    }
    if (a.index != b.index || a.kind == b.kind) return gwpa_zero(A);
    Polynomial da = apply_derivation(A.partial(a.index), A.a(a.index));
    return gwpa_from_base(A, a.kind == K::Y ? da : -da);
}

GWPAElement word_bracket(const GWPAData& A, std::span<const Atom> u, std::span<const Atom> v) {
    if (u.empty() || v.empty()) return gwpa_zero(A);
    if (u.size() > 1) {
        const std::size_t h = u.size() / 2;
        auto left = u.subspan(0, h);
        auto right = u.subspan(h);
        return gwpa_mul(A, eval_atoms(A, left), word_bracket(A, right, v)) +
               gwpa_mul(A, eval_atoms(A, right), word_bracket(A, left, v));
    }
    if (v.size() > 1) {
        const std::size_t h = v.size() / 2;
        auto left = v.subspan(0, h);
        auto right = v.subspan(h);
        return gwpa_mul(A, eval_atoms(A, left), word_bracket(A, u, right)) +
               gwpa_mul(A, eval_atoms(A, right), word_bracket(A, u, left));
    }
    return atom_bracket(A, u.front(), v.front());
}

}  // namespace

GWPAElement gwpa_bracket(const GWPAData& A, const GWPAElement& u, const GWPAElement& v, BracketStrategy strategy) {
    require_element_of(A, u);
    require_element_of(A, v);
    GWPAElement out = gwpa_zero(A);
    if (strategy == BracketStrategy::Factored) {
        for (const auto& [alpha, lambda] : u.terms()) {
            for (const auto& [beta, mu] : v.terms()) out += bracket_terms_factored(A, lambda, alpha, mu, beta);
        }
        return out;
    }
    const auto uw = expand_words(A, u);
    const auto vw = expand_words(A, v);
    for (const auto& a : uw) {
        for (const auto& b : vw) {
            GWPAElement w = word_bracket(A, a.atoms, b.atoms);
            w *= a.coeff * b.coeff;
            out += w;
        }
    }
    return out;
}

GWPAElement gwpa_bracket_of_product(const GWPAData& A, const std::vector<GWPAElement>& factors,
                                    const GWPAElement& v) {
    GWPAElement out = gwpa_zero(A);
    for (std::size_t r = 0; r < factors.size(); ++r) {
        GWPAElement term = gwpa_bracket(A, factors[r], v);
        for (std::size_t s = 0; s < factors.size(); ++s) {
            if (s != r) term = gwpa_mul(A, factors[s], term);
        }
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form oracle.

GWPAElement bracket_oracle_graded(const GWPAData& A, const std::variant<Polynomial, GeneratorRef>& first,
                                  const Polynomial& lambda, const GradeVector& alpha) {
    require_same_ring(lambda.ring(), A.ring());
    if (alpha.size() != A.rank()) throw Error(ErrorKind::AlgebraMismatch, "degree has the wrong length");
    if (const auto* d = std::get_if<Polynomial>(&first)) {
        // {d, lambda v_alpha} = (-pad_lambda + lambda sum_i alpha_i d_i)(d) v_alpha
        require_same_ring(d->ring(), A.ring());
        Polynomial coeff = -base_bracket(A.base(), lambda, *d);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            coeff += lambda * apply_derivation(A.partial(i), *d) * Rational(alpha[i]);
        }
        return gwpa_monomial(A, coeff, alpha);
    }
    const auto& gen = std::get<GeneratorRef>(first);
    if (gen.index >= A.rank()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    const std::size_t i = gen.index;
    const int pm = gen.kind == GeneratorRef::Kind::X ? +1 : -1;
    const Polynomial dl = apply_derivation(A.partial(i), lambda);
    GradeVector target = alpha;
    target[i] += pm;
    // {v_{+-1}(i), lambda v_alpha}
    //   = -+ d_i(lambda) v_{alpha +- e_i}                          if alpha_i = 0 or sign(alpha_i) = +-
    //   = (-+ d_i(lambda) a_i + lambda alpha_i d_i(a_i)) v_{alpha +- e_i}   if sign(alpha_i) = -+
    const bool same_side = alpha[i] == 0 || (alpha[i] > 0) == (pm > 0);
    if (same_side) return gwpa_monomial(A, dl * Rational(-pm), target);
    Polynomial coeff = dl * A.a(i) * Rational(-pm) +
                       lambda * apply_derivation(A.partial(i), A.a(i)) * Rational(alpha[i]);
    return gwpa_monomial(A, coeff, target);
}

// ---------------------------------------------------------------------------

Degree element_weight(const GWPAElement& u) {
    Degree best = Degree::minus_infinity();
    for (const auto& [alpha, lambda] : u.terms()) {
        const int g = grade_norm(alpha);
        for (const auto& [m, c] : lambda.terms()) {
            best = std::max(best, Degree(static_cast<int>(m.total_degree()) + g));
        }
    }
    return best;
}

std::string render(const GWPAData& A, const GWPAElement& u) {
    require_element_of(A, u);
    return render_graded(u.terms(), A.ring(), A.x_names(), A.y_names());
}

GWPAElement parse_element(const GWPAData& A, std::string_view text) {
    const std::size_t nb = A.ring()->size();
    const std::size_t n = A.rank();
    std::vector<std::string> names = A.ring()->names();
    names.insert(names.end(), A.x_names().begin(), A.x_names().end());
    names.insert(names.end(), A.y_names().begin(), A.y_names().end());
    RingPtr extended = make_ring(std::move(names));
    Polynomial p = parse_polynomial(text, extended);
    GWPAElement out = gwpa_zero(A);
    for (const auto& [m, c] : p.terms()) {
        Monomial base(nb);
        std::copy(m.exponents.begin(), m.exponents.begin() + static_cast<std::ptrdiff_t>(nb), base.exponents.begin());
        GradeVector xs = zero_grade(n);
        GradeVector ys = zero_grade(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = static_cast<int>(m.exponents[nb + i]);
            ys[i] = -static_cast<int>(m.exponents[nb + n + i]);
        }
        GWPAElement term = gwpa_mul(A, gwpa_monomial(A, Polynomial::monomial(A.ring(), base, c), xs),
                                    gwpa_monomial(A, Polynomial::constant(A.ring(), 1), ys));
        out += term;
    }
    return out;
}

}  // namespace gwpa
