#include "gwpa/gwa.hpp"

#include <functional>
#include <limits>

#include "gwpa/centre.hpp"
#include "gwpa/linear.hpp"

namespace gwpa {

AffineMap::AffineMap(RingPtr ring, std::vector<Polynomial> images) : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_->size()) {
        throw Error(ErrorKind::MissingImage, "an affine map needs one image per variable");
    }
    for (std::size_t j = 0; j < images_.size(); ++j) {
        require_same_ring(images_[j].ring(), ring_);
        if (images_[j].degree() > Degree(1)) {
            throw Error(ErrorKind::NotAffine, "image of " + ring_->name(j) + " is not affine: " + images_[j].to_string());
        }
    }
}

AffineMap AffineMap::identity(const RingPtr& ring) {
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < ring->size(); ++j) images.push_back(Polynomial::variable(ring, j));
    return AffineMap(ring, std::move(images));
}

AffineMap AffineMap::shift(const RingPtr& ring, std::size_t var, const Rational& shift) {
    AffineMap m = identity(ring);
    m.images_.at(var) += Polynomial::constant(ring, shift);
    return m;
}

Polynomial AffineMap::apply(const Polynomial& f) const {
    require_same_ring(f.ring(), ring_);
    return substitute(f, images_, ring_);
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    std::vector<Polynomial> images;
    for (const auto& img : other.images_) images.push_back(apply(img));
    return AffineMap(ring_, std::move(images));
}

AffineMap AffineMap::inverse() const {
    const std::size_t n = ring_->size();
    RationalMatrix lin(n, std::vector<Rational>(n));
    std::vector<Rational> shift(n);
    for (std::size_t j = 0; j < n; ++j) {
        shift[j] = images_[j].constant_term();
        for (std::size_t k = 0; k < n; ++k) {
            Monomial m(n);
            m.exponents[k] = 1;
            lin[j][k] = images_[j].coefficient(m);
        }
    }
    auto inv = matrix_inverse(lin);
    if (!inv) throw Error(ErrorKind::NotAffine, "affine map is not invertible");
    // x -> M x + c has inverse x -> M^{-1} x - M^{-1} c.
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial p(ring_);
        Rational c = 0;
        for (std::size_t k = 0; k < n; ++k) {
            p += Polynomial::variable(ring_, k) * (*inv)[j][k];
            c -= (*inv)[j][k] * shift[k];
        }
        p += Polynomial::constant(ring_, c);
        images.push_back(std::move(p));
    }
    return AffineMap(ring_, std::move(images));
}

AffineMap AffineMap::power(int k) const {
    if (k < 0) return inverse().power(-k);
    AffineMap out = identity(ring_);
    for (int s = 0; s < k; ++s) out = compose(out);
    return out;
}

std::string HalfDegree::to_string() const {
    if (!twice_) return "-inf";
    if (*twice_ % 2 == 0) return std::to_string(*twice_ / 2);
    return std::to_string(*twice_) + "/2";
}

GWAData::GWAData(RingPtr ring, std::vector<AffineMap> sigmas, std::vector<Polynomial> a, std::vector<int> weights,
                 std::vector<int> d, int nu, std::vector<std::string> x_names, std::vector<std::string> y_names)
    : ring_(std::move(ring)),
      sigmas_(std::move(sigmas)),
      a_(std::move(a)),
      weights_(std::move(weights)),
      d_(std::move(d)),
      nu_(nu),
      x_names_(std::move(x_names)),
      y_names_(std::move(y_names)) {
    const std::size_t n = a_.size();
    auto fail = [](const std::string& what) { throw Error(ErrorKind::Validation, what); };
    if (sigmas_.size() != n || d_.size() != n) fail("sigmas, a and d must have the same length");
    if (weights_.size() != ring_->size()) fail("one weight per base variable is required");
    if (x_names_.empty()) x_names_ = default_x_names(n);
    if (y_names_.empty()) y_names_ = default_y_names(n);
    if (x_names_.size() != n || y_names_.size() != n) fail("one X and one Y name per index is required");
    {
        // Rejects collisions between base and generator names.
        std::vector<std::string> all = ring_->names();
        all.insert(all.end(), x_names_.begin(), x_names_.end());
        all.insert(all.end(), y_names_.begin(), y_names_.end());
        make_ring(std::move(all));
    }
    for (int w : weights_) {
        if (w < 1) fail("weights must be at least 1");
    }
    if (nu_ < 1) fail("nu must be a positive integer");
    for (std::size_t i = 0; i < n; ++i) {
        require_same_ring(sigmas_[i].ring(), ring_);
        require_same_ring(a_[i].ring(), ring_);
        inverses_.push_back(sigmas_[i].inverse());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::string idx = std::to_string(i + 1);
        if (d_[i] < 1) fail("d_" + idx + " must be at least 1");
        const Degree wa = weighted_degree(a_[i], weights_);
        if (wa != Degree(d_[i])) {
            fail("a_" + idx + " = " + a_[i].to_string() + " does not have weight d_" + idx + " = " +
                 std::to_string(d_[i]));
        }
        for (std::size_t j = 0; j < ring_->size(); ++j) {
            const Polynomial h = Polynomial::variable(ring_, j);
            const Polynomial diff = sigmas_[i].apply(h) - h;
            if (!diff.is_zero() && weighted_degree(diff, weights_) > Degree(weights_[j] - nu_)) {
                fail("sigma_" + idx + " - 1 does not lower the weight of " + ring_->name(j) + " by nu");
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (sigmas_[i].apply(a_[j]) != a_[j]) {
                fail("sigma_" + idx + " does not fix a_" + std::to_string(j + 1));
            }
            if (j > i && !(sigmas_[i].compose(sigmas_[j]) == sigmas_[j].compose(sigmas_[i]))) {
                fail("sigma_" + idx + " and sigma_" + std::to_string(j + 1) + " do not commute");
            }
        }
    }
}

AffineMap GWAData::sigma_power(const GradeVector& alpha) const {
    AffineMap out = AffineMap::identity(ring_);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) out = sigmas_[i].power(alpha[i]).compose(out);
    }
    return out;
}

bool GWAData::operator==(const GWAData& other) const {
    return *ring_ == *other.ring_ && sigmas_ == other.sigmas_ && a_ == other.a_ && weights_ == other.weights_ &&
           d_ == other.d_ && nu_ == other.nu_ && x_names_ == other.x_names_ && y_names_ == other.y_names_;
}

namespace {

int monomial_weight(const Monomial& m, const std::vector<int>& weights) {
    int w = 0;
    for (std::size_t j = 0; j < m.exponents.size(); ++j) w += weights[j] * static_cast<int>(m.exponents[j]);
    return w;
}

int grade_weight(const GWAData& A, const GradeVector& alpha) {
    int w = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) w += A.d()[i] * std::abs(alpha[i]);
    return w;
}

}  // namespace

Degree weighted_degree(const Polynomial& f, const std::vector<int>& weights) {
    if (f.is_zero()) return Degree::minus_infinity();
    int best = 0;
    for (const auto& [m, c] : f.terms()) best = std::max(best, monomial_weight(m, weights));
    return Degree(best);
}

Polynomial weighted_part(const Polynomial& f, const std::vector<int>& weights, int w) {
    Polynomial::TermMap t;
    for (const auto& [m, c] : f.terms()) {
        if (monomial_weight(m, weights) == w) t.emplace(m, c);
    }
    return Polynomial(f.ring(), std::move(t));
}

GWAElement gwa_zero(const GWAData& A) { return GWAElement(A.ring(), A.rank()); }

GWAElement gwa_constant(const GWAData& A, const Rational& c) {
    return gwa_from_base(A, Polynomial::constant(A.ring(), c));
}

GWAElement gwa_from_base(const GWAData& A, const Polynomial& e) { return gwa_monomial(A, e, zero_grade(A.rank())); }

GWAElement gwa_monomial(const GWAData& A, const Polynomial& e, const GradeVector& alpha) {
    require_same_ring(e.ring(), A.ring());
    if (alpha.size() != A.rank()) throw Error(ErrorKind::AlgebraMismatch, "degree has the wrong length");
    return GWAElement::monomial(A.ring(), alpha, e);
}

GWAElement gwa_x(const GWAData& A, std::size_t i) {
    return gwa_monomial(A, Polynomial::constant(A.ring(), 1), unit_grade(A.rank(), i, 1));
}

GWAElement gwa_y(const GWAData& A, std::size_t i) {
    return gwa_monomial(A, Polynomial::constant(A.ring(), 1), unit_grade(A.rank(), i, -1));
}

void require_element_of(const GWAData& A, const GWAElement& u) {
    require_same_ring(u.ring(), A.ring());
    if (u.rank() != A.rank()) throw Error(ErrorKind::AlgebraMismatch, "element has the wrong rank");
}

GWAElement gwa_mul(const GWAData& A, const GWAElement& u, const GWAElement& v) {
    require_element_of(A, u);
    require_element_of(A, v);
    // sigma_i^k(a_i), shared across the terms of this product.
    std::map<std::pair<std::size_t, int>, Polynomial> shifted;
    auto shifted_a = [&](std::size_t i, int k) -> const Polynomial& {
        auto it = shifted.find({i, k});
        if (it == shifted.end()) it = shifted.emplace(std::pair{i, k}, A.sigma(i).power(k).apply(A.a(i))).first;
        return it->second;
    };
    // Coefficient of w_p w_q = c w_{p+q} for a single index; it is fixed by
    // every sigma_j with j != i, so it moves freely to the left.
    auto reduction = [&](std::size_t i, int p, int q) {
        Polynomial c = Polynomial::constant(A.ring(), 1);
        if (p > 0 && q < 0) {
            // X^p Y^m = sigma^p(a) sigma^{p-1}(a) ... X^{p-m} Y^{m-m}
            const int m = std::min(p, -q);
            for (int k = 0; k < m; ++k) c = c * shifted_a(i, p - k);
        } else if (p < 0 && q > 0) {
            // Y^p X^m = a sigma^{-1}(a) ... read from the inside out
            const int pp = -p;
            const int m = std::min(pp, q);
            for (int k = 0; k < m; ++k) c = c * shifted_a(i, -(pp - 1 - k));
        }
        return c;
    };
    GWAElement out = gwa_zero(A);
    for (const auto& [alpha, e] : u.terms()) {
        const AffineMap s = A.sigma_power(alpha);
        for (const auto& [beta, f] : v.terms()) {
            Polynomial coeff = e * s.apply(f);
            for (std::size_t i = 0; i < A.rank() && !coeff.is_zero(); ++i) {
                coeff = coeff * reduction(i, alpha[i], beta[i]);
            }
            out.add_term(alpha + beta, coeff);
        }
    }
    return out;
}

GWAElement gwa_commutator(const GWAData& A, const GWAElement& u, const GWAElement& v) {
    return gwa_mul(A, u, v) - gwa_mul(A, v, u);
}

HalfDegree filtration_degree(const GWAData& A, const GWAElement& u) {
    require_element_of(A, u);
    if (u.is_zero()) return HalfDegree::minus_infinity();
    int best = std::numeric_limits<int>::min();
    for (const auto& [alpha, e] : u.terms()) {
        best = std::max(best, 2 * weighted_degree(e, A.weights()).value() + grade_weight(A, alpha));
    }
    return HalfDegree::from_twice(best);
}

GWAElement filtration_part(const GWAData& A, const GWAElement& u, int twice) {
    GWAElement out = gwa_zero(A);
    for (const auto& [alpha, e] : u.terms()) {
        const int rest = twice - grade_weight(A, alpha);
        if (rest < 0 || rest % 2 != 0) continue;
        out.add_term(alpha, weighted_part(e, A.weights(), rest / 2));
    }
    return out;
}

GWPAData predicted_gwpa(const GWAData& A) {
    const auto& ring = A.ring();
    std::vector<Polynomial> abar;
    std::vector<BaseDerivation> ds;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        abar.push_back(weighted_part(A.a(i), A.weights(), A.d()[i]));
        std::vector<Polynomial> images;
        for (std::size_t j = 0; j < ring->size(); ++j) {
            const Polynomial h = Polynomial::variable(ring, j);
            images.push_back(weighted_part(h - A.sigma(i).apply(h), A.weights(), A.weights()[j] - A.nu()));
        }
        ds.emplace_back(ring, std::move(images));
    }
    return GWPAData(BasePoissonAlgebra::trivial(ring), std::move(abar), std::move(ds), A.x_names(), A.y_names());
}

GWPAElement leading_symbol(const GWAData& A, const GWPAData& P, const GWAElement& u) {
    require_same_ring(P.ring(), A.ring());
    const HalfDegree s = filtration_degree(A, u);
    if (s.is_minus_infinity()) return gwpa_zero(P);
    return GWPAElement(P.ring(), P.rank(), filtration_part(A, u, s.twice()).terms());
}

namespace {

// (1 - sigma_i)(f) read at weight w(f) - nu against the induced derivation.
bool induced_derivation_matches(const GWAData& A, const GWPAData& P, std::size_t i, const Polynomial& f) {
    const Degree w = weighted_degree(f, A.weights());
    if (w.is_minus_infinity()) return true;
    const Polynomial top = weighted_part(f, A.weights(), w.value());
    const Polynomial drop = weighted_part(f - A.sigma(i).apply(f), A.weights(), w.value() - A.nu());
    return drop == apply_derivation(P.partial(i), top);
}

}  // namespace

GrCorrespondenceReport gr_correspondence_check(const GWAData& A,
                                               const std::vector<std::pair<GWAElement, GWAElement>>& pairs) {
    GrCorrespondenceReport rep{predicted_gwpa(A), {}, true, {}, 0, true};
    const GWPAData& P = rep.predicted;
    rep.validation = validate_gwpa(P);

    const auto& ring = A.ring();
    for (std::size_t i = 0; i < A.rank(); ++i) {
        for (std::size_t j = 0; j < ring->size(); ++j) {
            for (std::size_t k = j; k < ring->size(); ++k) {
                const Polynomial f = Polynomial::variable(ring, j) * Polynomial::variable(ring, k);
                rep.derivations_consistent &= induced_derivation_matches(A, P, i, f);
            }
        }
        rep.derivations_consistent &= induced_derivation_matches(A, P, i, A.a(i));
    }

    for (const auto& [u, v] : pairs) {
        if (u.is_zero() || v.is_zero()) throw Error(ErrorKind::InvalidArgument, "pairs must consist of nonzero elements");
        PairCheck pc;
        pc.u = render(A, u);
        pc.v = render(A, v);
        pc.s = filtration_degree(A, u);
        pc.t = filtration_degree(A, v);
        const GWAElement c = gwa_commutator(A, u, v);
        pc.commutator_degree = filtration_degree(A, c);
        const int target = pc.s.twice() + pc.t.twice() - 2 * A.nu();
        pc.drops = pc.commutator_degree <= HalfDegree::from_twice(target);
        const GWPAElement graded(P.ring(), P.rank(), filtration_part(A, c, target).terms());
        const GWPAElement predicted = gwpa_bracket(P, leading_symbol(A, P, u), leading_symbol(A, P, v));
        pc.matches = graded == predicted;
        if (!pc.drops || !pc.matches) {
            pc.graded_commutator = render(P, graded);
            pc.predicted_bracket = render(P, predicted);
            ++rep.mismatches;
        }
        rep.pairs.push_back(std::move(pc));
    }
    rep.ok = rep.validation.ok && rep.derivations_consistent && rep.mismatches == 0;
    return rep;
}

std::vector<GWAElement> gwa_filtration_monomials(const GWAData& A, int twice) {
    std::vector<GWAElement> out;
    const std::size_t n = A.rank();
    GradeVector alpha(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            const int rest = left / 2;
            for (const auto& m : monomials_up_to(A.ring()->size(), rest)) {
                if (2 * monomial_weight(m, A.weights()) <= left) {
                    out.push_back(gwa_monomial(A, Polynomial::monomial(A.ring(), m), alpha));
                }
            }
            return;
        }
        for (int k = -left / A.d()[i]; k <= left / A.d()[i]; ++k) {
            alpha[i] = k;
            rec(i + 1, left - A.d()[i] * std::abs(k));
        }
        alpha[i] = 0;
    };
    if (twice >= 0) rec(0, twice);
    return out;
}

std::string render(const GWAData& A, const GWAElement& u) {
    require_element_of(A, u);
    return render_graded(u.terms(), A.ring(), A.x_names(), A.y_names());
}

GWAElement parse_element(const GWAData& A, std::string_view text) {
    const std::size_t nb = A.ring()->size();
    const std::size_t n = A.rank();
    std::vector<std::string> names = A.ring()->names();
    names.insert(names.end(), A.x_names().begin(), A.x_names().end());
    names.insert(names.end(), A.y_names().begin(), A.y_names().end());
    const RingPtr extended = make_ring(std::move(names));
    const Polynomial p = parse_polynomial(text, extended);
    GWAElement out = gwa_zero(A);
    for (const auto& [m, c] : p.terms()) {
        Monomial base(nb);
        std::copy(m.exponents.begin(), m.exponents.begin() + static_cast<std::ptrdiff_t>(nb), base.exponents.begin());
        GradeVector xs = zero_grade(n);
        GradeVector ys = zero_grade(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = static_cast<int>(m.exponents[nb + i]);
            ys[i] = -static_cast<int>(m.exponents[nb + n + i]);
        }
        out += gwa_mul(A, gwa_monomial(A, Polynomial::monomial(A.ring(), base, c), xs),
                       gwa_monomial(A, Polynomial::constant(A.ring(), 1), ys));
    }
    return out;
}

GWAData gallery_weyl(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "weyl needs n >= 1");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("H" + std::to_string(i));
    RingPtr ring = make_ring(names);
    std::vector<AffineMap> sigmas;
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < n; ++i) {
        sigmas.push_back(AffineMap::shift(ring, i, -1));
        a.push_back(Polynomial::variable(ring, i));
    }
    return GWAData(ring, std::move(sigmas), std::move(a), std::vector<int>(n, 1), std::vector<int>(n, 1), 1);
}

GWAData gallery_usl2() {
    RingPtr ring = make_ring({"C", "H"});
    return GWAData(ring, {AffineMap::shift(ring, 1, -1)}, {parse_polynomial("C - H^2 - H", ring)}, {2, 1}, {2}, 1);
}

}  // namespace gwpa
