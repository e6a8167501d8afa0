#include "gwpa/poisson.hpp"

#include <random>

#include "gwpa/errors.hpp"

namespace gwpa {

BracketMatrix zero_bracket_matrix(const RingPtr& ring) {
    return BracketMatrix(ring->size(), std::vector<Polynomial>(ring->size(), Polynomial(ring)));
}

BaseDerivation::BaseDerivation(RingPtr ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_->size()) {
        throw Error(ErrorKind::MissingImage, "a derivation needs one image per variable (got " +
                                                 std::to_string(images_.size()) + ", expected " +
                                                 std::to_string(ring_->size()) + ")");
    }
    for (const auto& img : images_) require_same_ring(img.ring(), ring_);
}

BaseDerivation BaseDerivation::zero(const RingPtr& ring) {
    return BaseDerivation(ring, std::vector<Polynomial>(ring->size(), Polynomial(ring)));
}

BaseDerivation BaseDerivation::scaled_partial(const RingPtr& ring, std::size_t var, const Polynomial& coeff) {
    std::vector<Polynomial> images(ring->size(), Polynomial(ring));
    images.at(var) = coeff;
    return BaseDerivation(ring, std::move(images));
}

BaseDerivation BaseDerivation::scaled_partial(const RingPtr& ring, std::size_t var) {
    return scaled_partial(ring, var, Polynomial::constant(ring, 1));
}

bool BaseDerivation::is_zero() const {
    for (const auto& img : images_) {
        if (!img.is_zero()) return false;
    }
    return true;
}

bool BaseDerivation::operator==(const BaseDerivation& other) const {
    return *ring_ == *other.ring_ && images_ == other.images_;
}

BaseDerivation BaseDerivation::operator-() const {
    std::vector<Polynomial> neg;
    neg.reserve(images_.size());
    for (const auto& img : images_) neg.push_back(-img);
    return BaseDerivation(ring_, std::move(neg));
}

Polynomial apply_derivation(const BaseDerivation& d, const Polynomial& f) {
    require_same_ring(d.ring(), f.ring());
    Polynomial out(f.ring());
    for (std::size_t j = 0; j < f.ring()->size(); ++j) {
        if (d.image(j).is_zero()) continue;
        Polynomial df = partial(f, j);
        if (!df.is_zero()) out += d.image(j) * df;
    }
    return out;
}

namespace {

Polynomial matrix_bracket(const BracketMatrix& m, const Polynomial& f, const Polynomial& g) {
    const auto& ring = f.ring();
    Polynomial out(ring);
    if (f.is_constant() || g.is_constant()) return out;
    const std::size_t n = ring->size();
    std::vector<Polynomial> dg;
    dg.reserve(n);
    for (std::size_t k = 0; k < n; ++k) dg.push_back(partial(g, k));
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial dfj = partial(f, j);
        if (dfj.is_zero()) continue;
        Polynomial row(ring);
        for (std::size_t k = 0; k < n; ++k) {
            if (dg[k].is_zero() || m[j][k].is_zero()) continue;
            row += dg[k] * m[j][k];
        }
        if (!row.is_zero()) out += dfj * row;
    }
    return out;
}

Polynomial jacobiator(const BracketMatrix& m, const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return matrix_bracket(m, a, matrix_bracket(m, b, c)) + matrix_bracket(m, b, matrix_bracket(m, c, a)) +
           matrix_bracket(m, c, matrix_bracket(m, a, b));
}

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, unsigned max_degree) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
    Polynomial out(ring);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->size());
        const unsigned d = deg(rng);
        for (unsigned s = 0; s < d; ++s) ++m.exponents[var(rng)];
        out += Polynomial::monomial(ring, std::move(m), coeff(rng));
    }
    return out;
}

}  // namespace

JacobiReport jacobi_check(const RingPtr& ring, const BracketMatrix& matrix) {
    JacobiReport report;
    const std::size_t n = ring->size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                Polynomial j = jacobiator(matrix, Polynomial::variable(ring, a), Polynomial::variable(ring, b),
                                          Polynomial::variable(ring, c));
                if (!j.is_zero()) {
                    report.holds = false;
                    report.failing_triple = std::array<std::size_t, 3>{a, b, c};
                    report.jacobiator = std::move(j);
                    return report;
                }
            }
        }
    }
    if (n == 0) return report;
    // The generator check is a proof for biderivation brackets; the random
    // triples re-check it on composite elements.
    std::mt19937_64 rng(0x6a61636f6269ULL);
    for (int trial = 0; trial < 8; ++trial) {
        Polynomial f = random_polynomial(ring, rng, 3);
        Polynomial g = random_polynomial(ring, rng, 3);
        Polynomial h = random_polynomial(ring, rng, 3);
        Polynomial j = jacobiator(matrix, f, g, h);
        if (!j.is_zero()) {
            report.holds = false;
            report.jacobiator = std::move(j);
            return report;
        }
    }
    return report;
}

BasePoissonAlgebra::BasePoissonAlgebra(RingPtr ring, BracketMatrix matrix)
    : ring_(std::move(ring)), matrix_(std::move(matrix)) {
    const std::size_t n = ring_->size();
    if (matrix_.size() != n) throw Error(ErrorKind::InvalidArgument, "bracket matrix has the wrong number of rows");
    for (const auto& row : matrix_) {
        if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "bracket matrix has a row of the wrong length");
        for (const auto& entry : row) require_same_ring(entry.ring(), ring_);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!matrix_[j][j].is_zero()) {
            throw Error(ErrorKind::NotAntisymmetric, "diagonal entry {" + ring_->name(j) + ", " + ring_->name(j) +
                                                         "} is " + matrix_[j][j].to_string());
        }
        for (std::size_t k = j + 1; k < n; ++k) {
            if (!(matrix_[j][k] + matrix_[k][j]).is_zero()) {
                throw Error(ErrorKind::NotAntisymmetric, "{" + ring_->name(j) + ", " + ring_->name(k) +
                                                             "} != -{" + ring_->name(k) + ", " + ring_->name(j) + "}");
            }
        }
    }
    JacobiReport jr = jacobi_check(ring_, matrix_);
    if (!jr.holds) {
        std::string where = "on random elements";
        if (jr.failing_triple) {
            const auto& t = *jr.failing_triple;
            where = "on (" + ring_->name(t[0]) + ", " + ring_->name(t[1]) + ", " + ring_->name(t[2]) + ")";
        }
        throw Error(ErrorKind::JacobiFailure, "Jacobi identity fails " + where + ": jacobiator = " +
                                                  jr.jacobiator->to_string());
    }
}

BasePoissonAlgebra BasePoissonAlgebra::trivial(const RingPtr& ring) {
    return BasePoissonAlgebra(ring, zero_bracket_matrix(ring));
}

bool BasePoissonAlgebra::is_trivial() const {
    for (const auto& row : matrix_) {
        for (const auto& e : row) {
            if (!e.is_zero()) return false;
        }
    }
    return true;
}

bool BasePoissonAlgebra::operator==(const BasePoissonAlgebra& other) const {
    return *ring_ == *other.ring_ && matrix_ == other.matrix_;
}

JacobiReport jacobi_check(const BasePoissonAlgebra& algebra) { return jacobi_check(algebra.ring(), algebra.matrix()); }

Polynomial base_bracket(const BasePoissonAlgebra& algebra, const Polynomial& f, const Polynomial& g) {
    require_same_ring(algebra.ring(), f.ring());
    require_same_ring(algebra.ring(), g.ring());
    return matrix_bracket(algebra.matrix(), f, g);
}

bool is_poisson_derivation(const BasePoissonAlgebra& algebra, const BaseDerivation& d) {
    require_same_ring(algebra.ring(), d.ring());
    const auto& ring = algebra.ring();
    const std::size_t n = ring->size();
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial hj = Polynomial::variable(ring, j);
        for (std::size_t k = j + 1; k < n; ++k) {
            const Polynomial hk = Polynomial::variable(ring, k);
            Polynomial lhs = apply_derivation(d, algebra.generator_bracket(j, k));
            Polynomial rhs = base_bracket(algebra, d.image(j), hk) + base_bracket(algebra, hj, d.image(k));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

Polynomial derivation_commutator(const BaseDerivation& d1, const BaseDerivation& d2, const Polynomial& f) {
    return apply_derivation(d1, apply_derivation(d2, f)) - apply_derivation(d2, apply_derivation(d1, f));
}

bool derivations_commute(std::span<const BaseDerivation> derivations) {
    for (std::size_t i = 0; i < derivations.size(); ++i) {
        for (std::size_t j = i + 1; j < derivations.size(); ++j) {
            require_same_ring(derivations[i].ring(), derivations[j].ring());
            const auto& ring = derivations[i].ring();
            for (std::size_t k = 0; k < ring->size(); ++k) {
                if (!derivation_commutator(derivations[i], derivations[j], Polynomial::variable(ring, k)).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> names = base->names();
    names.insert(names.end(), extra.begin(), extra.end());
    return make_ring(std::move(names));
}

BracketMatrix embed_matrix(const BasePoissonAlgebra& base, const RingPtr& ring) {
    BracketMatrix m = zero_bracket_matrix(ring);
    const std::size_t nb = base.ring()->size();
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t k = 0; k < nb; ++k) m[j][k] = embed(base.generator_bracket(j, k), ring);
    }
    return m;
}

}  // namespace

BasePoissonAlgebra poisson_ore_extension(const BasePoissonAlgebra& base, std::span<const BaseDerivation> derivations,
                                         const std::vector<std::string>& x_names) {
    if (derivations.size() != x_names.size()) {
        throw Error(ErrorKind::InvalidArgument, "need one derivation per new variable");
    }
    RingPtr ring = extend_ring(base.ring(), x_names);
    BracketMatrix m = embed_matrix(base, ring);
    const std::size_t nb = base.ring()->size();
    for (std::size_t i = 0; i < derivations.size(); ++i) {
        require_same_ring(derivations[i].ring(), base.ring());
        const Polynomial xi = Polynomial::variable(ring, nb + i);
        for (std::size_t h = 0; h < nb; ++h) {
            Polynomial e = embed(derivations[i].image(h), ring) * xi;
            m[nb + i][h] = e;
            m[h][nb + i] = -e;
        }
    }
    return BasePoissonAlgebra(ring, std::move(m));
}

BasePoissonAlgebra ore_xy_algebra(const BasePoissonAlgebra& base, std::span<const BaseDerivation> derivations,
                                  std::span<const Polynomial> alphas, const std::vector<std::string>& x_names,
                                  const std::vector<std::string>& y_names) {
    const std::size_t n = derivations.size();
    if (alphas.size() != n || x_names.size() != n || y_names.size() != n) {
        throw Error(ErrorKind::InvalidArgument, "derivations, alphas and generator names must have equal length");
    }
    std::vector<std::string> extra = x_names;
    extra.insert(extra.end(), y_names.begin(), y_names.end());
    RingPtr ring = extend_ring(base.ring(), extra);
    BracketMatrix m = embed_matrix(base, ring);
    const std::size_t nb = base.ring()->size();
    for (std::size_t i = 0; i < n; ++i) {
        require_same_ring(derivations[i].ring(), base.ring());
        require_same_ring(alphas[i].ring(), base.ring());
        const std::size_t xi = nb + i;
        const std::size_t yi = nb + n + i;
        const Polynomial x = Polynomial::variable(ring, xi);
        const Polynomial y = Polynomial::variable(ring, yi);
        for (std::size_t h = 0; h < nb; ++h) {
            Polynomial dh = embed(derivations[i].image(h), ring);
            m[yi][h] = dh * y;
            m[h][yi] = -(dh * y);
            m[xi][h] = -(dh * x);
            m[h][xi] = dh * x;
        }
        Polynomial alpha = embed(alphas[i], ring);
        m[yi][xi] = alpha;
        m[xi][yi] = -alpha;
    }
    return BasePoissonAlgebra(ring, std::move(m));
}

}  // namespace gwpa
