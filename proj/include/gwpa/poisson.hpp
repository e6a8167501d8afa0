#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwpa/polynomial.hpp"

namespace gwpa {

// Entry (j, k) is {H_j, H_k}.
using BracketMatrix = std::vector<std::vector<Polynomial>>;

BracketMatrix zero_bracket_matrix(const RingPtr& ring);

/// A derivation of the polynomial ring, determined by its values on the
/// variables and extended to arbitrary polynomials by the chain rule.
class BaseDerivation {
public:
    BaseDerivation(RingPtr ring, std::vector<Polynomial> images);

    static BaseDerivation zero(const RingPtr& ring);
    /// coeff * d/dH_var
    static BaseDerivation scaled_partial(const RingPtr& ring, std::size_t var, const Polynomial& coeff);
    static BaseDerivation scaled_partial(const RingPtr& ring, std::size_t var);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }
    const Polynomial& image(std::size_t var) const { return images_.at(var); }

    bool is_zero() const;
    BaseDerivation operator-() const;
    bool operator==(const BaseDerivation& other) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> images_;
};

Polynomial apply_derivation(const BaseDerivation& d, const Polynomial& f);

struct JacobiReport {
    bool holds = true;
    // 0-based generator indices of the first failing triple.
    std::optional<std::array<std::size_t, 3>> failing_triple;
    std::optional<Polynomial> jacobiator;
};

/// Jacobi identity for a raw bracket matrix: all generator triples, then a
/// seeded spot check on random triples of degree at most 3.
JacobiReport jacobi_check(const RingPtr& ring, const BracketMatrix& matrix);

/// A commutative polynomial Poisson algebra whose bracket is the biderivation
/// determined by an antisymmetric matrix on the generators. Construction
/// rejects non-antisymmetric matrices and matrices failing the Jacobi identity.
class BasePoissonAlgebra {
public:
    BasePoissonAlgebra(RingPtr ring, BracketMatrix matrix);

    static BasePoissonAlgebra trivial(const RingPtr& ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const BracketMatrix& matrix() const noexcept { return matrix_; }
    const Polynomial& generator_bracket(std::size_t j, std::size_t k) const { return matrix_.at(j).at(k); }
    bool is_trivial() const;

    bool operator==(const BasePoissonAlgebra& other) const;

private:
    RingPtr ring_;
    BracketMatrix matrix_;
};

JacobiReport jacobi_check(const BasePoissonAlgebra& algebra);

/// sum_{j,k} (df/dH_j)(dg/dH_k) {H_j, H_k}
Polynomial base_bracket(const BasePoissonAlgebra& algebra, const Polynomial& f, const Polynomial& g);

bool is_poisson_derivation(const BasePoissonAlgebra& algebra, const BaseDerivation& d);

bool derivations_commute(std::span<const BaseDerivation> derivations);

/// Value of the commutator [d1, d2] on a polynomial.
Polynomial derivation_commutator(const BaseDerivation& d1, const BaseDerivation& d2, const Polynomial& f);

/// The Poisson Ore extension D[X; d]: {X_i, X_j} = 0, {X_i, h} = d_i(h) X_i.
BasePoissonAlgebra poisson_ore_extension(const BasePoissonAlgebra& base, std::span<const BaseDerivation> derivations,
                                         const std::vector<std::string>& x_names);

/// The polynomial Poisson algebra D[X, Y; d, alpha]:
///   {Y_i, h} = d_i(h) Y_i, {X_i, h} = -d_i(h) X_i, {Y_i, X_i} = alpha_i,
/// all brackets between different indices zero. Variables are ordered as the
/// base variables followed by X_1..X_n, Y_1..Y_n.
BasePoissonAlgebra ore_xy_algebra(const BasePoissonAlgebra& base, std::span<const BaseDerivation> derivations,
                                  std::span<const Polynomial> alphas, const std::vector<std::string>& x_names,
                                  const std::vector<std::string>& y_names);

}  // namespace gwpa
