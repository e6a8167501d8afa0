#pragma once

/*
 * Generalized Weyl Poisson algebras A = D[X, Y; a, d}.
 *
 * A is the commutative algebra D[X_1..X_n, Y_1..Y_n] / (X_i Y_i - a_i) with
 * the bracket extending the one on D by
 *   {Y_i, h} = d_i(h) Y_i,  {X_i, h} = -d_i(h) X_i,  {Y_i, X_i} = d_i(a_i),
 * and all brackets between generators of different indices zero.
 *
 * Elements are stored in the Z^n-graded normal form sum_alpha lambda_alpha v_alpha
 * where v_alpha = prod_i X_i^{alpha_i} (alpha_i > 0) or Y_i^{-alpha_i} (alpha_i < 0).
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gwpa/graded_element.hpp"
#include "gwpa/poisson.hpp"

namespace gwpa {

class GWPAData {
public:
    GWPAData(BasePoissonAlgebra base, std::vector<Polynomial> a, std::vector<BaseDerivation> partials);
    GWPAData(BasePoissonAlgebra base, std::vector<Polynomial> a, std::vector<BaseDerivation> partials,
             std::vector<std::string> x_names, std::vector<std::string> y_names);

    const BasePoissonAlgebra& base() const noexcept { return base_; }
    const RingPtr& ring() const noexcept { return base_.ring(); }
    std::size_t rank() const noexcept { return a_.size(); }
    const std::vector<Polynomial>& a() const noexcept { return a_; }
    const Polynomial& a(std::size_t i) const { return a_.at(i); }
    const std::vector<BaseDerivation>& partials() const noexcept { return partials_; }
    const BaseDerivation& partial(std::size_t i) const { return partials_.at(i); }
    const std::vector<std::string>& x_names() const noexcept { return x_names_; }
    const std::vector<std::string>& y_names() const noexcept { return y_names_; }

    bool operator==(const GWPAData&) const = default;

private:
    BasePoissonAlgebra base_;
    std::vector<Polynomial> a_;
    std::vector<BaseDerivation> partials_;
    std::vector<std::string> x_names_;
    std::vector<std::string> y_names_;
};

std::vector<std::string> default_x_names(std::size_t n);
std::vector<std::string> default_y_names(std::size_t n);

struct Violation {
    enum class Kind {
        NotPoissonDerivation,  // d_i is not a derivation of the bracket on D
        NonCommuting,          // [d_i, d_j] != 0
        NotPoissonCentral,     // {a_i, D} != 0
        CrossDerivation,       // d_i(a_j) != 0 for i != j
    };
    Kind kind;
    std::size_t i;
    std::optional<std::size_t> j;
    std::string detail;
};

const char* to_string(Violation::Kind kind);

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

ValidationReport validate_gwpa(const GWPAData& data);

// Element constructors.
GWPAElement gwpa_zero(const GWPAData& A);
GWPAElement gwpa_constant(const GWPAData& A, const Rational& c);
GWPAElement gwpa_from_base(const GWPAData& A, const Polynomial& lambda);
GWPAElement gwpa_monomial(const GWPAData& A, const Polynomial& lambda, const GradeVector& alpha);
GWPAElement gwpa_x(const GWPAData& A, std::size_t i);
GWPAElement gwpa_y(const GWPAData& A, std::size_t i);

void require_element_of(const GWPAData& A, const GWPAElement& u);

GWPAElement gwpa_mul(const GWPAData& A, const GWPAElement& u, const GWPAElement& v);

enum class BracketStrategy {
    // Leibniz over coefficient and generator-power factors.
    Factored,
    // Leibniz over single generators (base variables, X_i, Y_i) with a
    // recursive binary split of each word.
    Atomic,
};

GWPAElement gwpa_bracket(const GWPAData& A, const GWPAElement& u, const GWPAElement& v,
                         BracketStrategy strategy = BracketStrategy::Factored);

/// Leibniz expansion of {f_1 f_2 ... f_k, v} computed factor by factor, before
/// any product is formed.
GWPAElement gwpa_bracket_of_product(const GWPAData& A, const std::vector<GWPAElement>& factors,
                                    const GWPAElement& v);

struct GeneratorRef {
    enum class Kind { X, Y };
    Kind kind;
    std::size_t index;
};

/// Closed forms for {d, lambda v_alpha} and {X_i or Y_i, lambda v_alpha};
/// an independent check on gwpa_bracket.
GWPAElement bracket_oracle_graded(const GWPAData& A, const std::variant<Polynomial, GeneratorRef>& first,
                                  const Polynomial& lambda, const GradeVector& alpha);

/// Filtration weight deg_D + sum |alpha_i| (maximum over terms).
Degree element_weight(const GWPAElement& u);

std::string render(const GWPAData& A, const GWPAElement& u);

/// Parses the polynomial grammar over the base variables and the X/Y
/// generator names, reducing X_i Y_i to a_i.
GWPAElement parse_element(const GWPAData& A, std::string_view text);

}  // namespace gwpa
