#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwpa/gwpa.hpp"

namespace gwpa {

enum class CentreKind {
    Constants,  // D^d: common kernel of the d_i
    Poisson,    // D_alpha
    Absolute,   // D_[alpha] = Z(D) cap D_alpha; the same space since D is commutative
};

const char* to_string(CentreKind kind);

struct CentreComponent {
    GradeVector degree;
    CentreKind kind = CentreKind::Poisson;
    // Linearly independent; basis[k] has a distinct leading monomial.
    std::vector<Polynomial> basis;
    // Maximal total degree of the coefficients searched.
    int truncation = 0;
};

/// Basis of {f in D : deg f <= d, d_i(f) = 0 for all i}.
CentreComponent constants_basis(const GWPAData& A, int d);

/// Basis of the lambda of degree <= d with lambda v_alpha central:
///   d_i(lambda) = 0,  {lambda, H_j} = lambda sum_i alpha_i d_i(H_j),
///   lambda alpha_i d_i(a_i) = 0.
CentreComponent centre_component(const GWPAData& A, const GradeVector& alpha, int d,
                                 CentreKind kind = CentreKind::Poisson);

/// All monomials of total degree <= d, in ascending graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int d);

enum class VerdictStatus { Holds, Fails, Undecided };

const char* to_string(VerdictStatus status);

struct Evidence {
    std::string summary;
    std::optional<Polynomial> witness;
    std::optional<GradeVector> degree;
    // Set when the verdict rests on a truncated search.
    std::optional<int> bound;
};

struct CriterionVerdict {
    VerdictStatus status = VerdictStatus::Undecided;
    // A verdict that is not exact only covers the searched range.
    bool exact = false;
    Evidence evidence;
};

struct FieldCriterionReport {
    CriterionVerdict characteristic;       // char K = 0
    CriterionVerdict constants_field;      // Z(D)^d is a field
    CriterionVerdict absolute_components;  // D_[alpha] = 0 for alpha != 0
    CriterionVerdict overall;
    int degree_bound = 0;
    int window = 0;
};

/// Decides whether the absolute centre of A is a field, exactly where an
/// analytic argument applies and otherwise up to degree d and |alpha| <= window.
FieldCriterionReport field_criterion(const GWPAData& A, int d, int window);

/// True when the matrix [d_i(H_j)] is constant of rank equal to the number of
/// base variables; then D^d = K.
bool constant_full_rank_jacobian(const GWPAData& A);

struct ClosureReport {
    bool contains_unit = false;
    // Basis of the closed span, in discovery order.
    std::vector<GWPAElement> basis;
    int bound = 0;
    // Elements produced by a closure move and dropped for exceeding the bound.
    std::size_t overflow = 0;
};

/// Smallest span of elements of weight <= d containing gens and closed under
/// multiplication by monomials and brackets with X_i, Y_i, H_j, where an
/// element whose weight exceeds d is dropped as a whole.
ClosureReport poisson_ideal_closure(const GWPAData& A, const std::vector<GWPAElement>& gens, int d);

/// Normal-form monomials H^m v_alpha with deg m + |alpha| <= d.
std::vector<GWPAElement> weight_monomials(const GWPAData& A, int d);

}  // namespace gwpa
