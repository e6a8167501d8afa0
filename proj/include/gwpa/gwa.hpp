#pragma once

/*
 * Generalized Weyl algebras A = D[X, Y; sigma, a] over a commutative
 * polynomial ring D, with affine automorphisms sigma_i.
 *
 * Relations: X_i d = sigma_i(d) X_i, Y_i d = sigma_i^{-1}(d) Y_i,
 * Y_i X_i = a_i, X_i Y_i = sigma_i(a_i); generators of different indices
 * commute. Elements are sums d_alpha v_alpha with coefficients on the left.
 *
 * D carries the weight filtration deg(H_j) = w_j, and v_alpha has degree
 * (1/2) sum_i d_i |alpha_i|. Degrees are stored doubled so they stay integral.
 */

#include <optional>
#include <string>
#include <vector>

#include "gwpa/graded_element.hpp"
#include "gwpa/gwpa.hpp"

namespace gwpa {

/// Ring endomorphism given by images of degree at most one.
class AffineMap {
public:
    AffineMap(RingPtr ring, std::vector<Polynomial> images);

    static AffineMap identity(const RingPtr& ring);
    /// H_var -> H_var + shift, other variables fixed.
    static AffineMap shift(const RingPtr& ring, std::size_t var, const Rational& shift);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }
    const Polynomial& image(std::size_t var) const { return images_.at(var); }

    Polynomial apply(const Polynomial& f) const;
    /// (this o other)(f) = this(other(f)).
    AffineMap compose(const AffineMap& other) const;
    /// Throws NotAffine when the linear part is singular.
    AffineMap inverse() const;
    AffineMap power(int k) const;

    bool operator==(const AffineMap& other) const { return images_ == other.images_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> images_;
};

/// Twice a filtration degree; the zero element has degree minus infinity.
class HalfDegree {
public:
    static HalfDegree minus_infinity() { return HalfDegree(); }
    static HalfDegree from_twice(int twice) { return HalfDegree(twice); }

    bool is_minus_infinity() const noexcept { return !twice_.has_value(); }
    int twice() const { return twice_.value(); }
    /// "1/2", "3", "-inf".
    std::string to_string() const;

    auto operator<=>(const HalfDegree&) const = default;
    bool operator==(const HalfDegree&) const = default;

private:
    HalfDegree() = default;
    explicit HalfDegree(int twice) : twice_(twice) {}
    std::optional<int> twice_;
};

class GWAData {
public:
    /// Validates: affine invertible sigma_i that pairwise commute,
    /// sigma_i(a_j) = a_j for i != j, weights and d_i >= 1, nu >= 1,
    /// a_i of weight exactly d_i, and (sigma_i - 1) lowering the weight of
    /// every variable by at least nu.
    GWAData(RingPtr ring, std::vector<AffineMap> sigmas, std::vector<Polynomial> a, std::vector<int> weights,
            std::vector<int> d, int nu, std::vector<std::string> x_names = {},
            std::vector<std::string> y_names = {});

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return a_.size(); }
    const std::vector<AffineMap>& sigmas() const noexcept { return sigmas_; }
    const AffineMap& sigma(std::size_t i) const { return sigmas_.at(i); }
    const AffineMap& sigma_inverse(std::size_t i) const { return inverses_.at(i); }
    const std::vector<Polynomial>& a() const noexcept { return a_; }
    const Polynomial& a(std::size_t i) const { return a_.at(i); }
    const std::vector<int>& weights() const noexcept { return weights_; }
    const std::vector<int>& d() const noexcept { return d_; }
    int nu() const noexcept { return nu_; }
    const std::vector<std::string>& x_names() const noexcept { return x_names_; }
    const std::vector<std::string>& y_names() const noexcept { return y_names_; }

    /// sigma^alpha = prod_i sigma_i^{alpha_i}.
    AffineMap sigma_power(const GradeVector& alpha) const;

    bool operator==(const GWAData& other) const;

private:
    RingPtr ring_;
    std::vector<AffineMap> sigmas_;
    std::vector<AffineMap> inverses_;
    std::vector<Polynomial> a_;
    std::vector<int> weights_;
    std::vector<int> d_;
    int nu_;
    std::vector<std::string> x_names_;
    std::vector<std::string> y_names_;
};

/// Largest weighted degree sum_j w_j e_j over the terms of f.
Degree weighted_degree(const Polynomial& f, const std::vector<int>& weights);
/// Terms of f of weighted degree exactly w.
Polynomial weighted_part(const Polynomial& f, const std::vector<int>& weights, int w);

GWAElement gwa_zero(const GWAData& A);
GWAElement gwa_constant(const GWAData& A, const Rational& c);
GWAElement gwa_from_base(const GWAData& A, const Polynomial& e);
GWAElement gwa_monomial(const GWAData& A, const Polynomial& e, const GradeVector& alpha);
GWAElement gwa_x(const GWAData& A, std::size_t i);
GWAElement gwa_y(const GWAData& A, std::size_t i);

void require_element_of(const GWAData& A, const GWAElement& u);

GWAElement gwa_mul(const GWAData& A, const GWAElement& u, const GWAElement& v);
GWAElement gwa_commutator(const GWAData& A, const GWAElement& u, const GWAElement& v);

HalfDegree filtration_degree(const GWAData& A, const GWAElement& u);
/// Terms of u of filtration degree exactly twice / 2.
GWAElement filtration_part(const GWAData& A, const GWAElement& u, int twice);

/// gr(D)[X, Y; abar, -partial}: same ring, zero bracket, abar_i the top
/// weight part of a_i, and -partial_i sending H_j to the weight w_j - nu part
/// of (1 - sigma_i)(H_j).
GWPAData predicted_gwpa(const GWAData& A);

/// The leading part of u read in the predicted GWPA by (alpha, monomial)
/// coordinates.
GWPAElement leading_symbol(const GWAData& A, const GWPAData& P, const GWAElement& u);

struct PairCheck {
    std::string u;
    std::string v;
    HalfDegree s = HalfDegree::minus_infinity();
    HalfDegree t = HalfDegree::minus_infinity();
    HalfDegree commutator_degree = HalfDegree::minus_infinity();
    bool drops = true;
    bool matches = true;
    // Filled in only for failing pairs.
    std::string graded_commutator;
    std::string predicted_bracket;
};

struct GrCorrespondenceReport {
    GWPAData predicted;
    ValidationReport validation;
    // The induced maps satisfy Leibniz on products of two generators and on a_i.
    bool derivations_consistent = true;
    std::vector<PairCheck> pairs;
    std::size_t mismatches = 0;
    bool ok = true;
};

/// For each pair: [u, v] has degree <= s + t - nu, and its degree
/// s + t - nu part equals the predicted bracket of the leading symbols.
GrCorrespondenceReport gr_correspondence_check(const GWAData& A,
                                               const std::vector<std::pair<GWAElement, GWAElement>>& pairs);

/// All e * v_alpha with e a base monomial and filtration degree <= twice / 2.
std::vector<GWAElement> gwa_filtration_monomials(const GWAData& A, int twice);

std::string render(const GWAData& A, const GWAElement& u);

/// Reads each monomial of the polynomial grammar over base, X and Y names as
/// coefficient * X-part * Y-part, multiplied in that order.
GWAElement parse_element(const GWAData& A, std::string_view text);

/// Weyl algebra A_n: D = K[H_1..H_n], sigma_i(H_j) = H_j - delta_ij,
/// a_i = H_i, unit weights, d_i = 1, nu = 1.
GWAData gallery_weyl(std::size_t n);
/// U(sl2) as a GWA: D = K[C, H] with weights 2 and 1, sigma(H) = H - 1,
/// a = C - H^2 - H, d = 2, nu = 1.
GWAData gallery_usl2();

}  // namespace gwpa
