#pragma once

#include <map>
#include <vector>

#include "gwpa/errors.hpp"
#include "gwpa/polynomial.hpp"

namespace gwpa {

// A degree alpha in Z^n.
using GradeVector = std::vector<int>;

GradeVector zero_grade(std::size_t n);
GradeVector unit_grade(std::size_t n, std::size_t i, int sign = 1);
GradeVector operator+(const GradeVector& a, const GradeVector& b);
// sum_i |alpha_i|
int grade_norm(const GradeVector& a);

/// Finite sum of terms lambda * v_alpha, one nonzero polynomial coefficient
/// per degree alpha. The tag keeps commutative (Poisson) and noncommutative
/// (GWA) elements from being mixed up.
template <class Tag>
class GradedElement {
public:
    using TermMap = std::map<GradeVector, Polynomial>;

    GradedElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

    GradedElement(RingPtr ring, std::size_t rank, TermMap terms)
        : ring_(std::move(ring)), rank_(rank), terms_(std::move(terms)) {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
        for (const auto& [alpha, coeff] : terms_) {
            if (alpha.size() != rank_) throw Error(ErrorKind::AlgebraMismatch, "degree has the wrong length");
            require_same_ring(coeff.ring(), ring_);
        }
    }

    static GradedElement monomial(RingPtr ring, GradeVector alpha, Polynomial coeff) {
        const std::size_t rank = alpha.size();
        TermMap t;
        t.emplace(std::move(alpha), std::move(coeff));
        return GradedElement(std::move(ring), rank, std::move(t));
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_homogeneous() const noexcept { return terms_.size() <= 1; }

    Polynomial component(const GradeVector& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Polynomial(ring_) : it->second;
    }

    void require_compatible(const GradedElement& other) const {
        require_same_ring(ring_, other.ring_);
        if (rank_ != other.rank_) throw Error(ErrorKind::AlgebraMismatch, "elements have different ranks");
    }

    GradedElement& operator+=(const GradedElement& other) {
        require_compatible(other);
        for (const auto& [alpha, coeff] : other.terms_) add_term(alpha, coeff);
        return *this;
    }

    GradedElement& operator-=(const GradedElement& other) {
        require_compatible(other);
        for (const auto& [alpha, coeff] : other.terms_) add_term(alpha, -coeff);
        return *this;
    }

    GradedElement& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [alpha, coeff] : terms_) coeff *= c;
        return *this;
    }

    // Adds coeff * v_alpha.
    void add_term(const GradeVector& alpha, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GradedElement operator-() const {
        GradedElement out(*this);
        for (auto& [alpha, coeff] : out.terms_) coeff = -coeff;
        return out;
    }

    bool operator==(const GradedElement& other) const {
        return rank_ == other.rank_ && *ring_ == *other.ring_ && terms_ == other.terms_;
    }

private:
    RingPtr ring_;
    std::size_t rank_;
    TermMap terms_;
};

template <class Tag>
GradedElement<Tag> operator+(GradedElement<Tag> a, const GradedElement<Tag>& b) {
    a += b;
    return a;
}

template <class Tag>
GradedElement<Tag> operator-(GradedElement<Tag> a, const GradedElement<Tag>& b) {
    a -= b;
    return a;
}

template <class Tag>
GradedElement<Tag> operator*(GradedElement<Tag> a, const Rational& c) {
    a *= c;
    return a;
}

template <class Tag>
GradedElement<Tag> operator*(const Rational& c, GradedElement<Tag> a) {
    a *= c;
    return a;
}

struct PoissonTag;
struct WeylTag;

using GWPAElement = GradedElement<PoissonTag>;
using GWAElement = GradedElement<WeylTag>;

/// Shared text form: terms ordered by degree (descending), each written as
/// coefficient monomial * X-part * Y-part, e.g. `2*H*X1^2 - Y1 + H`.
std::string render_graded(const std::map<GradeVector, Polynomial>& terms, const RingPtr& ring,
                          const std::vector<std::string>& x_names, const std::vector<std::string>& y_names);

}  // namespace gwpa
