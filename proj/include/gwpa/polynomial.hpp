#pragma once

/*
 * Exact sparse multivariate polynomials over the rationals.
 *
 * A polynomial lives in a PolyRing, which is nothing more than an ordered list
 * of variable names shared by reference. Terms are kept in a map ordered by
 * graded-lex descending (declared variable order), so iteration order is also
 * rendering order. No stored coefficient is ever zero.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gwpa {

using Rational = mpq_class;

std::string to_string(const Rational& q);

class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const PolyRing& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

// Degree of a polynomial; the zero polynomial has degree minus infinity.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    explicit Degree(int value) : value_(value) {}

    bool is_minus_infinity() const noexcept { return !value_.has_value(); }
    int value() const { return value_.value(); }

    auto operator<=>(const Degree&) const = default;
    bool operator==(const Degree&) const = default;

private:
    Degree() = default;
    std::optional<int> value_;
};

struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::uint32_t total_degree() const;
    bool is_one() const;
    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;
};

// Graded-lex comparison: total degree first, then lexicographic in the
// declared variable order.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) == std::strong_ordering::greater;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, TermMap terms);

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);

    const RingPtr& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    Degree degree() const;
    Degree degree_in(std::size_t var) const;
    // Indices of variables that occur with a positive exponent.
    std::vector<std::size_t> support() const;
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(Polynomial f, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial f);

void require_same_ring(const RingPtr& a, const RingPtr& b);

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned k);

Polynomial poly_partial(const Polynomial& f, std::string_view var);
Polynomial partial(const Polynomial& f, std::size_t var);

// Monic gcd of two polynomials in a single variable; gcd(0, 0) = 0.
Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g, std::string_view var);

// Division with remainder for polynomials in one variable.
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult univariate_divide(const Polynomial& f, const Polynomial& g, std::size_t var);

// Exact quotient f / g when g divides f in the polynomial ring.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

Polynomial make_monic(const Polynomial& f);

// Substitute every variable of f by an image of degree at most one.
Polynomial affine_substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images);

// General substitution: images[j] replaces variable j. Images may live in a
// different ring (all images must share it).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target);

// Re-express f in a ring that contains all of f's variables by name.
Polynomial embed(const Polynomial& f, const RingPtr& target);

// Canonical text grammar:
//   expr     := term (('+'|'-') term)*
//   term     := rational? ('*'? var ('^' nat)?)*
//   rational := int ('/' nat)?
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace gwpa
