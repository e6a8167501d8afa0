#include "gwpa/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "gwpa/errors.hpp"

namespace gwpa {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::AmbientMismatch: return "ambient mismatch";
        case ErrorKind::UnknownVariable: return "unknown variable";
        case ErrorKind::NotUnivariate: return "not univariate";
        case ErrorKind::MissingImage: return "missing image";
        case ErrorKind::NotAffine: return "not affine";
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::AlgebraMismatch: return "algebra mismatch";
        case ErrorKind::NotPoissonCentral: return "not Poisson central";
        case ErrorKind::JacobiFailure: return "Jacobi identity fails";
        case ErrorKind::NotAntisymmetric: return "bracket matrix not antisymmetric";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Validation: return "validation error";
    }
    return "error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out + "]";
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw Error(ErrorKind::InvalidArgument, "duplicate variable name '" + names_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(std::move(names));
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exponents) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] = exponents[i] + other.exponents[i];
    return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da <=> db;
    return a.exponents <=> b.exponents;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b || *a == *b) return;
    throw Error(ErrorKind::AmbientMismatch,
                "ambient mismatch: " + join_names(a->names()) + " vs " + join_names(b->names()));
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
    for (const auto& [m, c] : terms_) {
        if (m.exponents.size() != ring_->size()) {
            throw Error(ErrorKind::AmbientMismatch, "monomial length does not match the ring");
        }
    }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (sgn(c) != 0) p.terms_.emplace(Monomial(ring->size()), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), *idx);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    Monomial m(ring->size());
    m.exponents.at(index) = 1;
    return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (m.exponents.size() != ring->size()) {
        throw Error(ErrorKind::AmbientMismatch, "monomial length does not match the ring");
    }
    if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(ring_->size())); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Degree Polynomial::degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree(static_cast<int>(terms_.begin()->first.total_degree()));
}

Degree Polynomial::degree_in(std::size_t var) const {
    if (terms_.empty()) return Degree::minus_infinity();
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponents.at(var));
    return Degree(static_cast<int>(d));
}

std::vector<std::size_t> Polynomial::support() const {
    std::vector<bool> seen(ring_->size(), false);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i]) seen[i] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return (ring_ == other.ring_ || *ring_ == *other.ring_) && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        const bool unit = mag == 1;
        std::string mono;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->name(i);
            if (m.exponents[i] > 1) mono += "^" + std::to_string(m.exponents[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (unit) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

Polynomial operator+(Polynomial f, const Polynomial& g) {
    f += g;
    return f;
}

Polynomial operator-(Polynomial f, const Polynomial& g) {
    f -= g;
    return f;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

Polynomial operator*(Polynomial f, const Rational& c) {
    f *= c;
    return f;
}

Polynomial operator*(const Rational& c, Polynomial f) {
    f *= c;
    return f;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    Polynomial::TermMap acc;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            auto [it, inserted] = acc.try_emplace(mf * mg, cf * cg);
            if (!inserted) it->second += cf * cg;
        }
    }
    return Polynomial(f.ring(), std::move(acc));
}

Polynomial pow(const Polynomial& f, unsigned k) {
    Polynomial result = Polynomial::constant(f.ring(), 1);
    Polynomial base = f;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Polynomial partial(const Polynomial& f, std::size_t var) {
    if (var >= f.ring()->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
    Polynomial::TermMap acc;
    for (const auto& [m, c] : f.terms()) {
        const auto e = m.exponents[var];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exponents[var] = e - 1;
        acc.emplace(std::move(dm), c * e);
    }
    return Polynomial(f.ring(), std::move(acc));
}

Polynomial poly_partial(const Polynomial& f, std::string_view var) {
    auto idx = f.ring()->index_of(var);
    if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(var) + "'");
    return partial(f, *idx);
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f * Rational(1 / f.leading_coefficient());
}

namespace {

void require_univariate(const Polynomial& f, std::size_t var) {
    for (auto v : f.support()) {
        if (v != var) {
            throw Error(ErrorKind::NotUnivariate, "polynomial " + f.to_string() + " involves " +
                                                      f.ring()->name(v) + " besides " + f.ring()->name(var));
        }
    }
}

}  // namespace

DivisionResult univariate_divide(const Polynomial& f, const Polynomial& g, std::size_t var) {
    require_same_ring(f.ring(), g.ring());
    require_univariate(f, var);
    require_univariate(g, var);
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    Polynomial q(f.ring());
    Polynomial r = f;
    const auto& lm_g = g.leading_monomial();
    const Rational lc_g = g.leading_coefficient();
    while (!r.is_zero() && r.leading_monomial().exponents[var] >= lm_g.exponents[var]) {
        Monomial shift(f.ring()->size());
        shift.exponents[var] = r.leading_monomial().exponents[var] - lm_g.exponents[var];
        Polynomial t = Polynomial::monomial(f.ring(), shift, r.leading_coefficient() / lc_g);
        q += t;
        r -= t * g;
    }
    return {std::move(q), std::move(r)};
}

Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g, std::string_view var) {
    require_same_ring(f.ring(), g.ring());
    auto idx = f.ring()->index_of(var);
    if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(var) + "'");
    require_univariate(f, *idx);
    require_univariate(g, *idx);
    Polynomial a = f;
    Polynomial b = g;
    while (!b.is_zero()) {
        Polynomial r = univariate_divide(a, b, *idx).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    Polynomial q(f.ring());
    Polynomial r = f;
    const auto& lm_g = g.leading_monomial();
    const Rational lc_g = g.leading_coefficient();
    while (!r.is_zero()) {
        const auto& lm_r = r.leading_monomial();
        Monomial shift(f.ring()->size());
        for (std::size_t i = 0; i < shift.exponents.size(); ++i) {
            if (lm_r.exponents[i] < lm_g.exponents[i]) return std::nullopt;
            shift.exponents[i] = lm_r.exponents[i] - lm_g.exponents[i];
        }
        Polynomial t = Polynomial::monomial(f.ring(), shift, r.leading_coefficient() / lc_g);
        q += t;
        r -= t * g;
    }
    return q;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target) {
    if (images.size() != f.ring()->size()) {
        throw Error(ErrorKind::MissingImage, "substitution needs one image per variable");
    }
    for (const auto& img : images) require_same_ring(img.ring(), target);
    // powers[j][k] = images[j]^k, grown lazily.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t j, std::uint32_t k) -> const Polynomial& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[j]);
        return cache[k];
    };
    Polynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t j = 0; j < m.exponents.size(); ++j) {
            if (m.exponents[j]) term = term * power(j, m.exponents[j]);
        }
        out += term;
    }
    return out;
}

Polynomial affine_substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images) {
    std::vector<Polynomial> ordered;
    ordered.reserve(f.ring()->size());
    RingPtr target;
    for (const auto& name : f.ring()->names()) {
        auto it = images.find(name);
        if (it == images.end()) {
            throw Error(ErrorKind::MissingImage, "no image given for variable '" + name + "'");
        }
        const Degree d = it->second.degree();
        if (!d.is_minus_infinity() && d.value() > 1) {
            throw Error(ErrorKind::NotAffine, "image of '" + name + "' is not affine: " + it->second.to_string());
        }
        if (!target) target = it->second.ring();
        ordered.push_back(it->second);
    }
    if (!target) target = f.ring();
    return substitute(f, ordered, target);
}

Polynomial embed(const Polynomial& f, const RingPtr& target) {
    if (f.ring() == target) return f;
    std::vector<std::size_t> map;
    map.reserve(f.ring()->size());
    for (const auto& name : f.ring()->names()) {
        auto idx = target->index_of(name);
        if (!idx) {
            // Variables that do not occur in f may be dropped.
            map.push_back(std::numeric_limits<std::size_t>::max());
        } else {
            map.push_back(*idx);
        }
    }
    Polynomial::TermMap acc;
    for (const auto& [m, c] : f.terms()) {
        Monomial tm(target->size());
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (!m.exponents[i]) continue;
            if (map[i] == std::numeric_limits<std::size_t>::max()) {
                throw Error(ErrorKind::UnknownVariable,
                            "variable '" + f.ring()->name(i) + "' is not in the target ring");
            }
            tm.exponents[map[i]] = m.exponents[i];
        }
        acc.emplace(std::move(tm), c);
    }
    return Polynomial(target, std::move(acc));
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the canonical grammar.

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial result(ring_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            advance();
        }
        Polynomial t = parse_term();
        result += negative ? -t : t;
        skip_ws();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-') fail(std::string("unexpected character '") + op + "'");
            advance();
            Polynomial next = parse_term();
            if (op == '-') {
                result -= next;
            } else {
                result += next;
            }
            skip_ws();
        }
        return result;
    }

private:
    Polynomial parse_term() {
        skip_ws();
        Rational coeff = 1;
        bool have_any = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_any = true;
        }
        Monomial m(ring_->size());
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const std::size_t save = pos_;
            bool star = false;
            if (peek() == '*') {
                star = true;
                advance();
                skip_ws();
            }
            if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
                if (star) fail("expected a variable after '*'");
                pos_ = save;
                break;
            }
            if (!have_any && star) fail("term cannot start with '*'");
            const std::size_t var_col = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name += peek();
                advance();
            }
            auto idx = ring_->index_of(name);
            if (!idx) fail_at("unknown variable '" + name + "'", var_col, ErrorKind::UnknownVariable);
            std::uint32_t e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                advance();
                skip_ws();
                e = parse_nat();
            }
            m.exponents[*idx] += e;
            have_any = true;
        }
        if (!have_any) fail("expected a term");
        return Polynomial::monomial(ring_, std::move(m), coeff);
    }

    Rational parse_rational() {
        mpz_class num = parse_digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            advance();
            skip_ws();
            const std::size_t col = pos_;
            mpz_class den = parse_digits();
            if (den == 0) fail_at("zero denominator", col, ErrorKind::Parse);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    mpz_class parse_digits() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return mpz_class(digits);
    }

    std::uint32_t parse_nat() {
        const std::size_t col = pos_;
        mpz_class n = parse_digits();
        if (n > std::numeric_limits<std::uint32_t>::max()) fail_at("exponent too large", col, ErrorKind::Parse);
        return static_cast<std::uint32_t>(n.get_ui());
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_, ErrorKind::Parse); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t offset, ErrorKind kind) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        if (kind == ErrorKind::UnknownVariable) {
            throw Error(kind, msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")");
        }
        throw ParseError(msg, line, col);
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace gwpa
