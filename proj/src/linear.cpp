#include "gwpa/linear.hpp"

#include "gwpa/errors.hpp"

namespace gwpa {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow clear_denominators(const std::vector<Rational>& row) {
    mpz_class l = 1;
    for (const auto& q : row) l = lcm(l, q.get_den());
    IntRow out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
    return out;
}

void divide_by_content(IntRow& row) {
    mpz_class g = 0;
    for (const auto& x : row) {
        if (x != 0) g = gcd(g, x);
    }
    if (g > 1) {
        for (auto& x : row) x /= g;
    }
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon reduce_rows(const RationalMatrix& input, std::size_t ncols) {
    std::vector<IntRow> m;
    m.reserve(input.size());
    for (const auto& r : input) {
        if (r.size() != ncols) throw Error(ErrorKind::InvalidArgument, "matrix row has the wrong length");
        m.push_back(clear_denominators(r));
    }
    Echelon e;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ncols && next < m.size(); ++c) {
        std::size_t piv = next;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[next]);
        if (m[next][c] < 0) {
            for (auto& x : m[next]) x = -x;
        }
        divide_by_content(m[next]);
        const mpz_class p = m[next][c];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == next || m[r][c] == 0) continue;
            const mpz_class f = m[r][c];
            for (std::size_t k = 0; k < ncols; ++k) m[r][k] = p * m[r][k] - f * m[next][k];
            divide_by_content(m[r]);
        }
        e.pivot_cols.push_back(c);
        ++next;
    }
    m.resize(next);
    e.rows = std::move(m);
    return e;
}

}  // namespace

RationalMatrix nullspace(const RationalMatrix& rows, std::size_t ncols) {
    Echelon e = reduce_rows(rows, ncols);
    std::vector<int> pivot_row(ncols, -1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) pivot_row[e.pivot_cols[r]] = static_cast<int>(r);
    RationalMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (pivot_row[f] >= 0) continue;
        std::vector<Rational> v(ncols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
            const auto& row = e.rows[r];
            if (row[f] == 0) continue;
            Rational q(row[f], row[e.pivot_cols[r]]);
            q.canonicalize();
            v[e.pivot_cols[r]] = -q;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t matrix_rank(const RationalMatrix& rows, std::size_t ncols) {
    return reduce_rows(rows, ncols).pivot_cols.size();
}

std::optional<RationalMatrix> matrix_inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
        a[r][n + r] = 1;
    }
    // Gauss-Jordan over the rationals; n is the number of base variables.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out[r][c] = a[r][n + c];
    }
    return out;
}

}  // namespace gwpa
