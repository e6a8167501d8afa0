#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gwpa/polynomial.hpp"

namespace gwpa {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {x : M x = 0}. Elimination runs over the integers (rows are
/// cleared of denominators, combined cross-multiplied and divided by their
/// content), ending in reduced row echelon form. The basis vector of each
/// free column c has x_c = 1 and is supported on c and pivot columns before c,
/// so the basis is deterministic given the column order.
RationalMatrix nullspace(const RationalMatrix& rows, std::size_t ncols);

/// Rank of a matrix (same elimination).
std::size_t matrix_rank(const RationalMatrix& rows, std::size_t ncols);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<RationalMatrix> matrix_inverse(const RationalMatrix& m);

/// Incrementally grown span of sparse vectors indexed by an ordered key.
template <class Key>
class EchelonSpace {
public:
    using Vector = std::map<Key, Rational>;

    /// Reduces v against the stored rows in place; v is zero afterwards iff
    /// it lay in the span.
    void reduce(Vector& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const Key key = it->first;
            const Rational factor = it->second;
            for (const auto& [k, c] : rows_[p->second]) {
                auto [slot, inserted] = v.try_emplace(k, 0);
                slot->second -= factor * c;
                if (sgn(slot->second) == 0) v.erase(slot);
            }
            it = v.upper_bound(key);
        }
    }

    bool contains(Vector v) const {
        reduce(v);
        return v.empty();
    }

    /// Adds v to the span; returns false if it was already in it.
    bool insert(Vector v) {
        reduce(v);
        if (v.empty()) return false;
        const Rational lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        pivots_.emplace(v.begin()->first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }

private:
    std::vector<Vector> rows_;
    std::map<Key, std::size_t> pivots_;
};

}  // namespace gwpa
