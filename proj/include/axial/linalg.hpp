#pragma once

// Exact linear algebra over Q by fraction-free (integer-row) Gauss-Jordan
// elimination. Systems are given column by column as sparse vectors, which is
// how every decomposition in this library is phrased: the columns are images
// of candidate basis elements under a linear map.

#include "axial/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace axial {

using SparseVector = std::map<std::size_t, Rational>;
using DenseVector = std::vector<Rational>;

/// Assigns consecutive indices to keys on first sight.
template <typename Key>
class Indexer {
public:
    std::size_t operator()(const Key& k) {
        auto [it, inserted] = index_.try_emplace(k, index_.size());
        return it->second;
    }
    std::optional<std::size_t> find(const Key& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return index_.size(); }

private:
    std::map<Key, std::size_t> index_;
};

struct Reduction {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    /// One basis vector per free column: that column set to 1, other free columns 0.
    std::vector<DenseVector> nullspace;
    /// Basic solution per right-hand side (free variables zero). For an
    /// inconsistent system x still solves the pivot equations, so A x - b
    /// exposes the violated relations.
    struct Solution {
        DenseVector x;
        bool consistent = false;
    };
    std::vector<Solution> solutions;
};

/// Row-reduces the matrix whose columns are `columns` (row indices < rows).
/// Pivots are taken left to right, so earlier columns are preferred in the
/// basic solutions.
Reduction reduce(const std::vector<SparseVector>& columns, std::size_t rows,
                 const std::vector<SparseVector>& rhs = {});

/// Rank of the column set.
std::size_t rank_of(const std::vector<SparseVector>& columns, std::size_t rows);

/// Applies the matrix to x (dense, length = columns.size()).
SparseVector apply(const std::vector<SparseVector>& columns, const DenseVector& x);

}  // namespace axial
