#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "operad_forge/rational.hpp"

namespace operad_forge {

using SparseVector = std::map<int, Scalar>;  // index -> nonzero value

/// Sparse matrix over Q with exact entries. Zero entries are never stored.
/// All rank/kernel computations are exact; see rank() and kernel_basis().
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Scalar& v);
    void add(int r, int c, const Scalar& v);
    Scalar get(int r, int c) const;
    const SparseVector& row(int r) const { return data_[r]; }
    void set_row(int r, SparseVector v);

    long long entry_count() const;
    SparseMatrix transpose() const;

    /// Exact rank via fraction-free (Bareiss) elimination over the
    /// integers after clearing row denominators; pivots are chosen by
    /// column order, first available row. Deterministic.
    int rank() const;

    /// Exact basis of the right null space: rank() + size() = cols().
    /// Vectors come out of the echelon back-substitution with the free
    /// column set in increasing order, so the output is deterministic.
    std::vector<SparseVector> kernel_basis() const;

private:
    int rows_, cols_;
    std::vector<SparseVector> data_;
};

/// Dense row-reduction mod p (p < 2^16 so products fit comfortably).
/// Returns the rank of the matrix over F_p.
int rank_mod_p(std::vector<std::vector<uint32_t>>& m, uint32_t p);

/// Exact rank, fast path: for an integer matrix, rank over F_p is a lower
/// bound for the rank over Q, so a full-rank reduction mod any prime is a
/// proof of full rank over Q. Tries a few primes; falls back to exact
/// Bareiss elimination when the bound is not conclusive.
int exact_rank(const SparseMatrix& m);

}  // namespace operad_forge
