#ifndef CROC_SPARSE_MATRIX_HPP
#define CROC_SPARSE_MATRIX_HPP

#include "croc/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace croc {

/// Sparse exact-rational matrix. No zero entry is ever stored.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Adds v to entry (r, c); erases the entry when the sum vanishes.
    void add(int r, int c, const Rational& v);
    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    SparseMatrix multiply(const SparseMatrix& rhs) const;

    /// Rank over the rationals. Exact Gaussian elimination, pivot chosen as
    /// the lowest row index in the least unresolved column, so the pivot
    /// sequence is a deterministic function of the input.
    int rank() const;

    bool operator==(const SparseMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    void check_range(int r, int c) const;

    int rows_, cols_;
    std::map<std::pair<int, int>, Rational> entries_;
};

} // namespace croc

#endif
