#include "croc/sparse_matrix.hpp"

#include <algorithm>

namespace croc {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw Error("negative matrix dimension");
}

void SparseMatrix::check_range(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error("matrix index out of range");
}

void SparseMatrix::add(int r, int c, const Rational& v)
{
    check_range(r, c);
    if (v == 0)
        return;
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0)
            entries_.erase(it);
    }
}

void SparseMatrix::set(int r, int c, const Rational& v)
{
    check_range(r, c);
    auto key = std::make_pair(r, c);
    if (v == 0)
        entries_.erase(key);
    else
        entries_[key] = v;
}

Rational SparseMatrix::get(int r, int c) const
{
    check_range(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error("matrix shape mismatch in multiply");
    SparseMatrix out(rows_, rhs.cols_);
    // Group rhs by row for the join.
    std::vector<std::vector<std::pair<int, Rational>>> rhs_rows(rhs.rows_);
    for (const auto& [rc, v] : rhs.entries_)
        rhs_rows[rc.first].emplace_back(rc.second, v);
    for (const auto& [rc, v] : entries_)
        for (const auto& [c2, w] : rhs_rows[rc.second])
            out.add(rc.first, c2, v * w);
    return out;
}

int SparseMatrix::rank() const
{
    // Row-oriented exact elimination.
    std::vector<std::map<int, Rational>> row(rows_);
    for (const auto& [rc, v] : entries_)
        row[rc.first][rc.second] = v;

    std::vector<bool> used(rows_, false);
    int rank = 0;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = 0; r < rows_; ++r) {
            if (used[r])
                continue;
            auto it = row[r].find(col);
            if (it != row[r].end()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        used[pivot] = true;
        ++rank;
        const Rational pv = row[pivot][col];
        for (int r = 0; r < rows_; ++r) {
            if (used[r] && r != pivot)
                continue;
            if (r == pivot)
                continue;
            auto it = row[r].find(col);
            if (it == row[r].end())
                continue;
            Rational factor = it->second / pv;
            for (const auto& [c, v] : row[pivot]) {
                Rational& target = row[r][c];
                target -= factor * v;
                if (target == 0)
                    row[r].erase(c);
            }
        }
    }
    return rank;
}

} // namespace croc
