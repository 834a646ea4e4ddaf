#ifndef CROC_HOM_TENSOR_HPP
#define CROC_HOM_TENSOR_HPP

#include "croc/profile.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace croc {

struct VectorSpaceSpec {
    int dim;
};

/// Leg addressing for a profile's grid of Hom components. Cells are listed
/// row-major (lower block major, upper block minor); a cell of shape
/// (m_i -> n_j) contributes m_i input legs followed by n_j output legs.
class TensorLayout {
public:
    explicit TensorLayout(const Profile& p);

    const Profile& profile() const { return profile_; }
    int cells() const { return int(in_off_.size()); }
    int cell(int i, int j) const { return i * int(profile_.upper().size()) + j; }
    int total_legs() const { return total_; }
    int in_off(int i, int j) const { return in_off_[cell(i, j)]; }
    int out_off(int i, int j) const { return out_off_[cell(i, j)]; }

private:
    Profile profile_;
    std::vector<int> in_off_, out_off_;
    int total_;
};

/// Exact element of the tensor product over all grid cells (i, j) of
/// Hom(V^{m_i}, V^{n_j}). General sums are stored as one coefficient map
/// over joint leg assignments; no zero coefficient is kept.
class HomTensor {
public:
    using Key = std::vector<uint8_t>;

    HomTensor(Profile profile, int dim);

    const Profile& profile() const { return profile_; }
    int dim() const { return dim_; }
    const TensorLayout& layout() const { return layout_; }
    const std::map<Key, Rational>& coeffs() const { return coeffs_; }

    void add(const Key& key, const Rational& v);
    Rational coeff(const Key& key) const;
    bool is_zero() const { return coeffs_.empty(); }

    HomTensor operator+(const HomTensor& o) const;
    HomTensor operator-(const HomTensor& o) const;
    HomTensor scaled(const Rational& c) const;
    bool operator==(const HomTensor& o) const;

private:
    Profile profile_;
    int dim_;
    TensorLayout layout_;
    std::map<Key, Rational> coeffs_;
};

/// Identity map in the unit component ((1);(1)).
HomTensor identity_element(VectorSpaceSpec space);

/// Per-block permutations; lower entries act on input legs of the matching
/// row of cells, upper entries on output legs of the matching column.
struct BlockPermutation {
    std::vector<std::vector<int>> lowerPerms;
    std::vector<std::vector<int>> upperPerms;

    static BlockPermutation trivial(const Profile& p);
};

/// Left action on inputs, right action on outputs. A lower permutation g
/// precomposes each row-i cell with v_1...v_m -> v_{g(1)}...v_{g(m)}; an
/// upper permutation h postcomposes each column-j cell with the same
/// rearrangement on output legs.
HomTensor act_symmetric(const BlockPermutation& g, const BlockPermutation& h,
                        const HomTensor& x);

/// Stacks single-cell tensors sharing the upper width into one row tensor
/// of profile ((m_1,...,m_k);(u)).
HomTensor row_stack(const std::vector<HomTensor>& thetas);
/// Stacks single-cell tensors sharing the lower width into one column tensor
/// of profile ((c);(n_1,...,n_k)).
HomTensor col_stack(const std::vector<HomTensor>& psis);
/// Outer product over a full grid of single-cell tensors; grid[i][j] maps
/// V^{m_i} to V^{n_j}.
HomTensor grid_assemble(const std::vector<std::vector<HomTensor>>& grid);

/// Two-layer composition: the thetas map their blocks into V^{l2}, the
/// rectangular bundle of intermediate legs is transposed, and the psis
/// consume one leg from every theta. Multilinear in every argument.
HomTensor simple_compose(const std::vector<HomTensor>& thetas,
                         const std::vector<HomTensor>& psis);

/// Blockwise composition of composable tensors: output cell (k, l) applies
/// the grid rule to x's cells in rows grouped by y's lower entries and y's
/// cells in columns grouped by x's upper entries. Bilinear.
HomTensor general_compose(const HomTensor& x, const HomTensor& y);

} // namespace croc

#endif
