#ifndef CROC_CHAIN_COMPLEX_HPP
#define CROC_CHAIN_COMPLEX_HPP

#include "croc/sparse_matrix.hpp"

#include <map>
#include <optional>

namespace croc {

/// Witness for a failed d.d = 0 check: degree and offending basis column.
struct ComplexFailure {
    int degree;
    int basis_index;
};

/// Graded exact-rational complex. `lowering` means each boundary maps
/// degree d to degree d-1 (chain convention); otherwise d to d+1.
struct ChainComplex {
    std::map<int, int> ranks;            // degree -> component rank
    std::map<int, SparseMatrix> boundaries; // degree d -> matrix out of degree d
    bool lowering = true;

    int rank_at(int d) const
    {
        auto it = ranks.find(d);
        return it == ranks.end() ? 0 : it->second;
    }

    /// Shape consistency of all boundary matrices.
    void validate_shapes() const;
};

struct HomologySummary {
    std::map<int, int> betti; // only nonzero entries are stored

    int betti_at(int d) const
    {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    bool operator==(const HomologySummary& o) const { return betti == o.betti; }
};

/// True iff all consecutive compositions vanish; otherwise the first failure.
std::optional<ComplexFailure> check_complex(const ChainComplex& c);

/// Betti numbers over the rationals. Throws (with the witness degree in the
/// message) when the input is not a complex.
HomologySummary homology(const ChainComplex& c);

} // namespace croc

#endif
