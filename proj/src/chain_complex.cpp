#include "croc/chain_complex.hpp"

namespace croc {

void ChainComplex::validate_shapes() const
{
    for (const auto& [d, m] : boundaries) {
        int src = rank_at(d);
        int dst = rank_at(lowering ? d - 1 : d + 1);
        if (m.cols() != src || m.rows() != dst)
            throw Error("boundary shape mismatch at degree " + std::to_string(d));
    }
}

std::optional<ComplexFailure> check_complex(const ChainComplex& c)
{
    c.validate_shapes();
    for (const auto& [d, m] : c.boundaries) {
        int next = c.lowering ? d + 1 : d - 1;
        auto it = c.boundaries.find(next);
        if (it == c.boundaries.end())
            continue;
        SparseMatrix prod = m.multiply(it->second);
        if (!prod.is_zero()) {
            int col = prod.entries().begin()->first.second;
            return ComplexFailure{next, col};
        }
    }
    return std::nullopt;
}

HomologySummary homology(const ChainComplex& c)
{
    if (auto fail = check_complex(c))
        throw Error("not a complex: d.d != 0 at degree " + std::to_string(fail->degree) +
                    ", basis element " + std::to_string(fail->basis_index));
    auto boundary_rank = [&](int d) -> int {
        auto it = c.boundaries.find(d);
        return it == c.boundaries.end() ? 0 : it->second.rank();
    };
    HomologySummary out;
    for (const auto& [d, n] : c.ranks) {
        int into = boundary_rank(c.lowering ? d + 1 : d - 1);
        int outof = boundary_rank(d);
        int b = n - into - outof;
        if (b < 0)
            throw Error("negative betti number: internal rank bookkeeping bug");
        if (b != 0)
            out.betti[d] = b;
    }
    return out;
}

} // namespace croc
