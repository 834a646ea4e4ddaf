#include "croc/strata_poset.hpp"

#include <algorithm>
#include <sstream>

namespace croc {

int StrataPoset::index_of(const StratumType& s) const
{
    auto it = std::lower_bound(strata.begin(), strata.end(), s);
    if (it == strata.end() || !(*it == s))
        throw Error("stratum not in poset");
    return int(it - strata.begin());
}

StrataPoset build_poset(const Profile& p)
{
    StrataPoset poset;
    poset.profile = p;
    poset.strata = enumerate_strata(p);
    for (int i = 0; i < int(poset.strata.size()); ++i)
        for (const StratumType& t : boundary_incidences(poset.strata[i]))
            poset.incidences.emplace_back(i, poset.index_of(t));
    std::sort(poset.incidences.begin(), poset.incidences.end());
    return poset;
}

StrataPoset solve_signs(StrataPoset poset)
{
    for (const auto& [i, j] : poset.incidences)
        poset.signs[{i, j}] = incidence_sign(poset.strata[i], poset.strata[j]);

    // Diamond property and sign consistency. Every coarser/finer pair at
    // distance two must be linked by exactly two chains, and the four signs
    // must multiply to -1; together these are d.d = 0.
    std::vector<std::vector<int>> finer(poset.strata.size());
    for (const auto& [i, j] : poset.incidences)
        finer[i].push_back(j);
    for (int i = 0; i < int(poset.strata.size()); ++i) {
        std::map<int, std::pair<int, int>> routes; // target -> (chain count, sign sum)
        for (int mid : finer[i])
            for (int j : finer[mid]) {
                auto& acc = routes[j];
                acc.first += 1;
                acc.second += poset.signs[{i, mid}] * poset.signs[{mid, j}];
            }
        for (const auto& [j, acc] : routes) {
            if (acc.first != 2)
                throw Error("diamond property fails between strata " + std::to_string(i) +
                            " and " + std::to_string(j) + " of " + poset.profile.str() + ": " +
                            std::to_string(acc.first) + " chains");
            if (acc.second != 0)
                throw Error("inconsistent orientation cycle through strata " + std::to_string(i) +
                            " and " + std::to_string(j) + " of " + poset.profile.str());
        }
    }
    return poset;
}

ChainComplex chain_complex(const Profile& p)
{
    StrataPoset poset = solve_signs(build_poset(p));

    ChainComplex c;
    c.lowering = true;
    std::vector<int> dims(poset.strata.size());
    std::map<int, std::vector<int>> by_dim; // dimension -> stratum indices in order
    for (int i = 0; i < int(poset.strata.size()); ++i) {
        dims[i] = dim_stratum(poset.strata[i]);
        by_dim[dims[i]].push_back(i);
    }
    std::vector<int> position(poset.strata.size());
    for (const auto& [d, list] : by_dim) {
        c.ranks[d] = int(list.size());
        for (int k = 0; k < int(list.size()); ++k)
            position[list[k]] = k;
    }
    for (const auto& [d, list] : by_dim) {
        if (by_dim.find(d - 1) == by_dim.end()) {
            if (d != 0)
                throw Error("dimension gap in strata of " + p.str());
            continue;
        }
        c.boundaries[d] = SparseMatrix(int(by_dim[d - 1].size()), int(list.size()));
    }
    for (const auto& [ij, sign] : poset.signs) {
        int d = dims[ij.first];
        c.boundaries[d].add(position[ij.second], position[ij.first], Rational(sign));
    }
    return c;
}

std::string poset_dot(const StrataPoset& poset)
{
    std::ostringstream os;
    os << "digraph strata {\n";
    for (int i = 0; i < int(poset.strata.size()); ++i) {
        const StratumType& s = poset.strata[i];
        os << "  s" << i << " [label=\"" << s.profile().str() << " / ";
        for (size_t k = 0; k < s.levels().size(); ++k) {
            if (k)
                os << ',';
            os << s.levels()[k];
        }
        os << " / dim " << dim_stratum(s) << "\"];\n";
    }
    for (const auto& [i, j] : poset.incidences) {
        os << "  s" << i << " -> s" << j;
        auto it = poset.signs.find({i, j});
        if (it != poset.signs.end())
            os << " [label=\"" << (it->second > 0 ? "+1" : "-1") << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace croc
