#ifndef CROC_STRATA_POSET_HPP
#define CROC_STRATA_POSET_HPP

#include "croc/chain_complex.hpp"
#include "croc/stratum.hpp"

#include <map>
#include <string>

namespace croc {

/// Closure poset of all strata of one compactified space, with the
/// codimension-1 incidences and (after solve_signs) their boundary signs.
struct StrataPoset {
    Profile profile;
    std::vector<StratumType> strata;               // canonical order
    std::vector<std::pair<int, int>> incidences;   // (coarser, finer) index pairs
    std::map<std::pair<int, int>, int> signs;      // incidence -> +-1, empty until solved

    int index_of(const StratumType& s) const;
};

/// Builds the poset (strata plus incidences) without signs.
StrataPoset build_poset(const Profile& p);

/// Assigns the orientation signs. Checks the diamond property (every
/// two-scale refinement has exactly two intermediate strata) and that the
/// four signs around each diamond multiply to -1; a violated diamond is
/// reported with its witness strata.
StrataPoset solve_signs(StrataPoset poset);

/// Cellular chain complex: degree k generated by the dimension-k strata,
/// boundary from the signed incidences.
ChainComplex chain_complex(const Profile& p);

/// Graphviz rendering of the signed poset.
std::string poset_dot(const StrataPoset& poset);

} // namespace croc

#endif
