#ifndef CROC_STRATUM_HPP
#define CROC_STRATUM_HPP

#include "croc/profile.hpp"

#include <optional>
#include <vector>

namespace croc {

/// Grouping of the visible points at one scale of a degenerate configuration.
struct Snapshot {
    int scale;
    Profile profile;

    bool operator==(const Snapshot& o) const { return scale == o.scale && profile == o.profile; }
};

/// One stratum of a compactified two-line space: a canonical level on every
/// within-group gap. A line-1 gap at level v shrinks like the (-v)-th power
/// of the scale parameter, a line-2 gap at level w grows like the w-th power;
/// canonical means the occupied levels are exactly 0..d-1.
class StratumType {
public:
    StratumType(Profile profile, std::vector<int> levels);

    const Profile& profile() const { return profile_; }
    /// Levels in canonical gap order (line 1 then line 2, blocks left to right).
    const std::vector<int>& levels() const { return levels_; }
    /// Number of distinct scales d.
    int scale_count() const { return scales_; }

    int level_of(const GapIndex& g) const;

    bool operator==(const StratumType& o) const
    {
        return profile_ == o.profile_ && levels_ == o.levels_;
    }
    /// Canonical order: scale count first, then the level vector.
    bool operator<(const StratumType& o) const;

private:
    Profile profile_;
    std::vector<int> levels_;
    int scales_;
};

/// Dimension of a stratum: gap count minus number of scales.
int dim_stratum(const StratumType& s);

/// The grouped profile visible at each scale, ordered by increasing scale.
/// Original blocks never merge; their separations sit above every scale.
std::vector<Snapshot> snapshots(const StratumType& s);

/// Gaps of snapshot(s, c)'s profile correspond to the level-c gaps of s,
/// in canonical order. Returns those gap positions of s.
std::vector<int> level_gap_positions(const StratumType& s, int level);

/// All canonical level assignments on p's gaps, sorted canonically.
std::vector<StratumType> enumerate_strata(const Profile& p);

/// Codimension-1 strata of the compactified space together with their
/// scale-0 and scale-1 snapshot profiles.
struct Codim1Stratum {
    StratumType stratum;
    Profile factor0; // scale 0
    Profile factor1; // scale 1
};
std::vector<Codim1Stratum> codim1_strata(const Profile& p);

/// All strata one scale finer than s (split one level set in two).
std::vector<StratumType> boundary_incidences(const StratumType& s);

/// Orientation sign of t inside the boundary of s, where t refines s by one
/// level split. Strata are oriented as ordered products of their snapshots
/// (increasing scale), each open piece carrying the log-gap chart orientation
/// with the overall dilation contracted into the first slot. For the split of
/// the top cell into level sets (A, B) this evaluates to
/// (-1)^{|A| + #{(a,b) in A x B : b precedes a in gap order}}, and a split at
/// scale c deeper down picks up the product-orientation crossing factor
/// (-1)^{dim of the scales below c}.
int incidence_sign(const StratumType& s, const StratumType& t);

/// Product stratum of a composable pair of profiles: the unique two-scale
/// stratum of the ambient profile whose scale-1 snapshot is x and scale-0
/// snapshot is y. Empty when the shapes do not compose or the resulting
/// level map would be constant (unit-profile degenerations).
struct ProductStratum {
    Profile ambient;
    StratumType stratum;
    bool sign_ready;
};
std::optional<ProductStratum> find_product_stratum(const Profile& x, const Profile& y);

/// Shape test for composition: x's lower block count matches y's lower point
/// count and y's upper block count matches x's upper point count.
bool composable(const Profile& x, const Profile& y);

/// Ambient profile of a composition: x's lower blocks summed in groups given
/// by y's lower entries; y's upper blocks summed in groups given by x's upper
/// entries. Requires composable(x, y).
Profile compose_profile(const Profile& x, const Profile& y);

} // namespace croc

#endif
