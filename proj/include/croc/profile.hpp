#ifndef CROC_PROFILE_HPP
#define CROC_PROFILE_HPP

#include "croc/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace croc {

/// Position of a within-group gap: line 1 indexes lower blocks, line 2 upper
/// blocks; a block of size s carries gaps 0..s-2 between adjacent points.
struct GapIndex {
    int line;  // 1 or 2
    int group; // block index on that line
    int pos;   // adjacent-pair index inside the block

    auto operator<=>(const GapIndex&) const = default;
};

/// A pair of block-size sequences indexing a two-line configuration space
/// or a Hom-tensor component.
class Profile {
public:
    Profile() = default;
    Profile(std::vector<int> lower, std::vector<int> upper);

    const std::vector<int>& lower() const { return lower_; }
    const std::vector<int>& upper() const { return upper_; }

    int lower_points() const;
    int upper_points() const;
    int total_points() const { return lower_points() + upper_points(); }

    /// Within-group gaps, line 1 before line 2, blocks left to right.
    int gap_count() const;
    std::vector<GapIndex> gaps() const;

    /// At least one gap, so the dimension below is defined and nonnegative.
    bool geometric() const { return gap_count() >= 1; }

    /// Unit component: single point above and below.
    bool is_unit() const
    {
        return lower_.size() == 1 && lower_[0] == 1 && upper_.size() == 1 && upper_[0] == 1;
    }

    auto operator<=>(const Profile&) const = default;

    /// "(m1,m2,...);(n1,...)"
    std::string str() const;

private:
    std::vector<int> lower_, upper_;
};

/// Dimension of the configuration space for a geometric profile:
/// total points minus block count minus one. Rejects gap-free profiles.
int dim_profile(const Profile& p);

/// Parses the CLI literal "(m1,m2,...);(n1,...)"; whitespace-insensitive.
Profile parse_profile(const std::string& text);

} // namespace croc

#endif
