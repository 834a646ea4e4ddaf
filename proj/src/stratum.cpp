#include "croc/stratum.hpp"

#include <algorithm>
#include <functional>

namespace croc {

namespace {

int max_level(const std::vector<int>& levels)
{
    int m = -1;
    for (int v : levels)
        m = std::max(m, v);
    return m;
}

} // namespace

StratumType::StratumType(Profile profile, std::vector<int> levels)
    : profile_(std::move(profile)), levels_(std::move(levels))
{
    if (int(levels_.size()) != profile_.gap_count())
        throw Error("level vector size does not match gap count of " + profile_.str());
    if (levels_.empty())
        throw Error("stratum needs at least one gap");
    int top = max_level(levels_);
    std::vector<bool> seen(top + 1, false);
    for (int v : levels_) {
        if (v < 0)
            throw Error("negative gap level");
        seen[v] = true;
    }
    for (bool b : seen)
        if (!b)
            throw Error("level map is not onto an initial segment 0..d-1");
    scales_ = top + 1;
}

int StratumType::level_of(const GapIndex& g) const
{
    auto gaps = profile_.gaps();
    for (size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i] == g)
            return levels_[i];
    throw Error("gap index not present in profile");
}

bool StratumType::operator<(const StratumType& o) const
{
    if (scales_ != o.scales_)
        return scales_ < o.scales_;
    if (levels_ != o.levels_)
        return levels_ < o.levels_;
    return profile_ < o.profile_;
}

int dim_stratum(const StratumType& s)
{
    return int(s.levels().size()) - s.scale_count();
}

namespace {

/// Group sizes visible at one scale on one line of one original block.
/// Line 1 collapses gaps above the scale and splits below it; line 2 is dual.
std::vector<int> block_groups(int block_size, const std::vector<int>& gap_levels, int scale,
                              int line)
{
    std::vector<int> groups;
    int visible = 1;
    for (int g = 0; g < block_size - 1; ++g) {
        int lv = gap_levels[g];
        bool collapse = (line == 1) ? (lv > scale) : (lv < scale);
        bool split = (line == 1) ? (lv < scale) : (lv > scale);
        if (collapse)
            continue;
        if (split) {
            groups.push_back(visible);
            visible = 1;
        } else {
            ++visible; // gap exactly at this scale stays a visible gap
        }
    }
    groups.push_back(visible);
    return groups;
}

} // namespace

std::vector<Snapshot> snapshots(const StratumType& s)
{
    const Profile& p = s.profile();
    // Split the flat level vector back into per-block slices.
    std::vector<std::vector<int>> lower_levels(p.lower().size()), upper_levels(p.upper().size());
    {
        size_t idx = 0;
        for (size_t g = 0; g < p.lower().size(); ++g)
            for (int q = 0; q + 1 < p.lower()[g]; ++q)
                lower_levels[g].push_back(s.levels()[idx++]);
        for (size_t g = 0; g < p.upper().size(); ++g)
            for (int q = 0; q + 1 < p.upper()[g]; ++q)
                upper_levels[g].push_back(s.levels()[idx++]);
    }
    std::vector<Snapshot> out;
    for (int c = 0; c < s.scale_count(); ++c) {
        std::vector<int> lower, upper;
        for (size_t g = 0; g < p.lower().size(); ++g) {
            auto groups = block_groups(p.lower()[g], lower_levels[g], c, 1);
            lower.insert(lower.end(), groups.begin(), groups.end());
        }
        for (size_t g = 0; g < p.upper().size(); ++g) {
            auto groups = block_groups(p.upper()[g], upper_levels[g], c, 2);
            upper.insert(upper.end(), groups.begin(), groups.end());
        }
        out.push_back({c, Profile(std::move(lower), std::move(upper))});
    }
    return out;
}

std::vector<int> level_gap_positions(const StratumType& s, int level)
{
    std::vector<int> out;
    for (int i = 0; i < int(s.levels().size()); ++i)
        if (s.levels()[i] == level)
            out.push_back(i);
    return out;
}

std::vector<StratumType> enumerate_strata(const Profile& p)
{
    if (!p.geometric())
        throw Error("profile " + p.str() + " has no gaps; nothing to stratify");
    const int gaps = p.gap_count();
    std::vector<StratumType> out;
    std::vector<int> levels(gaps, 0);
    for (int d = 1; d <= gaps; ++d) {
        std::function<void(int)> rec = [&](int i) {
            if (i == gaps) {
                std::vector<bool> seen(d, false);
                for (int v : levels)
                    seen[v] = true;
                if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
                    out.emplace_back(p, levels);
                return;
            }
            for (int v = 0; v < d; ++v) {
                levels[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Codim1Stratum> codim1_strata(const Profile& p)
{
    if (dim_profile(p) < 1)
        throw Error("profile " + p.str() + " has no codimension-1 strata");
    std::vector<Codim1Stratum> out;
    for (const StratumType& s : enumerate_strata(p)) {
        if (s.scale_count() != 2)
            continue;
        auto sn = snapshots(s);
        out.push_back({s, sn[0].profile, sn[1].profile});
    }
    return out;
}

std::vector<StratumType> boundary_incidences(const StratumType& s)
{
    std::vector<StratumType> out;
    const int d = s.scale_count();
    for (int c = 0; c < d; ++c) {
        std::vector<int> at = level_gap_positions(s, c);
        const int k = int(at.size());
        if (k < 2)
            continue;
        // Proper nonempty bipartitions: bit set means the gap moves up to c+1.
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<int> levels = s.levels();
            for (int& v : levels)
                if (v > c)
                    ++v;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i))
                    levels[at[i]] = c + 1;
            out.emplace_back(s.profile(), std::move(levels));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Scale at which t splits one level set of s, or -1 when t does not refine s.
int split_scale(const StratumType& s, const StratumType& t)
{
    if (s.profile() != t.profile() || t.scale_count() != s.scale_count() + 1)
        return -1;
    const auto& sl = s.levels();
    const auto& tl = t.levels();
    for (int v = 0; v + 1 < t.scale_count(); ++v) {
        bool ok = true;
        bool low = false, high = false;
        for (size_t i = 0; i < sl.size(); ++i) {
            int merged = tl[i] > v ? tl[i] - 1 : tl[i];
            if (merged != sl[i]) {
                ok = false;
                break;
            }
            if (tl[i] == v)
                low = true;
            if (tl[i] == v + 1)
                high = true;
        }
        if (ok && low && high)
            return v;
    }
    return -1;
}

} // namespace

int incidence_sign(const StratumType& s, const StratumType& t)
{
    int c = split_scale(s, t);
    if (c < 0)
        throw Error("incidence_sign: second stratum does not refine the first by one level");
    // Local data of the split inside the scale-c snapshot factor.
    std::vector<int> at = level_gap_positions(s, c);
    int size_a = 0;
    long inversions = 0;
    // at is in canonical gap order, which is also the canonical gap order of
    // the snapshot profile, so ranks within `at` are the local gap indices.
    for (size_t ia = 0; ia < at.size(); ++ia) {
        if (t.levels()[at[ia]] == c) { // member of A (stays at scale c)
            ++size_a;
            for (size_t ib = 0; ib < ia; ++ib)
                if (t.levels()[at[ib]] == c + 1)
                    ++inversions; // b in B with smaller local index
        }
    }
    int sign = ((size_a + inversions) % 2 == 0) ? 1 : -1;
    // Crossing factor: the split replaces the scale-c factor of the ordered
    // product of snapshots; the boundary direction moves past the scales
    // below c.
    auto sn = snapshots(s);
    int below = 0;
    for (int cc = 0; cc < c; ++cc)
        below += dim_profile(sn[cc].profile);
    if (below % 2 != 0)
        sign = -sign;
    return sign;
}

bool composable(const Profile& x, const Profile& y)
{
    return int(x.lower().size()) == y.lower_points() &&
           int(y.upper().size()) == x.upper_points();
}

Profile compose_profile(const Profile& x, const Profile& y)
{
    if (!composable(x, y))
        throw Error("profiles " + x.str() + " and " + y.str() + " do not compose");
    std::vector<int> lower, upper;
    size_t idx = 0;
    for (int block : y.lower()) {
        int sum = 0;
        for (int i = 0; i < block; ++i)
            sum += x.lower()[idx++];
        lower.push_back(sum);
    }
    idx = 0;
    for (int block : x.upper()) {
        int sum = 0;
        for (int j = 0; j < block; ++j)
            sum += y.upper()[idx++];
        upper.push_back(sum);
    }
    return Profile(std::move(lower), std::move(upper));
}

std::optional<ProductStratum> find_product_stratum(const Profile& x, const Profile& y)
{
    if (!composable(x, y))
        return std::nullopt;
    Profile ambient = compose_profile(x, y);

    std::vector<int> levels;
    bool has0 = false, has1 = false;
    // Line 1: walk each ambient block; its points come from a run of x's lower
    // blocks. Gaps interior to an x-block are collapsing (level 1), gaps
    // between consecutive x-blocks are the surviving finite ones (level 0).
    {
        size_t xi = 0;
        for (int run : y.lower()) {
            for (int r = 0; r < run; ++r) {
                int m = x.lower()[xi++];
                for (int q = 0; q + 1 < m; ++q) {
                    levels.push_back(1);
                    has1 = true;
                }
                if (r + 1 < run) {
                    levels.push_back(0);
                    has0 = true;
                }
            }
        }
    }
    // Line 2: dual picture with y's upper blocks; interior gaps are finite at
    // scale 0 (level 0), separating gaps blow up (level 1).
    {
        size_t yj = 0;
        for (int run : x.upper()) {
            for (int r = 0; r < run; ++r) {
                int n = y.upper()[yj++];
                for (int q = 0; q + 1 < n; ++q) {
                    levels.push_back(0);
                    has0 = true;
                }
                if (r + 1 < run) {
                    levels.push_back(1);
                    has1 = true;
                }
            }
        }
    }
    if (!has0 || !has1)
        return std::nullopt; // degenerate: no genuine codimension-1 stratum
    return ProductStratum{ambient, StratumType(ambient, std::move(levels)), true};
}

} // namespace croc
