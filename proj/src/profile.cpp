#include "croc/profile.hpp"

#include <numeric>
#include <sstream>

namespace croc {

Profile::Profile(std::vector<int> lower, std::vector<int> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.empty() || upper_.empty())
        throw Error("profile needs at least one block on each line");
    for (int m : lower_)
        if (m < 1)
            throw Error("profile block sizes must be positive");
    for (int n : upper_)
        if (n < 1)
            throw Error("profile block sizes must be positive");
}

int Profile::lower_points() const
{
    return std::accumulate(lower_.begin(), lower_.end(), 0);
}

int Profile::upper_points() const
{
    return std::accumulate(upper_.begin(), upper_.end(), 0);
}

int Profile::gap_count() const
{
    return total_points() - int(lower_.size()) - int(upper_.size());
}

std::vector<GapIndex> Profile::gaps() const
{
    std::vector<GapIndex> out;
    for (int g = 0; g < int(lower_.size()); ++g)
        for (int p = 0; p + 1 < lower_[g]; ++p)
            out.push_back({1, g, p});
    for (int g = 0; g < int(upper_.size()); ++g)
        for (int p = 0; p + 1 < upper_[g]; ++p)
            out.push_back({2, g, p});
    return out;
}

std::string Profile::str() const
{
    std::ostringstream os;
    auto emit = [&os](const std::vector<int>& v) {
        os << '(';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i)
                os << ',';
            os << v[i];
        }
        os << ')';
    };
    emit(lower_);
    os << ';';
    emit(upper_);
    return os.str();
}

int dim_profile(const Profile& p)
{
    if (!p.geometric())
        throw Error("profile " + p.str() + " has no gaps; no configuration space");
    return p.gap_count() - 1;
}

Profile parse_profile(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch)))
            s += ch;
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> Error {
        return Error("profile parse error at '" + s.substr(pos) + "': " + what);
    };
    auto parse_list = [&]() {
        if (pos >= s.size() || s[pos] != '(')
            throw fail("expected '('");
        ++pos;
        std::vector<int> v;
        while (true) {
            size_t start = pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (pos == start)
                throw fail("expected block size");
            v.push_back(std::stoi(s.substr(start, pos - start)));
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (pos >= s.size() || s[pos] != ')')
            throw fail("expected ')'");
        ++pos;
        return v;
    };
    std::vector<int> lower = parse_list();
    if (pos >= s.size() || s[pos] != ';')
        throw fail("expected ';'");
    ++pos;
    std::vector<int> upper = parse_list();
    if (pos != s.size())
        throw fail("trailing input");
    return Profile(lower, upper);
}

} // namespace croc
