#include "croc/laurent.hpp"

#include <algorithm>
#include <random>

namespace croc {

void LaurentPoly::set(int exponent, const Rational& c)
{
    if (c == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

Rational LaurentPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::leading_exponent() const
{
    if (terms_.empty())
        throw Error("leading exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::leading_coeff() const
{
    if (terms_.empty())
        throw Error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        Rational sum = out.coeff(e) + c;
        out.set(e, sum);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) {
        Rational sum = out.coeff(e) - c;
        out.set(e, sum);
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Rational sum = out.coeff(e1 + e2) + c1 * c2;
            out.set(e1 + e2, sum);
        }
    return out;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent)
{
    LaurentPoly out;
    out.set(exponent, c);
    return out;
}

LaurentConfiguration::LaurentConfiguration(std::vector<LaurentPoly> p_,
                                           std::vector<LaurentPoly> q_)
    : p(std::move(p_)), q(std::move(q_))
{
    lower_blocks = {int(p.size())};
    upper_blocks = {int(q.size())};
    validate();
}

LaurentConfiguration::LaurentConfiguration(std::vector<LaurentPoly> p_,
                                           std::vector<LaurentPoly> q_,
                                           std::vector<int> lower_blocks_,
                                           std::vector<int> upper_blocks_)
    : p(std::move(p_)), q(std::move(q_)), lower_blocks(std::move(lower_blocks_)),
      upper_blocks(std::move(upper_blocks_))
{
    validate();
}

void LaurentConfiguration::validate() const
{
    Profile shape(lower_blocks, upper_blocks); // validates block sizes
    if (shape.lower_points() != int(p.size()) || shape.upper_points() != int(q.size()))
        throw Error("block structure does not match point counts");
    if (p.empty() || q.empty())
        throw Error("configuration needs points on both lines");
    auto check_line = [](const std::vector<LaurentPoly>& pts) {
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            LaurentPoly diff = pts[i + 1] - pts[i];
            if (diff.is_zero())
                throw Error("collapsing configuration: equal adjacent points");
            if (diff.leading_coeff() <= 0)
                throw Error("configuration not eventually ordered left to right");
        }
    };
    check_line(p);
    check_line(q);
}

namespace {

struct LineGaps {
    std::vector<int> within;  // raw levels of within-block gaps, flat order
    std::vector<int> between; // raw levels of block separations
};

LineGaps line_levels(const std::vector<LaurentPoly>& pts, const std::vector<int>& blocks,
                     int line)
{
    LineGaps out;
    size_t idx = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int q = 0; q + 1 < blocks[b]; ++q) {
            LaurentPoly diff = pts[idx + q + 1] - pts[idx + q];
            int e = diff.leading_exponent();
            out.within.push_back(line == 1 ? -e : e);
        }
        idx += blocks[b];
        if (b + 1 < blocks.size()) {
            LaurentPoly diff = pts[idx] - pts[idx - 1];
            int e = diff.leading_exponent();
            out.between.push_back(line == 1 ? -e : e);
        }
    }
    return out;
}

} // namespace

StratumType classify_configuration(const LaurentConfiguration& c)
{
    c.validate();
    Profile shape = c.block_profile();
    if (!shape.geometric())
        throw Error("configuration of " + shape.str() + " has no within-block gaps");

    LineGaps line1 = line_levels(c.p, c.lower_blocks, 1);
    LineGaps line2 = line_levels(c.q, c.upper_blocks, 2);

    std::vector<int> raw = line1.within;
    raw.insert(raw.end(), line2.within.begin(), line2.within.end());
    int lo = *std::min_element(raw.begin(), raw.end());
    int hi = *std::max_element(raw.begin(), raw.end());

    // Frozen separations must dominate every scale in use: a line-1
    // separation is infinite at scale c when its raw level is below c, a
    // line-2 separation when its raw level is above c.
    for (int v : line1.between)
        if (v >= lo)
            throw Error("line-1 block separation does not dominate the within-block scales");
    for (int v : line2.between)
        if (v <= hi)
            throw Error("line-2 block separation does not dominate the within-block scales");

    // Order-type quotient: relabel the occupied levels to 0..d-1.
    std::vector<int> occupied = raw;
    std::sort(occupied.begin(), occupied.end());
    occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
    std::vector<int> levels;
    levels.reserve(raw.size());
    for (int v : raw)
        levels.push_back(
            int(std::lower_bound(occupied.begin(), occupied.end(), v) - occupied.begin()));
    return StratumType(shape, std::move(levels));
}

LaurentConfiguration sample_stratum(const StratumType& s, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 7), den(1, 3);
    auto coeff = [&]() { return rat(num(rng), den(rng)); };

    const Profile& shape = s.profile();
    int top = s.scale_count() - 1;
    int sep = top + 2; // block separations above every level in use

    std::vector<LaurentPoly> p, q;
    size_t idx = 0;
    auto build_line = [&](const std::vector<int>& blocks, int line,
                          std::vector<LaurentPoly>& pts) {
        LaurentPoly pos;
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (b > 0)
                pos = pos + LaurentPoly::monomial(coeff(), sep);
            for (int j = 0; j < blocks[b]; ++j) {
                if (j > 0) {
                    int lv = s.levels()[idx++];
                    pos = pos + LaurentPoly::monomial(coeff(), line == 1 ? -lv : lv);
                }
                pts.push_back(pos);
            }
        }
    };
    build_line(shape.lower(), 1, p);
    build_line(shape.upper(), 2, q);
    return LaurentConfiguration(std::move(p), std::move(q), shape.lower(), shape.upper());
}

LaurentConfiguration g3_act(const LaurentPoly& a, const LaurentPoly& b, const Rational& scale,
                            int scale_exponent, const LaurentConfiguration& c)
{
    if (scale <= 0)
        throw Error("dilation must have positive coefficient");
    LaurentPoly lambda = LaurentPoly::monomial(scale, scale_exponent);
    LaurentPoly lambda_inv = LaurentPoly::monomial(1 / scale, -scale_exponent);
    LaurentConfiguration out = c;
    for (auto& x : out.p)
        x = lambda * x + a;
    for (auto& y : out.q)
        y = lambda_inv * y + b;
    out.validate();
    return out;
}

} // namespace croc
