#ifndef CROC_LAURENT_HPP
#define CROC_LAURENT_HPP

#include "croc/stratum.hpp"

#include <cstdint>
#include <map>

namespace croc {

/// Laurent polynomial in one parameter with rational coefficients,
/// read as t -> +infinity.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) { set(0, c); }

    void set(int exponent, const Rational& c);
    Rational coeff(int exponent) const;
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest exponent carrying a nonzero coefficient.
    int leading_exponent() const;
    Rational leading_coeff() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    static LaurentPoly monomial(const Rational& c, int exponent);

private:
    std::map<int, Rational> terms_;
};

/// Two lines of points with Laurent-polynomial positions, eventually ordered
/// left to right on each line. Block structure records the frozen group
/// separations of a multi-index space; single blocks model a plain space.
struct LaurentConfiguration {
    std::vector<LaurentPoly> p; // line 1
    std::vector<LaurentPoly> q; // line 2
    std::vector<int> lower_blocks;
    std::vector<int> upper_blocks;

    LaurentConfiguration() = default;
    LaurentConfiguration(std::vector<LaurentPoly> p_, std::vector<LaurentPoly> q_);
    LaurentConfiguration(std::vector<LaurentPoly> p_, std::vector<LaurentPoly> q_,
                         std::vector<int> lower_blocks_, std::vector<int> upper_blocks_);

    Profile block_profile() const { return Profile(lower_blocks, upper_blocks); }

    /// Checks eventual strict ordering within each block and nonzero
    /// adjacent differences everywhere.
    void validate() const;
};

/// Reads the degeneration type: a line-1 gap with leading exponent a sits at
/// level -a, a line-2 gap with leading exponent b at level b; the common
/// shift and the order type of the occupied levels are quotiented away.
/// Between-block separations must dominate every within-block scale.
StratumType classify_configuration(const LaurentConfiguration& c);

/// A witness configuration for a stratum: within-block gaps are generic
/// positive monomials t^{-level} (line 1) and t^{level} (line 2);
/// between-block separations sit above every level.
LaurentConfiguration sample_stratum(const StratumType& s, uint64_t seed = 1);

/// Action of (a, b, lambda): line 1 maps to lambda p + a, line 2 to
/// lambda^{-1} q + b. lambda must be a monomial with positive coefficient.
LaurentConfiguration g3_act(const LaurentPoly& a, const LaurentPoly& b, const Rational& scale,
                            int scale_exponent, const LaurentConfiguration& c);

} // namespace croc

#endif
