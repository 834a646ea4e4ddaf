#include "croc/rational.hpp"

namespace croc {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw Error("empty rational literal");
    try {
        Rational q(text);
        if (q.get_den() == 0)
            throw Error("rational with zero denominator: " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + text);
    }
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace croc
