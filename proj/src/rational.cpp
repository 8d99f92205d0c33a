#include "symquot/rational.hpp"

#include "symquot/errors.hpp"

#include <cctype>
#include <sstream>

namespace symquot {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_integer_token(num))
        throw ValidationError("not a rational: '" + text + "'");
    if (slash == std::string::npos)
        return Rational(Integer(num));
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den))
        throw ValidationError("not a rational: '" + text + "'");
    Integer n(num), d(den);
    if (d == 0)
        throw ValidationError("zero denominator in '" + text + "'");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

} // namespace symquot
