#ifndef D0Q_RATIONAL_HPP
#define D0Q_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace d0q {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// height(p/q) = max(|p|, q), with the fraction in lowest terms
inline Integer height(const Rational& r) {
    Integer n = abs(numerator(r));
    Integer d = denominator(r);
    return n > d ? n : d;
}

// Parses "p", "-p", or "p/q".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace d0q

#endif
