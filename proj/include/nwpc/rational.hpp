#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nwpc {

/// Exact rational number. All solver state (weights, penalties, duals, LP
/// tableaus) lives in this type; there are no numeric tolerances anywhere.
using Rational = boost::multiprecision::mpq_rational;

using BigInt = boost::multiprecision::mpz_int;

/// Canonical text form: "num/den", or just "num" when the denominator is 1.
inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "num", "-num" or "num/den". Throws std::invalid_argument on junk.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "': " + e.what());
    }
}

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

/// Fixed-point decimal rendering, truncated toward zero. Used for the
/// human-readable report columns; deterministic by construction.
inline std::string rat_to_decimal(const Rational& r, int digits = 6) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale / den;
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string f = frac.str();
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    std::string out = whole.str() + "." + f;
    if (neg && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

/// Exact conversion of a double (finite) to a rational.
inline Rational rational_from_double(double x) {
    if (!(x == x) || x > 1e300 || x < -1e300)
        throw std::invalid_argument("rational_from_double: not finite");
    return Rational(x);
}

/// min over optional rationals where std::nullopt acts as +infinity.
inline std::optional<Rational> opt_min(const std::optional<Rational>& a,
                                       const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace nwpc
