#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace ncfree {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator, so structural equality is value equality.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a reduced rational.
inline Scalar parse_scalar(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-')
        throw invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw invalid_argument("zero denominator in '" + std::string(text) + "'");
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Scalar pow(const Scalar& base, unsigned exponent) {
    Scalar result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

} // namespace ncfree
