#pragma once

#include <gmpxx.h>

#include <string>

#include "evoalg/errors.hpp"

namespace evoalg {

using BigInt = mpz_class;
using BigRational = mpq_class;

// mpq_class does not reduce fractions built from separate numerator and
// denominator, so all construction from parts goes through here to keep the
// invariant gcd(|num|, den) = 1, den >= 1.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

// Accepts "a/b" or "a"; used by the JSON readers and tests.
inline BigRational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(BigInt(s), 1);
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + s);
    }
}

// Serialized form is always "num/den", including integers ("2/1", "0/1"),
// so the JSON schema stays uniform.
inline std::string rational_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string int_string(const BigInt& z) { return z.get_str(); }

}  // namespace evoalg
