#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evoalg/rational.hpp"

namespace evoalg {

// Exact real number of the form  coeff * prod_p p^(e_p)  with coeff rational,
// p distinct primes and exponents e_p rational in (0,1), reduced. This covers
// every scalar the witness maps and the scalar-condition solver produce
// (sqrt(deg), cube roots, and the x^(1/m) intermediates of the propagation
// solver, whence arbitrary exponent denominators rather than just {1,2,3,6}).
//
// Canonical form: zero clears the radical part; integer parts of exponents
// are folded into coeff. Equality of canonical forms is exact equality of
// reals: distinct signatures (exponent maps) are linearly independent over Q
// because primes are multiplicatively independent.
class RadicalScalar {
  public:
    using Radicals = std::map<BigInt, BigRational>;

    RadicalScalar() : coeff_(0) {}
    RadicalScalar(const BigRational& q) : coeff_(q) {}
    RadicalScalar(long v) : coeff_(v) {}

    // base^exponent as a real number. base != 0; negative base requires the
    // reduced exponent denominator to be odd (real odd root).
    static RadicalScalar root_of(const BigRational& base, const BigRational& exponent);
    static RadicalScalar sqrt_of(const BigRational& base) {
        return root_of(base, make_rational(1, 2));
    }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return radicals_.empty(); }
    bool is_positive() const { return coeff_ > 0; }
    bool is_negative() const { return coeff_ < 0; }

    const BigRational& coeff() const { return coeff_; }
    const Radicals& radicals() const { return radicals_; }
    BigRational rational_value() const;  // throws Error unless is_rational()

    RadicalScalar operator-() const;
    RadicalScalar operator*(const RadicalScalar& o) const;
    RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }
    RadicalScalar operator/(const RadicalScalar& o) const { return *this * o.inverse(); }
    RadicalScalar inverse() const;  // throws Error on zero

    // this^e; zero base requires e > 0; negative base requires the reduced
    // denominator of e to be odd.
    RadicalScalar pow(const BigRational& e) const;

    // Real m-th root (m >= 1): nullopt when m is even and the value negative.
    std::optional<RadicalScalar> nth_root(long m) const;

    bool operator==(const RadicalScalar&) const = default;

    double to_double() const;
    std::string str() const;  // e.g. "(2/3)*2^(1/2)*3^(5/6)"

  private:
    friend class RadicalSum;
    RadicalScalar(BigRational coeff, Radicals radicals);
    void normalize();

    BigRational coeff_;
    Radicals radicals_;
};

// All real solutions x of x^m = c (c != 0, m != 0): one for odd m, zero or
// two for even m. Sorted ascending by value.
std::vector<RadicalScalar> solve_power(const RadicalScalar& c, long m);

// Finite Q-linear combination of radical signatures; closed under + and *.
// This is where sums like f(e_i)*f(e_j) live during exact verification.
class RadicalSum {
  public:
    using Signature = RadicalScalar::Radicals;

    RadicalSum() = default;
    RadicalSum(const RadicalScalar& s);
    RadicalSum(const BigRational& q) : RadicalSum(RadicalScalar(q)) {}
    RadicalSum(long v) : RadicalSum(RadicalScalar(v)) {}

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    BigRational rational_value() const;       // throws Error unless is_rational()
    bool is_single_term() const { return terms_.size() <= 1; }
    RadicalScalar as_scalar() const;          // throws Error on multi-term sums

    RadicalSum operator+(const RadicalSum& o) const;
    RadicalSum operator-(const RadicalSum& o) const;
    RadicalSum operator-() const;
    RadicalSum operator*(const RadicalSum& o) const;
    RadicalSum& operator+=(const RadicalSum& o) { return *this = *this + o; }
    RadicalSum& operator-=(const RadicalSum& o) { return *this = *this - o; }
    RadicalSum& operator*=(const RadicalSum& o) { return *this = *this * o; }

    bool operator==(const RadicalSum&) const = default;

    const std::map<Signature, BigRational>& terms() const { return terms_; }
    double to_double() const;
    std::string str() const;

  private:
    std::map<Signature, BigRational> terms_;
};

// Prime factorization of a positive integer (trial division + Pollard rho for
// stragglers). Exposed for tests.
std::map<BigInt, long> factorize(const BigInt& value);

}  // namespace evoalg
