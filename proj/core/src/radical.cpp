#include "evoalg/radical.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace evoalg {

namespace {

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

void pollard_split(const BigInt& n, std::map<BigInt, long>& out);

void factor_into(BigInt v, std::map<BigInt, long>& out) {
    if (v <= 1) return;
    if (mpz_probab_prime_p(v.get_mpz_t(), 40)) {
        ++out[v];
        return;
    }
    pollard_split(v, out);
}

// Pollard-Brent rho; only reached for composites that survive trial division,
// which the graph-scale inputs here never produce, but the fallback keeps
// factorize total.
void pollard_split(const BigInt& n, std::map<BigInt, long>& out) {
    for (BigInt c(1);; ++c) {
        BigInt x(2), y(2), d(1);
        auto step = [&](BigInt& t) {
            t = (t * t + c) % n;
        };
        while (d == 1) {
            step(x);
            step(y);
            step(y);
            BigInt diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            if (diff == 0) break;  // cycle without factor; try next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

std::map<BigInt, long> factorize(const BigInt& value) {
    if (value < 1) throw Error("factorize expects a positive integer");
    std::map<BigInt, long> out;
    BigInt v = value;
    for (BigInt p : {BigInt(2), BigInt(3), BigInt(5)}) {
        while (v % p == 0) {
            ++out[p];
            v /= p;
        }
    }
    // 7,11,13,... simple wheel over 6k+-1.
    for (BigInt p(7); p <= 1000000 && p * p <= v;) {
        while (v % p == 0) {
            ++out[p];
            v /= p;
        }
        p += 4;
        while (v % p == 0) {
            ++out[p];
            v /= p;
        }
        p += 2;
    }
    factor_into(v, out);
    return out;
}

RadicalScalar::RadicalScalar(BigRational coeff, Radicals radicals)
    : coeff_(std::move(coeff)), radicals_(std::move(radicals)) {
    normalize();
}

void RadicalScalar::normalize() {
    if (coeff_ == 0) {
        radicals_.clear();
        return;
    }
    for (auto it = radicals_.begin(); it != radicals_.end();) {
        BigRational& e = it->second;
        e.canonicalize();
        // Fold the integer part of the exponent into the coefficient so that
        // 0 < e < 1 remains.
        BigInt z;
        mpz_fdiv_q(z.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
        if (z != 0) {
            e -= BigRational(z);
            e.canonicalize();
            if (z > 0)
                coeff_ *= BigRational(pow_int(it->first, z.get_ui()));
            else {
                BigInt zz = -z;
                coeff_ /= BigRational(pow_int(it->first, zz.get_ui()));
            }
            coeff_.canonicalize();
        }
        if (e == 0)
            it = radicals_.erase(it);
        else
            ++it;
    }
}

RadicalScalar RadicalScalar::root_of(const BigRational& base, const BigRational& exponent) {
    if (base == 0) {
        if (exponent > 0) return RadicalScalar();
        throw Error("0 raised to a non-positive exponent");
    }
    BigRational e = exponent;
    e.canonicalize();

    BigRational sign(1);
    if (base < 0) {
        // Real value only through an odd root: (-x)^(a/b) = (-1)^a x^(a/b),
        // b odd.
        if (e.get_den() % 2 == 0)
            throw Error("even root of a negative number has no real value");
        if (e.get_num() % 2 != 0) sign = -1;
    }

    BigRational mag = abs(base);
    Radicals radicals;
    for (const auto& [p, m] : factorize(mag.get_num()))
        radicals[p] += BigRational(m) * e;
    for (const auto& [p, m] : factorize(mag.get_den()))
        radicals[p] -= BigRational(m) * e;
    return RadicalScalar(sign, std::move(radicals));
}

BigRational RadicalScalar::rational_value() const {
    if (!is_rational()) throw Error("radical scalar is irrational: " + str());
    return coeff_;
}

RadicalScalar RadicalScalar::operator-() const {
    return RadicalScalar(-coeff_, radicals_);
}

RadicalScalar RadicalScalar::operator*(const RadicalScalar& o) const {
    if (is_zero() || o.is_zero()) return RadicalScalar();
    Radicals radicals = radicals_;
    for (const auto& [p, e] : o.radicals_) radicals[p] += e;
    BigRational c = coeff_ * o.coeff_;
    c.canonicalize();
    return RadicalScalar(std::move(c), std::move(radicals));
}

RadicalScalar RadicalScalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Radicals radicals;
    for (const auto& [p, e] : radicals_) radicals[p] = -e;
    return RadicalScalar(BigRational(1) / coeff_, std::move(radicals));
}

RadicalScalar RadicalScalar::pow(const BigRational& e) const {
    BigRational q = e;
    q.canonicalize();
    if (is_zero()) {
        if (q > 0) return RadicalScalar();
        throw Error("0 raised to a non-positive exponent");
    }
    RadicalScalar coeff_part = root_of(coeff_, q);  // handles the sign rules
    Radicals radicals = coeff_part.radicals_;
    for (const auto& [p, ex] : radicals_) radicals[p] += ex * q;
    return RadicalScalar(coeff_part.coeff_, std::move(radicals));
}

std::optional<RadicalScalar> RadicalScalar::nth_root(long m) const {
    if (m < 1) throw Error("nth_root expects m >= 1");
    if (is_zero()) return RadicalScalar();
    if (is_negative() && m % 2 == 0) return std::nullopt;
    return pow(make_rational(1, m));
}

double RadicalScalar::to_double() const {
    double v = coeff_.get_d();
    for (const auto& [p, e] : radicals_)
        v *= std::pow(p.get_d(), e.get_d());
    return v;
}

std::string RadicalScalar::str() const {
    if (is_rational()) return rational_string(coeff_);
    std::ostringstream out;
    out << "(" << rational_string(coeff_) << ")";
    for (const auto& [p, e] : radicals_)
        out << "*" << p.get_str() << "^(" << rational_string(e) << ")";
    return out.str();
}

std::vector<RadicalScalar> solve_power(const RadicalScalar& c, long m) {
    if (m == 0) throw Error("solve_power with zero exponent");
    if (c.is_zero()) throw Error("solve_power with zero right-hand side");
    RadicalScalar rhs = m < 0 ? c.inverse() : c;
    const long mm = m < 0 ? -m : m;
    if (mm % 2 == 1) return {rhs.pow(make_rational(1, mm))};
    if (rhs.is_negative()) return {};
    RadicalScalar r = rhs.pow(make_rational(1, mm));
    return {-r, r};
}

RadicalSum::RadicalSum(const RadicalScalar& s) {
    if (!s.is_zero()) terms_[s.radicals()] = s.coeff();
}

bool RadicalSum::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

BigRational RadicalSum::rational_value() const {
    if (terms_.empty()) return BigRational(0);
    if (!is_rational()) throw Error("radical sum is irrational: " + str());
    return terms_.begin()->second;
}

RadicalScalar RadicalSum::as_scalar() const {
    if (terms_.empty()) return RadicalScalar();
    if (terms_.size() > 1) throw Error("radical sum has several terms: " + str());
    return RadicalScalar(terms_.begin()->second, terms_.begin()->first);
}

RadicalSum RadicalSum::operator+(const RadicalSum& o) const {
    RadicalSum r = *this;
    for (const auto& [sig, c] : o.terms_) {
        auto it = r.terms_.find(sig);
        if (it == r.terms_.end()) {
            r.terms_[sig] = c;
        } else {
            it->second += c;
            it->second.canonicalize();
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum r = *this;
    for (auto& [sig, c] : r.terms_) c = -c;
    return r;
}

RadicalSum RadicalSum::operator-(const RadicalSum& o) const { return *this + (-o); }

RadicalSum RadicalSum::operator*(const RadicalSum& o) const {
    RadicalSum r;
    for (const auto& [sa, ca] : terms_) {
        for (const auto& [sb, cb] : o.terms_) {
            // Signature products can carry rational parts back out
            // (p^(1/2) * p^(1/2) = p), so go through scalar normalization.
            RadicalScalar prod = RadicalScalar(ca, sa) * RadicalScalar(cb, sb);
            r += RadicalSum(prod);
        }
    }
    return r;
}

double RadicalSum::to_double() const {
    double v = 0;
    for (const auto& [sig, c] : terms_) v += RadicalScalar(c, sig).to_double();
    return v;
}

std::string RadicalSum::str() const {
    if (terms_.empty()) return "0/1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [sig, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << RadicalScalar(c, sig).str();
    }
    return out.str();
}

}  // namespace evoalg
