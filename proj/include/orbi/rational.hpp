#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "orbi/errors.hpp"

namespace orbi {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic over arbitrary-precision integers. Values are
// kept reduced with a positive denominator (the backing cpp_rational keeps
// the canonical form). lcm's over many cone orders must never overflow,
// hence no fixed-width fast path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}      // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ZeroDenominator("rational with zero denominator");
        v_ = Backing(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backing(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw ZeroDenominator("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

private:
    using Backing = boost::multiprecision::cpp_rational;
    explicit Rational(Backing v) : v_(std::move(v)) {}
    Backing v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

} // namespace orbi
