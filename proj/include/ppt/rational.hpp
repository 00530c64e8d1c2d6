#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ppt {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    BigInt floor() const {
        BigInt q = num_ / den_;  // truncates toward zero
        if (num_.sign() < 0 && q * den_ != num_) --q;
        return q;
    }

    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_.sign() > 0 && q * den_ != num_) ++q;
        return q;
    }

    Rational operator-() const { return Rational(BigInt(-num_), den_, Canonical{}); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return {BigInt(x.num_ * y.den_ + y.num_ * x.den_), BigInt(x.den_ * y.den_)};
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return {BigInt(x.num_ * y.den_ - y.num_ * x.den_), BigInt(x.den_ * y.den_)};
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return {BigInt(x.num_ * y.num_), BigInt(x.den_ * y.den_)};
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw std::domain_error("rational division by zero");
        return {BigInt(x.num_ * y.den_), BigInt(x.den_ * y.num_)};
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        BigInt lhs = x.num_ * y.den_;
        BigInt rhs = y.num_ * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "num/den", or just "num" for integers.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
            return {BigInt(std::string(s.substr(0, slash))), BigInt(std::string(s.substr(slash + 1)))};
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("not a rational: " + std::string(s));
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    struct Canonical {};
    Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline Rational inverse_power(std::uint64_t p, std::uint64_t e) { return {BigInt(1), big_pow(p, e)}; }

/// Largest k/p^e strictly below lambda: (ceil(lambda p^e) - 1) / p^e.
inline Rational rho(const Rational& lambda, std::uint64_t e, std::uint64_t p) {
    if (lambda.sign() <= 0) throw std::domain_error("rho: lambda must be positive");
    if (e < 1) throw std::domain_error("rho: e must be at least 1");
    BigInt q = big_pow(p, e);
    return {BigInt((lambda * Rational(q)).ceil() - 1), q};
}

/// Smallest e >= 0 with p^e * q integral, or -1 if the reduced denominator is not a power of p.
inline int p_power_exponent(const Rational& q, std::uint64_t p) {
    BigInt d = q.denominator();
    int e = 0;
    while (d != 1) {
        if (d % p != 0) return -1;
        d /= p;
        ++e;
    }
    return e;
}

}  // namespace ppt
