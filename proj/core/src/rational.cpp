#include "grassbal/rational.hpp"

#include <numeric>

namespace grassbal {

namespace checked {

std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw ArithmeticOverflow(std::to_string(x) + " + " + std::to_string(y));
    }
    return r;
}

std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw ArithmeticOverflow(std::to_string(x) + " - " + std::to_string(y));
    }
    return r;
}

std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw ArithmeticOverflow(std::to_string(x) + " * " + std::to_string(y));
    }
    return r;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (den < 0) {
        num = sub(0, num);
        den = sub(0, den);
    }
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (den < 0) {
        num = sub(0, num);
        den = sub(0, den);
    }
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

}  // namespace checked

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked::sub(0, num);
        den = checked::sub(0, den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::int64_t Rational::floor() const { return checked::floor_div(num_, den_); }
std::int64_t Rational::ceil() const { return checked::ceil_div(num_, den_); }

Rational Rational::operator-() const { return Rational(checked::sub(0, num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
    // Scale by lcm to keep intermediates small.
    const std::int64_t g = std::gcd(den_, rhs.den_);
    const std::int64_t left = checked::mul(num_, rhs.den_ / g);
    const std::int64_t right = checked::mul(rhs.num_, den_ / g);
    *this = Rational(checked::add(left, right), checked::mul(den_, rhs.den_ / g));
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    const std::int64_t g1 = std::gcd(num_, rhs.den_);
    const std::int64_t g2 = std::gcd(rhs.num_, den_);
    const std::int64_t n = checked::mul(num_ / g1, rhs.num_ / g2);
    const std::int64_t d = checked::mul(den_ / g2, rhs.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    __extension__ using wide = __int128;
    const wide l = static_cast<wide>(lhs.num_) * rhs.den_;
    const wide r = static_cast<wide>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace grassbal
