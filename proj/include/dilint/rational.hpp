#ifndef DILINT_RATIONAL_HPP
#define DILINT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "dilint/errors.hpp"

namespace dilint {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long long n) : v_(static_cast<long long>(n)) {}
    explicit Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    Rat operator-() const { return Rat(boost::multiprecision::cpp_rational(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(boost::multiprecision::cpp_rational(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(boost::multiprecision::cpp_rational(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(boost::multiprecision::cpp_rational(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DomainError("division by zero");
        return Rat(boost::multiprecision::cpp_rational(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    Rat inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(boost::multiprecision::cpp_rational(1 / v_));
    }

    Rat pow(long e) const {
        if (e == 0) return one();
        Rat base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Rat acc = one();
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // Exact square root, when the value is the square of a rational.
    std::optional<Rat> try_sqrt() const {
        if (is_negative()) return std::nullopt;
        if (is_zero()) return zero();
        BigInt n = numerator(), d = denominator();
        BigInt sn = boost::multiprecision::sqrt(n);
        BigInt sd = boost::multiprecision::sqrt(d);
        if (sn * sn != n || sd * sd != d) return std::nullopt;
        return Rat(sn, sd);
    }

    std::optional<Rat> as_rational() const { return *this; }

    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

} // namespace dilint

#endif
