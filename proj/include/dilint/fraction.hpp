#ifndef DILINT_FRACTION_HPP
#define DILINT_FRACTION_HPP

#include <utility>

#include "dilint/errors.hpp"
#include "dilint/poly.hpp"

namespace dilint {

// Reduced rational function over K: gcd(num, den) = 1 and den monic, so
// equal values have identical representations.
template <typename K>
class Fraction {
public:
    Fraction() : num_(Polynomial<K>::zero()), den_(Polynomial<K>::one()) {}
    explicit Fraction(Polynomial<K> num)
        : num_(std::move(num)), den_(Polynomial<K>::one(num_.var())) {}
    Fraction(Polynomial<K> num, Polynomial<K> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    int var() const { return num_.var() != -1 ? num_.var() : den_.var(); }

    bool operator==(const Fraction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    Fraction operator-() const { return Fraction(-num_, den_, already_reduced_tag{}); }

    // The arithmetic below keeps operands reduced and only ever takes gcds
    // against the small cofactors, never against full products.
    Fraction operator+(const Fraction& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_.is_one() && o.den_.is_one()) {
            return Fraction(num_ + o.num_, Polynomial<K>::one(num_.var()), already_reduced_tag{});
        }
        Polynomial<K> g = poly_gcd(den_, o.den_);
        if (g.degree() <= 0) {
            return make_reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        }
        Polynomial<K> b1 = den_.exact_div(g);
        Polynomial<K> d1 = o.den_.exact_div(g);
        Polynomial<K> num = num_ * d1 + o.num_ * b1;
        // any common factor of num and g*b1*d1 divides g
        Polynomial<K> h = poly_gcd(num, g);
        Polynomial<K> den = den_ * d1;
        if (h.degree() > 0) {
            num = num.exact_div(h);
            den = den.exact_div(h);
        }
        return make_reduced(std::move(num), std::move(den));
    }
    Fraction operator-(const Fraction& o) const { return *this + (-o); }

    Fraction operator*(const Fraction& o) const {
        if (is_zero() || o.is_zero()) return Fraction();
        Polynomial<K> g1 = poly_gcd(num_, o.den_);
        Polynomial<K> g2 = poly_gcd(o.num_, den_);
        Polynomial<K> a = g1.degree() > 0 ? num_.exact_div(g1) : num_;
        Polynomial<K> d = g1.degree() > 0 ? o.den_.exact_div(g1) : o.den_;
        Polynomial<K> c = g2.degree() > 0 ? o.num_.exact_div(g2) : o.num_;
        Polynomial<K> b = g2.degree() > 0 ? den_.exact_div(g2) : den_;
        return make_reduced(a * c, b * d);
    }
    Fraction operator/(const Fraction& o) const {
        if (o.is_zero()) throw DomainError("division by zero fraction");
        return *this * o.inverse();
    }

    Fraction inverse() const {
        if (is_zero()) throw DomainError("inverse of zero fraction");
        return make_reduced(den_, num_);
    }

private:
    struct already_reduced_tag {};
    Fraction(Polynomial<K> num, Polynomial<K> den, already_reduced_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    // coprime num/den; only fixes zero and the monic scale
    static Fraction make_reduced(Polynomial<K> num, Polynomial<K> den) {
        if (num.is_zero()) return Fraction();
        if (!den.leading().is_one()) {
            K inv = den.leading().inverse();
            num = num.scale(inv);
            den = den.scale(inv);
        }
        return Fraction(std::move(num), std::move(den), already_reduced_tag{});
    }

    void normalize() {
        if (den_.is_zero()) throw DomainError("fraction with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<K>::one(den_.var());
            return;
        }
        if (den_.is_one()) return;
        if (den_.degree() > 0) {
            Polynomial<K> g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.exact_div(g);
                den_ = den_.exact_div(g);
            }
        }
        if (!den_.leading().is_one()) {
            K inv = den_.leading().inverse();
            num_ = num_.scale(inv);
            den_ = den_.scale(inv);
        }
    }

    Polynomial<K> num_, den_;
};

} // namespace dilint

#endif
