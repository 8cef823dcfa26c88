#ifndef DILINT_CONSTANT_HPP
#define DILINT_CONSTANT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dilint/errors.hpp"
#include "dilint/fraction.hpp"
#include "dilint/rational.hpp"

namespace dilint {

// Process-wide registry of named constant symbols.  Symbol ids follow
// interning order; that order fixes the nesting of the constant field.
class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    int intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    std::string name(int id) const {
        std::lock_guard<std::mutex> lock(mutex_);
        return names_.at(static_cast<size_t>(id));
    }

private:
    SymbolTable() = default;
    mutable std::mutex mutex_;
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

// Element of the constant field: a rational function with rational
// coefficients in finitely many constant symbols, kept canonical.  The
// representation nests by symbol id: a value either is a plain rational or
// a reduced fraction in its highest symbol whose coefficients only involve
// lower symbols.  Symbols carry no algebraic relations.
class Constant {
public:
    Constant() : rat_(0) {}
    Constant(int n) : rat_(n) {}
    Constant(const Rat& r) : rat_(r) {}

    static Constant zero() { return Constant(0); }
    static Constant one() { return Constant(1); }

    static Constant symbol(const std::string& name) {
        return symbol_id(SymbolTable::instance().intern(name));
    }
    static Constant symbol_id(int id) {
        Polynomial<Constant> num(std::vector<Constant>{Constant(0), Constant(1)});
        return make(id, Fraction<Constant>(std::move(num)));
    }

    bool is_rational() const { return sym_ < 0; }
    const Rat& rational() const {
        if (!is_rational()) throw DomainError("constant is not a plain rational");
        return rat_;
    }
    int top_symbol() const { return sym_; }
    const Fraction<Constant>& fraction() const { return *frac_; }

    bool is_zero() const { return is_rational() && rat_.is_zero(); }
    bool is_one() const { return is_rational() && rat_.is_one(); }

    bool operator==(const Constant& o) const {
        if (sym_ != o.sym_) return false;
        if (is_rational()) return rat_ == o.rat_;
        return *frac_ == *o.frac_;
    }
    bool operator!=(const Constant& o) const { return !(*this == o); }

    Constant operator-() const {
        if (is_rational()) return Constant(-rat_);
        return make(sym_, -*frac_);
    }
    Constant operator+(const Constant& o) const {
        return binop(*this, o, [](const auto& a, const auto& b) { return a + b; });
    }
    Constant operator-(const Constant& o) const {
        return binop(*this, o, [](const auto& a, const auto& b) { return a - b; });
    }
    Constant operator*(const Constant& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return binop(*this, o, [](const auto& a, const auto& b) { return a * b; });
    }
    Constant operator/(const Constant& o) const {
        if (o.is_zero()) throw DomainError("division by zero constant");
        if (is_zero()) return zero();
        return binop(*this, o, [](const auto& a, const auto& b) { return a / b; });
    }

    Constant inverse() const {
        if (is_zero()) throw DomainError("inverse of zero constant");
        if (is_rational()) return Constant(rat_.inverse());
        return make(sym_, frac_->inverse());
    }

    Constant pow(long e) const {
        if (e == 0) return one();
        Constant base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Constant acc = one();
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    std::optional<Constant> try_sqrt() const {
        if (is_rational()) {
            auto r = rat_.try_sqrt();
            if (!r) return std::nullopt;
            return Constant(*r);
        }
        auto n = frac_->num().try_sqrt();
        auto d = frac_->den().try_sqrt();
        if (!n || !d) return std::nullopt;
        return make_normalized(sym_, Fraction<Constant>(*n, *d));
    }

    // Rational value when no symbols are involved.
    std::optional<Rat> as_rational() const {
        if (is_rational()) return rat_;
        return std::nullopt;
    }

    static Constant from_fraction(int sym, Fraction<Constant> f) {
        return make_normalized(sym, std::move(f));
    }

private:
    static Constant make(int sym, Fraction<Constant> f) {
        Constant c;
        c.sym_ = sym;
        c.frac_ = std::make_shared<const Fraction<Constant>>(std::move(f));
        return c;
    }

    // Collapse fractions that no longer involve the top symbol.
    static Constant make_normalized(int sym, Fraction<Constant> f) {
        if (f.num().degree() <= 0 && f.den().degree() == 0) {
            if (f.num().is_zero()) return zero();
            return f.num()[0];
        }
        return make(sym, std::move(f));
    }

    static Fraction<Constant> lift(const Constant& c) {
        if (c.is_zero()) return Fraction<Constant>();
        return Fraction<Constant>(Polynomial<Constant>(std::vector<Constant>{c}));
    }

    template <typename Op>
    static Constant binop(const Constant& a, const Constant& b, Op op) {
        if (a.is_rational() && b.is_rational()) {
            return Constant(op(a.rat_, b.rat_));
        }
        if (a.sym_ == b.sym_) {
            return make_normalized(a.sym_, op(*a.frac_, *b.frac_));
        }
        if (a.sym_ > b.sym_) {
            return make_normalized(a.sym_, op(*a.frac_, lift(b)));
        }
        return make_normalized(b.sym_, op(lift(a), *b.frac_));
    }

    Rat rat_;
    int sym_ = -1;
    std::shared_ptr<const Fraction<Constant>> frac_;
};

// Accumulates the gcd of all nested rational numerators and the lcm of all
// nested rational denominators.
inline void collect_rat_content(const Constant& c, BigInt& num_gcd, BigInt& den_lcm) {
    if (c.is_rational()) {
        const Rat& r = c.rational();
        if (!r.is_zero()) {
            num_gcd = boost::multiprecision::gcd(num_gcd, r.numerator());
            den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, r.denominator()) * r.denominator();
        }
        return;
    }
    for (const auto& k : c.fraction().num().coeffs()) collect_rat_content(k, num_gcd, den_lcm);
    for (const auto& k : c.fraction().den().coeffs()) collect_rat_content(k, num_gcd, den_lcm);
}

namespace gcd_detail {

struct ConstantLevelView {
    int sym;
    Polynomial<Constant> one_poly() const { return Polynomial<Constant>::one(); }
    Polynomial<Constant> zero_poly() const { return Polynomial<Constant>::zero(); }
    Polynomial<Constant> num(const Constant& c) const {
        if (c.top_symbol() == sym) return c.fraction().num();
        if (c.is_zero()) return zero_poly();
        return Polynomial<Constant>(std::vector<Constant>{c});
    }
    Polynomial<Constant> den(const Constant& c) const {
        if (c.top_symbol() == sym) return c.fraction().den();
        return one_poly();
    }
    Constant make(Polynomial<Constant> p) const {
        return Constant::from_fraction(sym, Fraction<Constant>(std::move(p)));
    }
};

} // namespace gcd_detail

template <>
struct GcdImpl<Constant> {
    static Polynomial<Constant> run(Polynomial<Constant> a, Polynomial<Constant> b) {
        int top = -1;
        for (const auto* p : {&a, &b}) {
            for (const auto& c : p->coeffs()) top = std::max(top, c.top_symbol());
        }
        if (top < 0) {
            while (!b.is_zero()) {
                auto r = a.divmod(b).second;
                a = std::move(b);
                b = std::move(r);
            }
            return a.monic();
        }
        return gcd_detail::structured_prs_gcd(a, b, gcd_detail::ConstantLevelView{top});
    }
};

} // namespace dilint

#endif
