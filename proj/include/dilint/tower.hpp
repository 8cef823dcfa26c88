#ifndef DILINT_TOWER_HPP
#define DILINT_TOWER_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dilint/constant.hpp"
#include "dilint/errors.hpp"
#include "dilint/fraction.hpp"
#include "dilint/poly.hpp"

namespace dilint {

struct TowerNode;
using NodePtr = std::shared_ptr<const TowerNode>;

enum class GenKind { Indeterminate, Log, Exp, Dilog, Li, Erf };

// Field element of a differential tower.  Level 0 is the constant field;
// at level n the element is a reduced fraction in the n-th generator whose
// coefficients live strictly below.  Elements are immutable and always
// stored at their minimal level.
class Element {
public:
    Element() : c_(0) {}
    Element(int n) : c_(n) {}
    Element(const Rat& r) : c_(r) {}
    Element(const Constant& c) : c_(c) {}

    static Element generator(const NodePtr& node);
    static Element from_fraction(const NodePtr& node, Fraction<Element> f);
    static Element from_poly(const NodePtr& node, Polynomial<Element> p) {
        return from_fraction(node, Fraction<Element>(std::move(p)));
    }

    int level() const;
    const NodePtr& node() const { return node_; }
    bool is_const_level() const { return node_ == nullptr; }
    const Constant& const_value() const {
        if (node_) throw DomainError("element is not at constant level");
        return c_;
    }
    const Fraction<Element>& fraction() const {
        if (!node_) throw DomainError("element has no tower fraction");
        return *fr_;
    }

    bool is_zero() const { return !node_ && c_.is_zero(); }
    bool is_one() const { return !node_ && c_.is_one(); }

    bool operator==(const Element& o) const {
        if (node_ != o.node_) return false;
        if (!node_) return c_ == o.c_;
        return *fr_ == *o.fr_;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;

    Element inverse() const;
    Element pow(long e) const {
        if (e == 0) return Element(1);
        Element base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Element acc(1);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    std::optional<Element> try_sqrt() const;

    // Rational value when the element is a symbol-free constant.
    std::optional<Rat> as_rational() const {
        if (node_) return std::nullopt;
        return c_.as_rational();
    }

private:
    template <typename Op>
    static Element binop(const Element& a, const Element& b, Op op);

    Constant c_;
    NodePtr node_;
    std::shared_ptr<const Fraction<Element>> fr_;
};

// One tower generator.
struct Generator {
    GenKind kind;
    std::string name;          // Indeterminate display name
    Element arg;               // defining argument for non-indeterminates
    Element indet_derivative;  // declared derivative of an indeterminate
    Element dilog_companion;   // chosen logarithm of (1 - arg), Dilog only
    NodePtr prereq;            // Li: node of log(arg); Erf: node of exp(-arg^2)
};

struct TowerNode {
    NodePtr parent;
    int level = 0;
    Generator gen;
    mutable std::mutex deriv_mutex;
    mutable std::shared_ptr<const Element> deriv_cache;
};

inline int Element::level() const { return node_ ? node_->level : 0; }

inline bool is_ancestor_or_same(const NodePtr& low, const NodePtr& high) {
    if (!low) return true;
    const TowerNode* p = high.get();
    while (p && p->level >= low->level) {
        if (p == low.get()) return true;
        p = p->parent.get();
    }
    return false;
}

inline Element Element::generator(const NodePtr& node) {
    if (!node) throw StructuralError("null tower node");
    return from_fraction(node,
                         Fraction<Element>(Polynomial<Element>::identity(node->level)));
}

inline Element Element::from_fraction(const NodePtr& node, Fraction<Element> f) {
    if (f.num().degree() <= 0 && f.den().degree() == 0) {
        if (f.num().is_zero()) return Element();
        return f.num()[0];
    }
    Element e;
    e.node_ = node;
    e.fr_ = std::make_shared<const Fraction<Element>>(std::move(f));
    return e;
}

template <typename Op>
inline Element Element::binop(const Element& a, const Element& b, Op op) {
    const NodePtr& na = a.node_;
    const NodePtr& nb = b.node_;
    NodePtr at;
    if (na == nb) {
        if (!na) throw StructuralError("constant-level values reached tower binop");
        at = na;
    } else if (!na || (nb && na->level < nb->level)) {
        if (!is_ancestor_or_same(na, nb)) throw StructuralError("elements from unrelated towers");
        at = nb;
    } else {
        if (!is_ancestor_or_same(nb, na)) throw StructuralError("elements from unrelated towers");
        at = na;
    }
    auto lift = [&](const Element& e) -> Fraction<Element> {
        if (e.node_ == at) return *e.fr_;
        if (e.is_zero()) return Fraction<Element>();
        return Fraction<Element>(
            Polynomial<Element>(std::vector<Element>{e}, at->level));
    };
    return from_fraction(at, op(lift(a), lift(b)));
}

inline Element Element::operator-() const {
    if (!node_) return Element(-c_);
    return from_fraction(node_, -*fr_);
}
inline Element Element::operator+(const Element& o) const {
    if (!node_ && !o.node_) return Element(c_ + o.c_);
    return binop(*this, o, [](const auto& x, const auto& y) { return x + y; });
}
inline Element Element::operator-(const Element& o) const {
    if (!node_ && !o.node_) return Element(c_ - o.c_);
    return binop(*this, o, [](const auto& x, const auto& y) { return x - y; });
}
inline Element Element::operator*(const Element& o) const {
    if (is_zero() || o.is_zero()) return Element();
    if (!node_ && !o.node_) return Element(c_ * o.c_);
    return binop(*this, o, [](const auto& x, const auto& y) { return x * y; });
}
inline Element Element::operator/(const Element& o) const {
    if (o.is_zero()) throw DomainError("division by zero element");
    if (is_zero()) return Element();
    if (!node_ && !o.node_) return Element(c_ / o.c_);
    return binop(*this, o, [](const auto& x, const auto& y) { return x / y; });
}
inline Element Element::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero element");
    if (!node_) return Element(c_.inverse());
    return from_fraction(node_, fr_->inverse());
}

inline std::optional<Element> Element::try_sqrt() const {
    if (!node_) {
        auto c = c_.try_sqrt();
        if (!c) return std::nullopt;
        return Element(*c);
    }
    auto n = fr_->num().try_sqrt();
    auto d = fr_->den().try_sqrt();
    if (!n || !d) return std::nullopt;
    return from_fraction(node_, Fraction<Element>(*n, *d));
}

inline void collect_rat_content(const Element& e, BigInt& num_gcd, BigInt& den_lcm) {
    if (e.is_const_level()) {
        collect_rat_content(e.const_value(), num_gcd, den_lcm);
        return;
    }
    for (const auto& k : e.fraction().num().coeffs()) collect_rat_content(k, num_gcd, den_lcm);
    for (const auto& k : e.fraction().den().coeffs()) collect_rat_content(k, num_gcd, den_lcm);
}

namespace gcd_detail {

struct ElementLevelView {
    NodePtr node;
    Polynomial<Element> one_poly() const { return Polynomial<Element>::one(node->level); }
    Polynomial<Element> zero_poly() const { return Polynomial<Element>::zero(node->level); }
    Polynomial<Element> num(const Element& e) const {
        if (!e.is_const_level() && e.node() == node) return e.fraction().num();
        if (e.is_zero()) return zero_poly();
        return Polynomial<Element>(std::vector<Element>{e}, node->level);
    }
    Polynomial<Element> den(const Element& e) const {
        if (!e.is_const_level() && e.node() == node) return e.fraction().den();
        return one_poly();
    }
    Element make(Polynomial<Element> p) const {
        return Element::from_poly(node, std::move(p));
    }
};

} // namespace gcd_detail

template <>
struct GcdImpl<Element> {
    static Polynomial<Element> run(Polynomial<Element> a, Polynomial<Element> b) {
        NodePtr deepest;
        for (const auto* p : {&a, &b}) {
            for (const auto& c : p->coeffs()) {
                if (!c.is_const_level() && (!deepest || c.node()->level > deepest->level)) {
                    deepest = c.node();
                }
            }
        }
        if (!deepest) {
            while (!b.is_zero()) {
                auto r = a.divmod(b).second;
                a = std::move(b);
                b = std::move(r);
            }
            return a.monic();
        }
        return gcd_detail::structured_prs_gcd(a, b, gcd_detail::ElementLevelView{deepest});
    }
};

Element derive(const Element& e);

inline Element monomial_derivative(const NodePtr& node);

// Derivative of a polynomial in a generator, as an element at that level.
inline Element poly_total_derivative(const NodePtr& node, const Polynomial<Element>& p) {
    std::vector<Element> coeff_derivs;
    coeff_derivs.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) coeff_derivs.push_back(derive(a));
    Element part1 = Element::from_poly(
        node, Polynomial<Element>(std::move(coeff_derivs), node->level));

    if (p.degree() < 1) return part1;
    if (node->gen.kind == GenKind::Exp) {
        // (e^u)' = u' e^u, so theta' carries a factor of theta itself:
        // sum k a_k theta^(k-1) * u' theta = u' * sum k a_k theta^k.
        std::vector<Element> s(p.coeffs().size(), Element());
        for (int k = 1; k <= p.degree(); ++k) s[static_cast<size_t>(k)] = p[static_cast<size_t>(k)] * Element(k);
        Element up = derive(node->gen.arg);
        return part1 + up * Element::from_poly(node, Polynomial<Element>(std::move(s), node->level));
    }
    std::vector<Element> s(p.coeffs().size() - 1, Element());
    for (int k = 1; k <= p.degree(); ++k) s[static_cast<size_t>(k - 1)] = p[static_cast<size_t>(k)] * Element(k);
    Element theta_d = monomial_derivative(node);
    return part1 + theta_d * Element::from_poly(node, Polynomial<Element>(std::move(s), node->level));
}

inline Element derive(const Element& e) {
    if (e.is_const_level()) return Element();
    const NodePtr& node = e.node();
    const Fraction<Element>& fr = e.fraction();
    Element num = Element::from_poly(node, fr.num());
    Element dnum = poly_total_derivative(node, fr.num());
    if (fr.den().is_one()) return dnum;
    Element den = Element::from_poly(node, fr.den());
    Element dden = poly_total_derivative(node, fr.den());
    return (dnum * den - num * dden) / (den * den);
}

inline bool is_constant(const Element& e) {
    if (e.is_const_level()) return true;
    return derive(e).is_zero();
}

inline Element log_derivative(const Element& h) {
    if (h.is_zero()) throw DomainError("log derivative of zero");
    if (h.is_const_level()) return Element();
    return derive(h) / h;
}

inline Element monomial_derivative(const NodePtr& node) {
    std::lock_guard<std::mutex> lock(node->deriv_mutex);
    if (node->deriv_cache) return *node->deriv_cache;
    Element d;
    switch (node->gen.kind) {
        case GenKind::Indeterminate:
            d = node->gen.indet_derivative;
            break;
        case GenKind::Log:
            d = log_derivative(node->gen.arg);
            break;
        case GenKind::Dilog:
            d = -log_derivative(node->gen.arg) * node->gen.dilog_companion;
            break;
        case GenKind::Li:
            d = derive(node->gen.arg) / Element::generator(node->gen.prereq);
            break;
        case GenKind::Erf:
            d = derive(node->gen.arg) * Element::generator(node->gen.prereq);
            break;
        case GenKind::Exp:
            throw StructuralError("exponential derivative is handled inline");
    }
    node->deriv_cache = std::make_shared<const Element>(d);
    return d;
}

// A tower value is a pointer into an immutable chain of generators; the
// ensure_* operations extend the chain at the top and are idempotent on
// structurally equal defining data.
class Tower {
public:
    Tower() = default;

    const NodePtr& top() const { return top_; }
    int height() const { return top_ ? top_->level : 0; }

    std::vector<NodePtr> nodes() const {
        std::vector<NodePtr> out(static_cast<size_t>(height()));
        NodePtr p = top_;
        while (p) {
            out[static_cast<size_t>(p->level - 1)] = p;
            p = p->parent;
        }
        return out;
    }

    NodePtr find_indeterminate(const std::string& name) const {
        for (NodePtr p = top_; p; p = p->parent) {
            if (p->gen.kind == GenKind::Indeterminate && p->gen.name == name) return p;
        }
        return nullptr;
    }

    NodePtr find(GenKind kind, const Element& arg) const {
        for (NodePtr p = top_; p; p = p->parent) {
            if (p->gen.kind == kind && p->gen.arg == arg) return p;
        }
        return nullptr;
    }

    NodePtr ensure_indeterminate(const std::string& name, const Element& derivative = Element(1)) {
        if (NodePtr existing = find_indeterminate(name)) {
            if (!(existing->gen.indet_derivative == derivative)) {
                throw StructuralError("indeterminate '" + name + "' redeclared with a different derivative");
            }
            return existing;
        }
        Generator g;
        g.kind = GenKind::Indeterminate;
        g.name = name;
        g.indet_derivative = derivative;
        return append(std::move(g));
    }

    NodePtr ensure_log(const Element& arg) {
        if (arg.is_zero()) throw DomainError("log of zero");
        if (is_constant(arg)) throw DomainError("log generator needs a nonconstant argument");
        if (NodePtr existing = find(GenKind::Log, arg)) return existing;
        Generator g;
        g.kind = GenKind::Log;
        g.arg = arg;
        return append(std::move(g));
    }

    NodePtr ensure_exp(const Element& arg) {
        if (is_constant(arg)) throw DomainError("exp generator needs a nonconstant argument");
        if (NodePtr existing = find(GenKind::Exp, arg)) return existing;
        Generator g;
        g.kind = GenKind::Exp;
        g.arg = arg;
        return append(std::move(g));
    }

    // The companion, when supplied, must be a logarithm of (1 - g): its
    // derivative is checked against (1-g)'/(1-g) exactly.
    NodePtr ensure_dilog(const Element& g, std::optional<Element> companion = std::nullopt) {
        if (g.is_zero() || g.is_one()) throw DomainError("dilog argument must avoid 0 and 1");
        if (is_constant(g)) throw DomainError("dilog generator needs a nonconstant argument");
        Element one_minus = Element(1) - g;
        Element comp;
        if (companion) {
            if (!(derive(*companion) == log_derivative(one_minus))) {
                throw DomainError("dilog companion is not a logarithm of 1 - argument");
            }
            comp = *companion;
        } else {
            comp = Element::generator(ensure_log(one_minus));
        }
        for (NodePtr p = top_; p; p = p->parent) {
            if (p->gen.kind == GenKind::Dilog && p->gen.arg == g && p->gen.dilog_companion == comp) {
                return p;
            }
        }
        Generator gen;
        gen.kind = GenKind::Dilog;
        gen.arg = g;
        gen.dilog_companion = comp;
        return append(std::move(gen));
    }

    NodePtr ensure_li(const Element& arg) {
        if (is_constant(arg)) throw DomainError("li generator needs a nonconstant argument");
        NodePtr lg = ensure_log(arg);
        if (NodePtr existing = find(GenKind::Li, arg)) return existing;
        Generator g;
        g.kind = GenKind::Li;
        g.arg = arg;
        g.prereq = lg;
        return append(std::move(g));
    }

    NodePtr ensure_erf(const Element& arg) {
        if (is_constant(arg)) throw DomainError("erf generator needs a nonconstant argument");
        NodePtr ex = ensure_exp(-(arg * arg));
        if (NodePtr existing = find(GenKind::Erf, arg)) return existing;
        Generator g;
        g.kind = GenKind::Erf;
        g.arg = arg;
        g.prereq = ex;
        return append(std::move(g));
    }

private:
    NodePtr append(Generator g) {
        auto node = std::make_shared<TowerNode>();
        node->parent = top_;
        node->level = height() + 1;
        node->gen = std::move(g);
        top_ = node;
        return top_;
    }

    NodePtr top_;
};

} // namespace dilint

#endif
