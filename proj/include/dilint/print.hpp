#ifndef DILINT_PRINT_HPP
#define DILINT_PRINT_HPP

#include <string>
#include <vector>

#include "dilint/constant.hpp"
#include "dilint/tower.hpp"

namespace dilint {

// Canonical text: polynomials print in ascending degree with a fixed term
// order, fractions as num/den, parentheses only where the grammar needs
// them.  Equal values always print identically.

namespace detail {

enum Prec { PREC_ATOM = 0, PREC_POW = 1, PREC_NEG = 2, PREC_PROD = 3, PREC_SUM = 4 };

struct Printed {
    std::string text;
    int prec;
};

inline Printed print_rat(const Rat& r) {
    std::string s = r.str();
    int prec = PREC_ATOM;
    if (!r.is_integer()) prec = PREC_PROD;
    if (r.is_negative()) prec = std::max(prec, static_cast<int>(PREC_NEG));
    return {s, prec};
}

inline std::string parenthesize(const Printed& p, int max_prec) {
    if (p.prec > max_prec) return "(" + p.text + ")";
    return p.text;
}

template <typename K, typename Rec>
Printed print_poly(const Polynomial<K>& p, const std::string& var, Rec rec) {
    if (p.is_zero()) return {"0", PREC_ATOM};
    std::vector<Printed> terms;
    for (int k = 0; k <= p.degree(); ++k) {
        const K& c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string power;
        if (k == 1) {
            power = var;
        } else if (k >= 2) {
            power = var + "^" + std::to_string(k);
        }
        if (k == 0) {
            terms.push_back(rec(c));
        } else if (c.is_one()) {
            terms.push_back({power, k >= 2 ? PREC_POW : PREC_ATOM});
        } else if ((-c).is_one()) {
            terms.push_back({"-" + power, PREC_NEG});
        } else {
            Printed cp = rec(c);
            terms.push_back({parenthesize(cp, PREC_PROD) + "*" + power, PREC_PROD});
        }
    }
    if (terms.size() == 1) return terms[0];
    std::string out = terms[0].text;
    for (size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i].text;
        if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return {out, PREC_SUM};
}

template <typename K, typename Rec>
Printed print_fraction(const Fraction<K>& f, const std::string& var, Rec rec) {
    Printed num = print_poly(f.num(), var, rec);
    if (f.den().is_one()) return num;
    Printed den = print_poly(f.den(), var, rec);
    return {parenthesize(num, PREC_PROD) + "/" + parenthesize(den, PREC_POW), PREC_PROD};
}

Printed print_constant(const Constant& c);

inline Printed print_constant(const Constant& c) {
    if (c.is_rational()) return print_rat(c.rational());
    std::string var = SymbolTable::instance().name(c.top_symbol());
    return print_fraction(c.fraction(), var,
                          [](const Constant& k) { return print_constant(k); });
}

Printed print_element(const Element& e);

inline std::string generator_display(const NodePtr& node) {
    switch (node->gen.kind) {
        case GenKind::Indeterminate:
            return node->gen.name;
        case GenKind::Log:
            return "log(" + print_element(node->gen.arg).text + ")";
        case GenKind::Exp:
            return "exp(" + print_element(node->gen.arg).text + ")";
        case GenKind::Dilog:
            return "dilog(" + print_element(node->gen.arg).text + ")";
        case GenKind::Li:
            return "li(" + print_element(node->gen.arg).text + ")";
        case GenKind::Erf:
            return "erf(" + print_element(node->gen.arg).text + ")";
    }
    return "?";
}

inline Printed print_element(const Element& e) {
    if (e.is_const_level()) return print_constant(e.const_value());
    std::string var = generator_display(e.node());
    return print_fraction(e.fraction(), var,
                          [](const Element& k) { return print_element(k); });
}

} // namespace detail

inline std::string to_text(const Rat& r) { return detail::print_rat(r).text; }
inline std::string to_text(const Constant& c) { return detail::print_constant(c).text; }
inline std::string to_text(const Element& e) { return detail::print_element(e).text; }

inline std::string to_text(const Polynomial<Element>& p, const std::string& var) {
    return detail::print_poly(p, var, [](const Element& k) { return detail::print_element(k); }).text;
}

inline std::string generator_name(const NodePtr& node) { return detail::generator_display(node); }

} // namespace dilint

#endif
