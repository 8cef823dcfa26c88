#ifndef DILINT_VALUES_HPP
#define DILINT_VALUES_HPP

#include <optional>

#include "dilint/print.hpp"
#include "dilint/tower.hpp"

namespace dilint {

// Leading coefficient of the numerator, taken recursively down to the
// constant field.  Dividing by it gives the canonical associate used when
// splitting constant factors out of logarithm arguments.
inline Constant recursive_unit(const Element& e) {
    if (e.is_const_level()) return e.const_value();
    return recursive_unit(e.fraction().num().leading());
}

// A logarithm of h as a value.  Constant arguments become named constant
// symbols (log(1) is 0); with strip_unit the argument is normalized to its
// canonical associate and the constant factor contributes a symbol, so
// arguments differing by a constant factor share one generator.
inline Element log_value(Tower& t, const Element& h, bool strip_unit = false) {
    if (h.is_zero()) throw DomainError("log of zero");
    if (is_constant(h)) {
        if (h.is_one()) return Element();
        return Element(Constant::symbol("log(" + to_text(h) + ")"));
    }
    if (strip_unit) {
        Constant u = recursive_unit(h);
        if (!u.is_one()) {
            Element reduced = h / Element(u);
            Element sym(Constant::symbol("log(" + to_text(u) + ")"));
            return sym + Element::generator(t.ensure_log(reduced));
        }
    }
    return Element::generator(t.ensure_log(h));
}

inline Element exp_value(Tower& t, const Element& u) {
    if (is_constant(u)) {
        if (u.is_zero()) return Element(1);
        return Element(Constant::symbol("exp(" + to_text(u) + ")"));
    }
    return Element::generator(t.ensure_exp(u));
}

inline Element dilog_value(Tower& t, const Element& g,
                           std::optional<Element> companion = std::nullopt) {
    if (g.is_zero() || g.is_one()) throw DomainError("dilog argument must avoid 0 and 1");
    if (is_constant(g)) {
        return Element(Constant::symbol("dilog(" + to_text(g) + ")"));
    }
    return Element::generator(t.ensure_dilog(g, std::move(companion)));
}

inline Element li_value(Tower& t, const Element& u) {
    if (is_constant(u)) {
        return Element(Constant::symbol("li(" + to_text(u) + ")"));
    }
    return Element::generator(t.ensure_li(u));
}

inline Element erf_value(Tower& t, const Element& v) {
    if (is_constant(v)) {
        return Element(Constant::symbol("erf(" + to_text(v) + ")"));
    }
    return Element::generator(t.ensure_erf(v));
}

} // namespace dilint

#endif
