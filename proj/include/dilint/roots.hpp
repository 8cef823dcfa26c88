#ifndef DILINT_ROOTS_HPP
#define DILINT_ROOTS_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dilint/print.hpp"
#include "dilint/tower.hpp"

namespace dilint {

// Table of complete root lists for monic squarefree polynomials, keyed by
// the coefficient sequence (variable-agnostic).  Table entries are trusted
// assertions: the kernel checks cardinality and distinctness, but cannot
// check that an asserted root of an irreducible polynomial vanishes, since
// constant symbols carry no algebraic relations.  The built-in finder
// handles linear factors, rational roots, and quadratics whose discriminant
// has an exact square root.
class RootProvider {
public:
    void add(const Polynomial<Element>& poly, std::vector<Element> roots) {
        Polynomial<Element> key = poly.monic();
        if (static_cast<int>(roots.size()) != key.degree()) {
            throw StructuralError("root table entry is not a complete root list");
        }
        for (size_t i = 0; i < roots.size(); ++i) {
            for (size_t j = i + 1; j < roots.size(); ++j) {
                if (roots[i] == roots[j]) throw StructuralError("repeated root in table entry");
            }
        }
        entries_.push_back(Entry{key.coeffs(), std::move(roots)});
    }

    std::optional<std::vector<Element>> lookup(const Polynomial<Element>& p) const {
        Polynomial<Element> key = p.monic();
        for (const auto& e : entries_) {
            if (e.key == key.coeffs()) return e.roots;
        }
        return std::nullopt;
    }

    size_t size() const { return entries_.size(); }

private:
    struct Entry {
        std::vector<Element> key;
        std::vector<Element> roots;
    };
    std::vector<Entry> entries_;
};

namespace detail {

inline std::vector<BigInt> small_divisors(const BigInt& n_in) {
    BigInt n = n_in < 0 ? BigInt(-n_in) : n_in;
    std::vector<BigInt> out;
    if (n == 0) return out;
    // trial division; give up on huge values, the table can take over
    if (n > BigInt("1000000000000")) {
        out.push_back(1);
        if (n != 1) out.push_back(n);
        return out;
    }
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Strips all rational roots of a polynomial with rational coefficients.
inline void strip_rational_roots(Polynomial<Element>& p, std::vector<Element>& roots) {
    std::vector<Rat> rc;
    for (const auto& c : p.coeffs()) {
        auto r = c.as_rational();
        if (!r) return;
        rc.push_back(*r);
    }
    // clear denominators
    BigInt scale = 1;
    for (const auto& r : rc) scale = scale / boost::multiprecision::gcd(scale, r.denominator()) * r.denominator();
    std::vector<BigInt> ic;
    for (const auto& r : rc) ic.push_back(r.numerator() * (scale / r.denominator()));
    while (!ic.empty() && ic.front() == 0) {
        roots.push_back(Element(0));
        ic.erase(ic.begin());
        p = p.exact_div(Polynomial<Element>::identity(p.var()));
    }
    if (ic.size() <= 1) return;
    auto ps = small_divisors(ic.front());
    auto qs = small_divisors(ic.back());
    for (const auto& pp : ps) {
        for (const auto& qq : qs) {
            for (int sign = 0; sign < 2; ++sign) {
                if (p.degree() < 1) return;
                Rat cand(sign ? -pp : pp, qq);
                Element ce(cand);
                if (p.eval(ce).is_zero()) {
                    roots.push_back(ce);
                    p = p.exact_div(Polynomial<Element>(
                        std::vector<Element>{-ce, Element(1)}, p.var()));
                    // the input is squarefree, no repeated roots to re-test
                }
            }
        }
    }
}

inline std::vector<Element> split_squarefree(Polynomial<Element> p, const RootProvider& provider) {
    std::vector<Element> roots;
    p = p.monic();
    while (p.degree() > 0) {
        if (p.degree() == 1) {
            roots.push_back(-p.coeff(0));
            return roots;
        }
        int before = p.degree();
        strip_rational_roots(p, roots);
        if (p.degree() == 0) return roots;
        if (p.degree() == 2) {
            Element b = p.coeff(1), c = p.coeff(0);
            auto disc = (b * b - Element(4) * c).try_sqrt();
            if (disc) {
                Element half = Element(Rat(1, 2));
                roots.push_back((-b + *disc) * half);
                roots.push_back((-b - *disc) * half);
                return roots;
            }
        }
        if (auto table = provider.lookup(p)) {
            for (const auto& r : *table) roots.push_back(r);
            return roots;
        }
        if (p.degree() == before) {
            throw UnsplittableError("cannot split factor", to_text(p, "y"));
        }
    }
    return roots;
}

} // namespace detail

// Complete root list with multiplicities.  Roots found by the built-in
// finder vanish exactly; table roots are returned as asserted.  The list is
// checked for distinctness.
inline std::vector<std::pair<Element, int>> resolve_roots(const Polynomial<Element>& p,
                                                          const RootProvider& provider) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<std::pair<Element, int>> out;
    for (const auto& [part, mult] : squarefree_decompose(p)) {
        for (const auto& r : detail::split_squarefree(part, provider)) {
            out.emplace_back(r, mult);
        }
    }
    for (size_t i = 0; i < out.size(); ++i) {
        for (size_t j = i + 1; j < out.size(); ++j) {
            if (out[i].first == out[j].first) {
                throw StructuralError("root list is not distinct: " + to_text(out[i].first));
            }
        }
    }
    return out;
}

struct PartialFractionTerm {
    Element root;
    int order;      // the term is coeff / (y - root)^order
    Element coeff;
};

struct PartialFractionResult {
    Polynomial<Element> poly_part;
    std::vector<PartialFractionTerm> terms;
};

// Expansion over a supplied complete linear factorization of the
// denominator.  Exact: recombining terms and polynomial part reproduces the
// input, and the top-order coefficient at each root is nonzero.
inline PartialFractionResult partial_fractions(const Fraction<Element>& r,
                                               const std::vector<std::pair<Element, int>>& roots) {
    PartialFractionResult out;
    auto [q, rem] = r.num().divmod(r.den());
    out.poly_part = q;
    if (rem.is_zero()) return out;

    // the supplied factors must rebuild the denominator exactly
    Polynomial<Element> residual = r.den();
    for (const auto& [rho, m] : roots) {
        Polynomial<Element> lin(std::vector<Element>{-rho, Element(1)}, residual.var());
        for (int k = 0; k < m; ++k) {
            auto [qq, rr] = residual.divmod(lin);
            if (!rr.is_zero()) {
                throw UnsplittableError("supplied factorization does not divide the denominator",
                                        to_text(residual, "y"));
            }
            residual = qq;
        }
    }
    if (residual.degree() > 0) {
        throw UnsplittableError("incomplete factorization", to_text(residual, "y"));
    }
    if (!residual.is_one()) {
        throw StructuralError("denominator is not monic after factor removal");
    }

    for (const auto& [rho, m] : roots) {
        Polynomial<Element> lin(std::vector<Element>{-rho, Element(1)}, r.den().var());
        Polynomial<Element> cofactor = r.den().exact_div(lin.pow(static_cast<unsigned>(m)));
        // series of rem/cofactor around y = rho, up to order m
        Polynomial<Element> nshift = rem.taylor_shift(rho);
        Polynomial<Element> dshift = cofactor.taylor_shift(rho);
        Element d0 = dshift.coeff(0);
        std::vector<Element> inv(static_cast<size_t>(m), Element());
        inv[0] = d0.inverse();
        for (int k = 1; k < m; ++k) {
            Element s;
            for (int j = 1; j <= k; ++j) {
                s = s + dshift.coeff(j) * inv[static_cast<size_t>(k - j)];
            }
            inv[static_cast<size_t>(k)] = -s * inv[0];
        }
        for (int j = 0; j < m; ++j) {
            Element c;
            for (int i = 0; i <= j; ++i) {
                c = c + nshift.coeff(i) * inv[static_cast<size_t>(j - i)];
            }
            if (j == 0 && c.is_zero()) {
                throw StructuralError("vanishing top-order coefficient in partial fractions");
            }
            if (!c.is_zero()) {
                out.terms.push_back(PartialFractionTerm{rho, m - j, c});
            }
        }
    }
    return out;
}

// Test oracle helper and reassembly primitive: rebuilds the fraction from
// an expansion.
inline Fraction<Element> recombine(const PartialFractionResult& pf, int var = -1) {
    Fraction<Element> acc{Polynomial<Element>(pf.poly_part)};
    for (const auto& t : pf.terms) {
        Polynomial<Element> lin(std::vector<Element>{-t.root, Element(1)}, var);
        Fraction<Element> term(Polynomial<Element>(std::vector<Element>{t.coeff}, var),
                               lin.pow(static_cast<unsigned>(t.order)));
        acc = acc + term;
    }
    return acc;
}

} // namespace dilint

#endif
