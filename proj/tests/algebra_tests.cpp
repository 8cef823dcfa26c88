#include <catch2/catch_amalgamated.hpp>

#include "dilint/constant.hpp"
#include "dilint/fraction.hpp"
#include "dilint/poly.hpp"
#include "dilint/print.hpp"
#include "dilint/rational.hpp"
#include "dilint/roots.hpp"

#include "test_support.hpp"

using namespace dilint;

namespace {

Polynomial<Element> epoly(std::initializer_list<int> coeffs) {
    std::vector<Element> v;
    for (int c : coeffs) v.emplace_back(c);
    return Polynomial<Element>(std::move(v));
}

Polynomial<Element> linear_factor(const Element& root) {
    return Polynomial<Element>(std::vector<Element>{-root, Element(1)});
}

} // namespace

TEST_CASE("rational arithmetic basics") {
    Rat a(1, 2), b(1, 3);
    CHECK((a + b) == Rat(5, 6));
    CHECK((a * b) == Rat(1, 6));
    CHECK((a / b) == Rat(3, 2));
    CHECK(Rat(4, 8) == Rat(1, 2));
    CHECK(Rat(-2, 4).str() == "-1/2");
    CHECK(Rat(9).try_sqrt().value() == Rat(3));
    CHECK(Rat(9, 4).try_sqrt().value() == Rat(3, 2));
    CHECK(!Rat(2).try_sqrt().has_value());
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("polynomial gcd") {
    SECTION("common factor by construction") {
        auto a = epoly({-1, 0, 1});     // y^2 - 1
        auto b = epoly({1, -2, 1});     // y^2 - 2y + 1
        auto g = poly_gcd(a, b);
        CHECK(g == epoly({-1, 1}));     // y - 1
        // divides both inputs exactly
        CHECK((a.divmod(g).second.is_zero()));
        CHECK((b.divmod(g).second.is_zero()));
    }
    SECTION("unit case") {
        CHECK(poly_gcd(epoly({0, 1}), epoly({1})) == epoly({1}));
    }
    SECTION("verified by exact division of both inputs") {
        auto a = linear_factor(Element(2)) * linear_factor(Element(-3));
        auto b = linear_factor(Element(2)) * linear_factor(Element(5));
        auto g = poly_gcd(a, b);
        CHECK(g == linear_factor(Element(2)));
        CHECK(a.exact_div(g) == linear_factor(Element(-3)));
        CHECK(b.exact_div(g) == linear_factor(Element(5)));
    }
    SECTION("mixed variables are a structural error") {
        auto a = epoly({0, 1});
        auto b = epoly({0, 1});
        auto ta = a; ta.set_var(1);
        auto tb = b; tb.set_var(2);
        CHECK_THROWS_AS(poly_gcd(ta, tb), StructuralError);
    }
}

TEST_CASE("squarefree decomposition") {
    SECTION("constructed input") {
        auto p = linear_factor(Element(1)).pow(2) * linear_factor(Element(-2));
        auto parts = squarefree_decompose(p);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].first == linear_factor(Element(-2)));
        CHECK(parts[0].second == 1);
        CHECK(parts[1].first == linear_factor(Element(1)));
        CHECK(parts[1].second == 2);
    }
    SECTION("single variable") {
        auto parts = squarefree_decompose(epoly({0, 1}));
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].first == epoly({0, 1}));
        CHECK(parts[0].second == 1);
    }
    SECTION("expanded cubic times linear") {
        // expand (y-1)^3 (y+1) first, then decompose
        auto expanded = linear_factor(Element(1)).pow(3) * linear_factor(Element(-1));
        CHECK(expanded == epoly({-1, 2, 0, -2, 1}));  // y^4 - 2y^3 + 2y - 1
        auto parts = squarefree_decompose(expanded);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].first == linear_factor(Element(-1)));
        CHECK(parts[0].second == 1);
        CHECK(parts[1].first == linear_factor(Element(1)));
        CHECK(parts[1].second == 3);
    }
    SECTION("zero polynomial is a domain error") {
        CHECK_THROWS_AS(squarefree_decompose(Polynomial<Element>::zero()), DomainError);
    }
    SECTION("parts are squarefree and pairwise coprime") {
        auto rng = test_rng(101);
        for (int trial = 0; trial < 40; ++trial) {
            Polynomial<Element> p = Polynomial<Element>::one();
            int factors = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < factors; ++i) {
                int root = static_cast<int>(rng() % 7) - 3;
                int mult = 1 + static_cast<int>(rng() % 3);
                p = p * linear_factor(Element(root)).pow(static_cast<unsigned>(mult));
            }
            auto parts = squarefree_decompose(p);
            Polynomial<Element> rebuilt = Polynomial<Element>::one();
            for (size_t i = 0; i < parts.size(); ++i) {
                const auto& [part, mult] = parts[i];
                rebuilt = rebuilt * part.pow(static_cast<unsigned>(mult));
                CHECK(poly_gcd(part, part.formal_derivative()).degree() == 0);
                for (size_t j = i + 1; j < parts.size(); ++j) {
                    CHECK(poly_gcd(part, parts[j].first).degree() == 0);
                }
            }
            CHECK(rebuilt == p.monic());
        }
    }
}

TEST_CASE("polynomial ring laws on random exact inputs") {
    auto rng = test_rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_rat_poly(rng, 4);
        auto b = random_rat_poly(rng, 4);
        auto c = random_rat_poly(rng, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("fraction canonical form") {
    auto x2m1 = epoly({-1, 0, 1});
    auto xm1 = epoly({-1, 1});
    Fraction<Element> f(x2m1, xm1 * epoly({2}));  // (y^2-1)/(2y-2)
    CHECK(f.num() == epoly({1, 1}).scale(Element(Rat(1, 2))));
    CHECK(f.den().is_one());
    SECTION("idempotent normalization") {
        Fraction<Element> again(f.num(), f.den());
        CHECK(again == f);
    }
    SECTION("denominator kept monic") {
        Fraction<Element> g(epoly({1}), epoly({0, 3}));
        CHECK(g.den() == epoly({0, 1}));
        CHECK(g.num() == epoly({1}).scale(Element(Rat(1, 3))));
    }
}

TEST_CASE("constant field") {
    Constant c1 = Constant::symbol("tc_a");
    Constant c2 = Constant::symbol("tc_b");
    SECTION("canonical equality is structural") {
        Constant lhs = (c1 + c2) * (c1 - c2);
        Constant rhs = c1 * c1 - c2 * c2;
        CHECK(lhs == rhs);
    }
    SECTION("field laws on random values") {
        auto rng = test_rng(19);
        for (int trial = 0; trial < 40; ++trial) {
            Constant a = random_constant(rng, {c1, c2});
            Constant b = random_constant(rng, {c1, c2});
            Constant c = random_constant(rng, {c1, c2});
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) CHECK(a / b * b == a);
        }
    }
    SECTION("division by zero") {
        CHECK_THROWS_AS(c1 / (c2 - c2), DomainError);
    }
    SECTION("printing is deterministic") {
        Constant v = (c1 * c2 + Constant(2)) / (c1 - Constant(1));
        CHECK(to_text(v) == to_text((c1 * c2 + Constant(2)) / (c1 - Constant(1))));
    }
}

TEST_CASE("partial fraction expansion") {
    SECTION("textbook split checked by recombination") {
        // 1/(y(y-1)) = -1/y + 1/(y-1)
        Fraction<Element> r(epoly({1}), epoly({0, 1}) * epoly({-1, 1}));
        auto pf = partial_fractions(r, {{Element(0), 1}, {Element(1), 1}});
        CHECK(pf.poly_part.is_zero());
        REQUIRE(pf.terms.size() == 2);
        CHECK(pf.terms[0].root == Element(0));
        CHECK(pf.terms[0].coeff == Element(-1));
        CHECK(pf.terms[1].root == Element(1));
        CHECK(pf.terms[1].coeff == Element(1));
        CHECK(recombine(pf) == r);
    }
    SECTION("polynomial part") {
        // y^2/(y-1) = y + 1 + 1/(y-1)
        Fraction<Element> r(epoly({0, 0, 1}), epoly({-1, 1}));
        auto pf = partial_fractions(r, {{Element(1), 1}});
        CHECK(pf.poly_part == epoly({1, 1}));
        REQUIRE(pf.terms.size() == 1);
        CHECK(pf.terms[0].coeff == Element(1));
        CHECK(recombine(pf) == r);
    }
    SECTION("expansion over prescribed constant poles with higher orders") {
        // H = sum f_pq / (y - a_p)^q shape: all terms constant over constants
        Fraction<Element> h(epoly({3, 1}),
                            linear_factor(Element(2)).pow(2) * linear_factor(Element(-1)));
        auto pf = partial_fractions(h, {{Element(2), 2}, {Element(-1), 1}});
        CHECK(pf.poly_part.is_zero());
        for (const auto& t : pf.terms) {
            CHECK(t.coeff.is_const_level());
            CHECK(t.order >= 1);
        }
        CHECK(recombine(pf) == h);
    }
    SECTION("incomplete factorization names the unsplit factor") {
        Fraction<Element> r(epoly({1}), epoly({0, 1}) * epoly({1, 0, 1}));
        try {
            partial_fractions(r, {{Element(0), 1}});
            FAIL("expected unsplittable error");
        } catch (const UnsplittableError& e) {
            CHECK(e.factor == "1 + y^2");
        }
    }
    SECTION("recombination identity on random inputs") {
        auto rng = test_rng(23);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::pair<Element, int>> roots;
            Polynomial<Element> den = Polynomial<Element>::one();
            int nroots = 1 + static_cast<int>(rng() % 3);
            std::vector<int> used;
            for (int i = 0; i < nroots; ++i) {
                int root;
                do {
                    root = static_cast<int>(rng() % 9) - 4;
                } while (std::find(used.begin(), used.end(), root) != used.end());
                used.push_back(root);
                int mult = 1 + static_cast<int>(rng() % 2);
                roots.emplace_back(Element(root), mult);
                den = den * linear_factor(Element(root)).pow(static_cast<unsigned>(mult));
            }
            auto num = random_rat_poly(rng, den.degree() + 1);
            if (num.is_zero()) num = epoly({1});
            Fraction<Element> r(num, den);
            if (r.den().degree() < den.degree()) continue;  // random numerator hit a root
            auto pf = partial_fractions(r, roots);
            CHECK(recombine(pf) == r);
        }
    }
}

TEST_CASE("root resolution") {
    RootProvider empty;
    SECTION("rational roots") {
        auto p = epoly({2, -3, 1});  // y^2 - 3y + 2
        auto roots = resolve_roots(p, empty);
        REQUIRE(roots.size() == 2);
        // evaluation oracle: every root evaluates to zero
        for (const auto& [root, mult] : roots) {
            CHECK(p.eval(root).is_zero());
            CHECK(mult == 1);
        }
    }
    SECTION("table lookup") {
        RootProvider table;
        Constant i = Constant::symbol("i");
        table.add(epoly({1, 0, 1}), {Element(i), Element(-i)});
        auto roots = resolve_roots(epoly({1, 0, 1}), table);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].first == Element(i));
        CHECK(roots[1].first == Element(-i));
    }
    SECTION("roots in a lower tower level, verified by evaluation") {
        Tower t;
        auto xn = t.ensure_indeterminate("x");
        Element x = Element::generator(xn);
        // (y - x)(y - 2x) over the rational functions in x
        auto p = linear_factor(x) * linear_factor(Element(2) * x);
        auto roots = resolve_roots(p, empty);
        REQUIRE(roots.size() == 2);
        for (const auto& [root, mult] : roots) {
            CHECK(p.eval(root).is_zero());
        }
        CHECK((roots[0].first == x || roots[1].first == x));
    }
    SECTION("multiplicities reconstruct the polynomial") {
        auto p = linear_factor(Element(1)).pow(2) * linear_factor(Element(-2)).pow(3);
        auto roots = resolve_roots(p, empty);
        Polynomial<Element> rebuilt = Polynomial<Element>::one();
        for (const auto& [root, mult] : roots) {
            rebuilt = rebuilt * linear_factor(root).pow(static_cast<unsigned>(mult));
        }
        CHECK(rebuilt == p.monic());
    }
    SECTION("unsplittable error carries the residual factor") {
        try {
            resolve_roots(epoly({-2, 0, 0, 1}), empty);  // y^3 - 2
            FAIL("expected unsplittable error");
        } catch (const UnsplittableError& e) {
            CHECK(e.factor == "-2 + y^3");
        }
    }
}

TEST_CASE("canonical idempotence") {
    auto rng = test_rng(31);
    Constant s = Constant::symbol("tc_c");
    for (int trial = 0; trial < 50; ++trial) {
        Constant a = random_constant(rng, {s});
        Constant copy = a + Constant(0);
        CHECK(copy == a);
        Constant prod = a * Constant(1);
        CHECK(prod == a);
    }
}
