#ifndef DILINT_POLY_HPP
#define DILINT_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dilint/errors.hpp"
#include "dilint/rational.hpp"

namespace dilint {

// Dense univariate polynomial over an exact field K.  Coefficients are
// stored in ascending degree and trailing zeros are trimmed, so equal
// polynomials have identical representations.  `var` is an optional
// variable tag; combining two polynomials with distinct tags is a
// structural error.
template <typename K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(K c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Polynomial(std::vector<K> coeffs, int var = -1)
        : coeffs_(std::move(coeffs)), var_(var) {
        trim();
    }

    static Polynomial zero(int var = -1) { return Polynomial(std::vector<K>{}, var); }
    static Polynomial one(int var = -1) { return Polynomial(std::vector<K>{K(1)}, var); }
    static Polynomial identity(int var = -1) {
        return Polynomial(std::vector<K>{K(0), K(1)}, var);
    }

    int var() const { return var_; }
    void set_var(int v) { var_ = v; }

    // degree() is -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    const std::vector<K>& coeffs() const { return coeffs_; }
    const K& operator[](size_t k) const { return coeffs_[k]; }

    K coeff(int k) const {
        if (k < 0 || k > degree()) return K(0);
        return coeffs_[static_cast<size_t>(k)];
    }
    const K& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<K> r;
        r.reserve(coeffs_.size());
        for (const auto& c : coeffs_) r.push_back(-c);
        return Polynomial(std::move(r), var_);
    }

    Polynomial operator+(const Polynomial& o) const {
        int v = merged_var(o);
        std::vector<K> r(std::max(coeffs_.size(), o.coeffs_.size()), K(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] + o.coeffs_[i];
        return Polynomial(std::move(r), v);
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        int v = merged_var(o);
        if (is_zero() || o.is_zero()) return zero(v);
        std::vector<K> r(coeffs_.size() + o.coeffs_.size() - 1, K(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                r[i + j] = r[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return Polynomial(std::move(r), v);
    }

    Polynomial scale(const K& c) const {
        if (c.is_zero()) return zero(var_);
        std::vector<K> r;
        r.reserve(coeffs_.size());
        for (const auto& a : coeffs_) r.push_back(a * c);
        return Polynomial(std::move(r), var_);
    }

    // Multiply by the k-th power of the variable.
    Polynomial shift_up(int k) const {
        if (is_zero()) return *this;
        std::vector<K> r(static_cast<size_t>(k), K(0));
        r.insert(r.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(r), var_);
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = one(var_);
        Polynomial base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Quotient and remainder; requires a nonzero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        int v = merged_var(d);
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        Polynomial rem = *this;
        if (degree() < d.degree()) return {zero(v), rem};
        std::vector<K> q(static_cast<size_t>(degree() - d.degree() + 1), K(0));
        K lead_inv = d.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            K c = rem.leading() * lead_inv;
            q[static_cast<size_t>(k)] = c;
            rem = rem - d.scale(c).shift_up(k);
        }
        return {Polynomial(std::move(q), v), rem};
    }

    Polynomial exact_div(const Polynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw DomainError("inexact polynomial division");
        return q;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        if (leading().is_one()) return *this;
        return scale(leading().inverse());
    }

    // d/dvar, treating coefficients as constants.
    Polynomial formal_derivative() const {
        if (coeffs_.size() <= 1) return zero(var_);
        std::vector<K> r;
        r.reserve(coeffs_.size() - 1);
        for (size_t k = 1; k < coeffs_.size(); ++k) {
            r.push_back(coeffs_[k] * K(static_cast<int>(k)));
        }
        return Polynomial(std::move(r), var_);
    }

    K eval(const K& x) const {
        K acc(0);
        for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    // p(y + a) via repeated Horner passes.
    Polynomial taylor_shift(const K& a) const {
        std::vector<K> c = coeffs_;
        for (size_t i = 0; i < c.size(); ++i) {
            for (size_t j = c.size() - 1; j-- > i;) {
                c[j] = c[j] + a * c[j + 1];
            }
        }
        return Polynomial(std::move(c), var_);
    }

    // Exact polynomial square root, when one exists over K.
    std::optional<Polynomial> try_sqrt() const {
        if (is_zero()) return zero(var_);
        if (degree() % 2 != 0) return std::nullopt;
        auto lead_root = leading().try_sqrt();
        if (!lead_root) return std::nullopt;
        int h = degree() / 2;
        std::vector<K> q(static_cast<size_t>(h) + 1, K(0));
        q[static_cast<size_t>(h)] = *lead_root;
        K two_lead_inv = ((*lead_root) * K(2)).inverse();
        for (int k = h - 1; k >= 0; --k) {
            // coefficient of degree k + h in q^2 must match ours
            K s(0);
            for (int i = k + 1; i < h; ++i) {
                int j = k + h - i;
                if (j > h || j <= k) continue;
                s = s + q[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
            }
            q[static_cast<size_t>(k)] = (coeff(k + h) - s) * two_lead_inv;
        }
        Polynomial cand(std::move(q), var_);
        if (cand * cand == *this) return cand;
        return std::nullopt;
    }

private:
    int merged_var(const Polynomial& o) const {
        if (var_ != -1 && o.var_ != -1 && var_ != o.var_) {
            throw StructuralError("polynomials in different variables");
        }
        return var_ != -1 ? var_ : o.var_;
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
    int var_ = -1;
};

namespace gcd_detail {

// Primitive pseudo-remainder sequence over the integers.  Euclid over the
// rationals suffers exponential bit growth; clearing denominators and
// stripping integer content at every step keeps coefficients small.  This
// is the inner loop of every normalization in the kernel.
template <typename K>
std::optional<Polynomial<K>> rational_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto extract = [](const Polynomial<K>& p, std::vector<BigInt>& out) -> bool {
        BigInt denom = 1;
        std::vector<Rat> rs;
        rs.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) {
            auto r = c.as_rational();
            if (!r) return false;
            rs.push_back(*r);
            denom = denom / boost::multiprecision::gcd(denom, r->denominator()) * r->denominator();
        }
        out.clear();
        for (const auto& r : rs) out.push_back(r.numerator() * (denom / r.denominator()));
        return true;
    };
    std::vector<BigInt> u, v;
    if (!extract(a, u) || !extract(b, v)) return std::nullopt;

    auto content = [](const std::vector<BigInt>& p) {
        BigInt g = 0;
        for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
        return g;
    };
    auto make_primitive = [&](std::vector<BigInt>& p) {
        BigInt g = content(p);
        if (g > 1) {
            for (auto& c : p) c /= g;
        }
    };
    auto degree = [](const std::vector<BigInt>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<BigInt>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };

    trim(u);
    trim(v);
    if (u.empty()) std::swap(u, v);
    if (v.empty()) {
        if (u.empty()) return Polynomial<K>::zero(a.var());
        std::vector<K> coeffs;
        Rat lead(u.back(), BigInt(1));
        for (const auto& c : u) coeffs.push_back(K(Rat(c, BigInt(1)) / lead));
        int var = a.var() != -1 ? a.var() : b.var();
        return Polynomial<K>(std::move(coeffs), var);
    }
    make_primitive(u);
    make_primitive(v);
    if (degree(u) < degree(v)) std::swap(u, v);
    while (!v.empty()) {
        // pseudo-remainder of u by v
        std::vector<BigInt> r = u;
        BigInt lv = v.back();
        int dv = degree(v);
        while (static_cast<int>(r.size()) - 1 >= dv && !r.empty()) {
            int k = static_cast<int>(r.size()) - 1 - dv;
            BigInt lr = r.back();
            for (auto& c : r) c *= lv;
            for (int i = 0; i <= dv; ++i) {
                r[static_cast<size_t>(i + k)] -= lr * v[static_cast<size_t>(i)];
            }
            trim(r);
        }
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<K> coeffs;
    coeffs.reserve(u.size());
    Rat lead(u.back(), BigInt(1));
    for (const auto& c : u) coeffs.push_back(K(Rat(c, BigInt(1)) / lead));
    int var = a.var() != -1 ? a.var() : b.var();
    return Polynomial<K>(std::move(coeffs), var);
}

// Primitive pseudo-remainder sequence over coefficients that are fractions
// one structural level down.  The view clears coefficient denominators once
// and content is stripped after every pseudo-remainder, so coefficient
// arithmetic inside the loop never reduces fractions.  Content gcds recurse
// into poly_gcd one level lower.
template <typename K, typename View>
Polynomial<K> structured_prs_gcd(const Polynomial<K>& a, const Polynomial<K>& b,
                                 const View& view) {
    auto clear_denoms = [&](const Polynomial<K>& p) {
        Polynomial<K> common = view.one_poly();
        for (const auto& c : p.coeffs()) common = poly_lcm(common, view.den(c));
        std::vector<K> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) {
            out.push_back(view.make(view.num(c) * common.exact_div(view.den(c))));
        }
        return Polynomial<K>(std::move(out), p.var());
    };
    auto content = [&](const Polynomial<K>& p) {
        Polynomial<K> g = view.zero_poly();
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            g = poly_gcd(g, view.num(c));
            if (g.degree() == 0) break;
        }
        return g;
    };
    // rational scalar content; pseudo-remainders otherwise accumulate huge
    // integer factors shared by every nested coefficient
    auto strip_scalar = [](Polynomial<K> p) {
        BigInt g = 0, l = 1;
        for (const auto& c : p.coeffs()) collect_rat_content(c, g, l);
        if (g == 0) return p;
        Rat scale(l, g);
        if (scale.is_one()) return p;
        return p.scale(K(scale));
    };
    auto primitive = [&](Polynomial<K> p) {
        if (p.is_zero()) return p;
        Polynomial<K> cont = content(p);
        if (cont.degree() > 0) {
            std::vector<K> out;
            out.reserve(p.coeffs().size());
            for (const auto& c : p.coeffs()) {
                out.push_back(view.make(view.num(c).exact_div(cont)));
            }
            p = Polynomial<K>(std::move(out), p.var());
        }
        return strip_scalar(std::move(p));
    };

    Polynomial<K> u = primitive(clear_denoms(a));
    Polynomial<K> v = primitive(clear_denoms(b));
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // pseudo-remainder of u by v
        Polynomial<K> r = u;
        const K lv = v.leading();
        int dv = v.degree();
        while (!r.is_zero() && r.degree() >= dv) {
            int k = r.degree() - dv;
            K lr = r.leading();
            r = r.scale(lv) - v.scale(lr).shift_up(k);
        }
        r = primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

} // namespace gcd_detail

// Monic gcd strategy, specialized per coefficient type for structured
// coefficient fields.
template <typename K>
struct GcdImpl {
    static Polynomial<K> run(Polynomial<K> a, Polynomial<K> b) {
        while (!b.is_zero()) {
            auto r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
};

// Monic greatest common divisor.
template <typename K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    if (a.var() != -1 && b.var() != -1 && a.var() != b.var()) {
        throw StructuralError("gcd of polynomials in different variables");
    }
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) {
        return Polynomial<K>::one(a.var() != -1 ? a.var() : b.var());
    }
    if (auto fast = gcd_detail::rational_gcd(a, b)) return *fast;
    return GcdImpl<K>::run(std::move(a), std::move(b));
}

template <typename K>
Polynomial<K> poly_lcm(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<K>::zero(a.var());
    return (a * b).exact_div(poly_gcd(a, b)).monic();
}

// Yun's squarefree decomposition: returns monic pairwise-coprime squarefree
// parts with multiplicities whose weighted product rebuilds the input up to
// its leading coefficient.  Multiplicity-1 parts equal to 1 are omitted.
template <typename K>
std::vector<std::pair<Polynomial<K>, int>> squarefree_decompose(const Polynomial<K>& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<std::pair<Polynomial<K>, int>> out;
    Polynomial<K> a = p.monic();
    if (a.degree() == 0) return out;
    Polynomial<K> ad = a.formal_derivative();
    Polynomial<K> g = poly_gcd(a, ad);
    Polynomial<K> w = a.exact_div(g);
    Polynomial<K> y = ad.exact_div(g);
    Polynomial<K> z = y - w.formal_derivative();
    int i = 1;
    while (w.degree() > 0) {
        Polynomial<K> f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = w.exact_div(f);
        y = z.exact_div(f);
        z = y - w.formal_derivative();
        ++i;
    }
    return out;
}

} // namespace dilint

#endif
