#ifndef DILINT_LINEAR_HPP
#define DILINT_LINEAR_HPP

#include <utility>
#include <vector>

#include "dilint/tower.hpp"

namespace dilint {

struct LinearSolution {
    bool consistent = false;
    std::vector<Constant> values;   // one per unknown, free unknowns set to 0
    std::vector<Constant> witness;  // on inconsistency with tracking: a row
                                    // combination with zero left side and
                                    // nonzero right side
    long witness_row = -1;
};

// Linear system over the constant field.  Relations between tower elements
// are projected onto constant-field rows by peeling generator levels:
// at each level the elements are put over a common denominator and the
// coefficients of each power of the generator are compared.
class LinearSystem {
public:
    explicit LinearSystem(int unknowns) : unknowns_(unknowns) {}

    int unknowns() const { return unknowns_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Constant>>& matrix() const { return rows_; }
    const std::vector<Constant>& rhs() const { return rhs_; }

    void add_row(std::vector<Constant> row, Constant rhs) {
        if (static_cast<int>(row.size()) != unknowns_) {
            throw StructuralError("linear row width mismatch");
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
    }

    // sum_j coeffs[j].second * x_{coeffs[j].first} = rhs, as tower elements.
    void add_relation(const std::vector<std::pair<int, Element>>& coeffs, const Element& rhs) {
        std::vector<Element> row(static_cast<size_t>(unknowns_) + 1, Element());
        for (const auto& [idx, e] : coeffs) {
            row[static_cast<size_t>(idx)] = row[static_cast<size_t>(idx)] + e;
        }
        row.back() = rhs;
        project(row);
    }

    LinearSolution solve(bool track_witness = false) const {
        size_t m = rows_.size();
        size_t n = static_cast<size_t>(unknowns_);
        std::vector<std::vector<Constant>> a = rows_;
        std::vector<Constant> b = rhs_;
        std::vector<std::vector<Constant>> combo;
        if (track_witness) {
            combo.assign(m, std::vector<Constant>(m, Constant(0)));
            for (size_t i = 0; i < m; ++i) combo[i][i] = Constant(1);
        }
        std::vector<long> pivot_of_col(n, -1);
        size_t rank = 0;
        for (size_t c = 0; c < n && rank < m; ++c) {
            size_t p = rank;
            while (p < m && a[p][c].is_zero()) ++p;
            if (p == m) continue;
            std::swap(a[p], a[rank]);
            std::swap(b[p], b[rank]);
            if (track_witness) std::swap(combo[p], combo[rank]);
            Constant inv = a[rank][c].inverse();
            for (size_t j = c; j < n; ++j) a[rank][j] = a[rank][j] * inv;
            b[rank] = b[rank] * inv;
            if (track_witness) {
                for (auto& x : combo[rank]) x = x * inv;
            }
            for (size_t r = 0; r < m; ++r) {
                if (r == rank || a[r][c].is_zero()) continue;
                Constant f = a[r][c];
                for (size_t j = c; j < n; ++j) a[r][j] = a[r][j] - f * a[rank][j];
                b[r] = b[r] - f * b[rank];
                if (track_witness) {
                    for (size_t k = 0; k < m; ++k) combo[r][k] = combo[r][k] - f * combo[rank][k];
                }
            }
            pivot_of_col[c] = static_cast<long>(rank);
            ++rank;
        }
        LinearSolution sol;
        for (size_t r = rank; r < m; ++r) {
            if (!b[r].is_zero()) {
                sol.consistent = false;
                sol.witness_row = static_cast<long>(r);
                if (track_witness) sol.witness = combo[r];
                return sol;
            }
        }
        sol.consistent = true;
        sol.values.assign(n, Constant(0));
        for (size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] >= 0) sol.values[c] = b[static_cast<size_t>(pivot_of_col[c])];
        }
        return sol;
    }

private:
    void project(std::vector<Element>& row) {
        const TowerNode* deepest = nullptr;
        for (const auto& e : row) {
            if (e.is_const_level()) continue;
            if (!deepest || e.node()->level > deepest->level) deepest = e.node().get();
        }
        if (!deepest) {
            std::vector<Constant> crow;
            crow.reserve(row.size() - 1);
            for (size_t i = 0; i + 1 < row.size(); ++i) crow.push_back(row[i].const_value());
            add_row(std::move(crow), row.back().const_value());
            return;
        }
        NodePtr at;
        for (const auto& e : row) {
            if (!e.is_const_level() && e.node().get() == deepest) {
                at = e.node();
                break;
            }
        }
        auto lift = [&](const Element& e) -> Fraction<Element> {
            if (!e.is_const_level() && e.node() == at) return e.fraction();
            if (e.is_zero()) return Fraction<Element>();
            if (!is_ancestor_or_same(e.node(), at)) {
                throw StructuralError("relation mixes unrelated towers");
            }
            return Fraction<Element>(Polynomial<Element>(std::vector<Element>{e}, at->level));
        };
        Polynomial<Element> common = Polynomial<Element>::one(at->level);
        std::vector<Fraction<Element>> fracs;
        fracs.reserve(row.size());
        for (const auto& e : row) {
            fracs.push_back(lift(e));
            common = poly_lcm(common, fracs.back().den());
        }
        std::vector<Polynomial<Element>> nums;
        int maxdeg = -1;
        for (const auto& f : fracs) {
            nums.push_back(f.num() * common.exact_div(f.den()));
            maxdeg = std::max(maxdeg, nums.back().degree());
        }
        for (int k = 0; k <= maxdeg; ++k) {
            std::vector<Element> sub;
            sub.reserve(row.size());
            for (const auto& nump : nums) sub.push_back(nump.coeff(k));
            project(sub);
        }
    }

    int unknowns_;
    std::vector<std::vector<Constant>> rows_;
    std::vector<Constant> rhs_;
};

// Decides membership of `target` in the constant-field span of `gens` and
// returns the coefficients when it lies there.
inline LinearSolution solve_in_span(const std::vector<Element>& gens, const Element& target,
                                    bool track_witness = false) {
    LinearSystem sys(static_cast<int>(gens.size()));
    std::vector<std::pair<int, Element>> coeffs;
    for (size_t i = 0; i < gens.size(); ++i) coeffs.emplace_back(static_cast<int>(i), gens[i]);
    sys.add_relation(coeffs, target);
    return sys.solve(track_witness);
}

} // namespace dilint

#endif
