#pragma once

// Linear systems whose unknowns are module maps.
//
// Each unknown ranges over a HomSpace; each equation lives in a HomSpace and
// collects terms coeff * L * u * R (L, R optional fixed maps). The system is
// flattened to coordinates and solved exactly; the particular solution has
// its free coordinates set to zero, so results are deterministic.

#include <optional>
#include <vector>

#include "angleforge/module.hpp"

namespace angleforge {

template <class K>
class MapSystem {
public:
    std::size_t unknown(HomSpace<K> space) {
        unknowns_.push_back(std::move(space));
        return unknowns_.size() - 1;
    }

    std::size_t equation(HomSpace<K> space) {
        equations_.push_back({std::move(space), {}, {}});
        return equations_.size() - 1;
    }

    /// Adds coeff * left * u * right to equation e.
    void add(std::size_t e, std::size_t u, const K& coeff, const std::optional<ModMap<K>>& left = std::nullopt,
             const std::optional<ModMap<K>>& right = std::nullopt) {
        equations_[e].terms.push_back({u, coeff, left, right});
    }

    /// Adds a constant to the right-hand side of equation e.
    void rhs(std::size_t e, const ModMap<K>& m) {
        auto& eq = equations_[e];
        if (!eq.rhs) eq.rhs = m;
        else *eq.rhs += m;
    }

    std::size_t num_unknowns() const {
        std::size_t n = 0;
        for (const auto& u : unknowns_) n += u.dim();
        return n;
    }

    /// Coefficient matrix: one row per unknown basis vector, one column per
    /// equation coordinate.
    Mat<K> matrix() const {
        auto [uoff, nu] = offsets_unknowns();
        auto [eoff, ne] = offsets_equations();
        Mat<K> a(nu, ne);
        for (std::size_t e = 0; e < equations_.size(); ++e) {
            const auto& eq = equations_[e];
            for (const auto& t : eq.terms) {
                const auto& us = unknowns_[t.u];
                for (std::size_t k = 0; k < us.dim(); ++k) {
                    ModMap<K> m = us.basis[k];
                    if (t.left) m = *t.left * m;
                    if (t.right) m = m * *t.right;
                    auto c = eq.space.coords(m);
                    for (std::size_t j = 0; j < c.size(); ++j)
                        if (!is_zero(c[j])) a(uoff[t.u] + k, eoff[e] + j) += t.coeff * c[j];
                }
            }
        }
        return a;
    }

    std::vector<K> rhs_vector() const {
        auto [eoff, ne] = offsets_equations();
        std::vector<K> b(ne, K(0));
        for (std::size_t e = 0; e < equations_.size(); ++e) {
            if (!equations_[e].rhs) continue;
            auto c = equations_[e].space.coords(*equations_[e].rhs);
            for (std::size_t j = 0; j < c.size(); ++j) b[eoff[e] + j] = c[j];
        }
        return b;
    }

    /// One solution, as one map per unknown, or nullopt when inconsistent.
    std::optional<std::vector<ModMap<K>>> solve() const {
        auto x = solve_coords();
        if (!x) return std::nullopt;
        return maps_from(*x);
    }

    std::optional<std::vector<K>> solve_coords() const {
        Mat<K> a = matrix();
        auto b = rhs_vector();
        if (a.rows() == 0) {
            if (!all_zero<K>(b)) return std::nullopt;
            return std::vector<K>{};
        }
        if (a.cols() == 0) return std::vector<K>(a.rows(), K(0));
        auto s = solve_left(a, Mat<K>::row_vector(b));
        if (!s) return std::nullopt;
        return s->row_copy(0);
    }

    /// Basis of the homogeneous solution space, in flattened coordinates.
    Mat<K> homogeneous_solutions() const {
        Mat<K> a = matrix();
        if (a.cols() == 0) return Mat<K>::identity(a.rows());
        Mat<K> k = left_kernel(a);
        return k.rows() ? k : Mat<K>(0, a.rows());
    }

    std::vector<ModMap<K>> maps_from(std::span<const K> x) const {
        std::vector<ModMap<K>> out;
        std::size_t off = 0;
        for (const auto& u : unknowns_) {
            out.push_back(u.combine(x.subspan(off, u.dim())));
            off += u.dim();
        }
        return out;
    }

    const HomSpace<K>& unknown_space(std::size_t u) const { return unknowns_[u]; }

private:
    struct Term {
        std::size_t u;
        K coeff;
        std::optional<ModMap<K>> left, right;
    };
    struct Equation {
        HomSpace<K> space;
        std::vector<Term> terms;
        std::optional<ModMap<K>> rhs;
    };

    std::pair<std::vector<std::size_t>, std::size_t> offsets_unknowns() const {
        std::vector<std::size_t> off;
        std::size_t n = 0;
        for (const auto& u : unknowns_) {
            off.push_back(n);
            n += u.dim();
        }
        return {off, n};
    }
    std::pair<std::vector<std::size_t>, std::size_t> offsets_equations() const {
        std::vector<std::size_t> off;
        std::size_t n = 0;
        for (const auto& e : equations_) {
            off.push_back(n);
            n += e.space.dim();
        }
        return {off, n};
    }

    std::vector<HomSpace<K>> unknowns_;
    std::vector<Equation> equations_;
};

}  // namespace angleforge
