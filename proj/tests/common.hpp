#pragma once

#include <memory>
#include <random>

#include "angleforge/algebra.hpp"
#include "angleforge/complex.hpp"
#include "angleforge/module.hpp"

namespace testing_support {

using namespace angleforge;
using Q = Rational;

inline Quiver grid10_quiver() {
    std::vector<std::string> v;
    for (int i = 1; i <= 10; ++i) v.push_back(std::to_string(i));
    return Quiver::from_names(v, {{"a12", "1", "2"},
                                  {"a23", "2", "3"},
                                  {"a34", "3", "4"},
                                  {"a56", "5", "6"},
                                  {"a67", "6", "7"},
                                  {"a89", "8", "9"},
                                  {"a910", "9", "10"},
                                  {"a79", "7", "9"},
                                  {"a47", "4", "7"},
                                  {"a68", "6", "8"},
                                  {"a36", "3", "6"},
                                  {"a25", "2", "5"}});
}

template <class K = Q>
std::vector<Relation<K>> grid10_relations() {
    auto rel = [](std::vector<std::pair<int, std::vector<std::string>>> terms) {
        Relation<K> r;
        for (auto& [c, p] : terms) r.push_back({K(c), p});
        return r;
    };
    return {rel({{1, {"a23", "a36"}}, {-1, {"a25", "a56"}}}),
            rel({{1, {"a34", "a47"}}, {-1, {"a36", "a67"}}}),
            rel({{1, {"a67", "a79"}}, {-1, {"a68", "a89"}}}),
            rel({{1, {"a12", "a25"}}}),
            rel({{1, {"a56", "a68"}}}),
            rel({{1, {"a89", "a910"}}})};
}

template <class K = Q>
AlgPtr<K> make_algebra(const Quiver& q, const std::vector<Relation<K>>& r, const std::string& name = "A") {
    return std::make_shared<const AlgebraData<K>>(build_algebra<K>(q, r, name));
}

/// The same algebra with arrows reversed: modules over it carry the
/// orientation in which Hom(P_i, P_j) is nonzero along each arrow i -> j.
template <class K = Q>
AlgPtr<K> grid10_algebra_reversed() {
    return make_algebra<K>(grid10_quiver().opposite(), opposite_relations(grid10_relations<K>()), "A");
}

inline Quiver a2_quiver() { return Quiver::from_names({"1", "2"}, {{"a", "1", "2"}}); }

inline Quiver a3_quiver() { return Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}); }

/// A random quotient of a random explicit projective: a module that is
/// usually not projective, for exercising generic code paths.
template <class K>
Rep<K> random_module(AlgPtr<K> alg, std::mt19937& rng, std::size_t max_summands = 3) {
    std::uniform_int_distribution<std::size_t> vt(0, alg->num_idempotents() - 1), ns(1, max_summands);
    std::vector<std::size_t> tops;
    std::size_t n = ns(rng);
    for (std::size_t i = 0; i < n; ++i) tops.push_back(vt(rng));
    auto p = projective_sum(alg, tops);
    // kill the submodule generated by one random element at a random vertex
    std::size_t s = vt(rng);
    std::vector<Mat<K>> sub(alg->num_idempotents());
    for (std::size_t t = 0; t < sub.size(); ++t) sub[t] = Mat<K>(0, p.dims[t]);
    if (p.dims[s] > 0 && rng() % 3 != 0) {
        std::uniform_int_distribution<int> cd(-2, 2);
        std::vector<K> v(p.dims[s]);
        for (auto& x : v) x = K(cd(rng));
        auto acts = p.all_actions();
        for (std::size_t b = 0; b < alg->dim(); ++b) {
            if (alg->basis[b].src != s) continue;
            auto img = vec_times(v, acts[b]);
            if (!all_zero<K>(img)) sub[alg->basis[b].tgt].append_row(img);
        }
    }
    return quotient_module(p, sub).rep;
}

/// A random bounded complex starting in degree lo with `len` terms: each
/// differential is a random map killed by the previous one.
template <class K>
Complex<K> random_complex(AlgPtr<K> alg, std::mt19937& rng, int lo, std::size_t len, bool projective,
                          std::size_t max_dim = 12) {
    std::vector<Rep<K>> terms;
    std::uniform_int_distribution<std::size_t> vt(0, alg->num_idempotents() - 1);
    while (terms.size() < len) {
        Rep<K> t;
        if (projective) {
            std::vector<std::size_t> tops{vt(rng)};
            for (std::size_t extra = rng() % 3; extra > 0; --extra) tops.push_back(vt(rng));
            t = projective_sum(alg, tops);
        } else {
            t = random_module(alg, rng, 3);
        }
        if (t.total() > 0 && t.total() <= max_dim) terms.push_back(std::move(t));
    }
    std::uniform_int_distribution<int> cd(-2, 2);
    std::vector<ModMap<K>> ds;
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        auto h = hom_modules(terms[k], terms[k + 1]);
        std::vector<K> c(h.dim(), K(0));
        if (k == 0) {
            for (auto& x : c) x = K(cd(rng));
        } else {
            // coefficients c with d_prev * (sum c_j b_j) = 0
            const auto& prev = ds.back();
            std::vector<std::vector<K>> rows;
            for (const auto& b : h.basis) rows.push_back((prev * b).flatten());
            std::size_t width = rows.empty() ? 0 : rows[0].size();
            Mat<K> a(h.dim(), width);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < width; ++j) a(i, j) = rows[i][j];
            Mat<K> ker = width ? left_kernel(a) : Mat<K>::identity(h.dim());
            for (std::size_t r = 0; r < ker.rows(); ++r) {
                K w(cd(rng));
                for (std::size_t j = 0; j < h.dim(); ++j) c[j] += w * ker(r, j);
            }
        }
        ds.push_back(h.combine(c));
    }
    return Complex<K>(alg, lo, std::move(terms), std::move(ds));
}

/// A random chain map X -> Y: a random combination of a basis of Hom_{K^b}
/// representatives plus a random null-homotopic perturbation.
template <class K>
ChainMap<K> random_chain_map(const HomKb<K>& h, std::mt19937& rng, bool perturb = true) {
    std::uniform_int_distribution<int> cd(-3, 3);
    std::vector<K> c(h.dim());
    for (auto& x : c) x = K(cd(rng));
    ChainMap<K> f = h.combine(c);
    if (!perturb) return f;
    const auto& x = h.source();
    const auto& y = h.target();
    Homotopy<K> hm;
    hm.lo = x.lo;
    for (int i = x.lo; i <= x.hi(); ++i) {
        auto hs = hom_modules(x.term(i), y.term(i - 1));
        std::vector<K> w(hs.dim());
        for (auto& v : w) v = K(cd(rng));
        hm.h.push_back(hs.combine(w));
    }
    return f + boundary_of(hm, x, y);
}

}  // namespace testing_support
