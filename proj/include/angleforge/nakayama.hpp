#pragma once

// Vector-space duality between right A-modules and right A^op-modules, and the
// Nakayama functor nu = D Hom_A(-, A) with its quasi-inverse Hom_A(DA, -).
//
// Both functors are built with fixed bases, so they are strictly functorial:
// nu(M)_w = D Hom(M, P_w), and a generator g : v -> w acts by the transpose of
// phi |-> phi L_g, where L_g : P_w -> P_v is left multiplication by g.

#include <memory>
#include <vector>

#include "angleforge/module.hpp"

namespace angleforge {

/// D M over the opposite algebra (same generator positions, transposed action).
template <class K>
Rep<K> dual(const Rep<K>& m, AlgPtr<K> op) {
    Rep<K> d;
    d.alg = op;
    d.dims = m.dims;
    for (const auto& a : m.act) d.act.push_back(a.transpose());
    return d;
}

/// D f : D N -> D M for f : M -> N.
template <class K>
ModMap<K> dual(const ModMap<K>& f) {
    ModMap<K> d;
    for (const auto& m : f.b) d.b.push_back(m.transpose());
    return d;
}

template <class K>
class Nakayama {
public:
    explicit Nakayama(AlgPtr<K> alg) : alg_(std::move(alg)) {
        const auto& a = *alg_;
        std::size_t m = a.num_idempotents();
        for (std::size_t v = 0; v < m; ++v) proj_.push_back(projective(alg_, v));
        for (std::size_t gi = 0; gi < a.generators.size(); ++gi) {
            std::size_t g = a.generators[gi];
            std::size_t v = a.basis[g].src, w = a.basis[g].tgt;
            // L_g : P_w -> P_v sends e_w to g, which lies in (P_v)_w = e_v A e_w.
            std::vector<K> img(proj_[v].dims[w], K(0));
            img[a.position_in_block[g]] = K(1);
            left_mult_.push_back(yoneda_map(proj_[w], proj_[v], {img}));
        }
        for (std::size_t v = 0; v < m; ++v) inj_.push_back(apply(proj_[v]));
        for (std::size_t gi = 0; gi < a.generators.size(); ++gi) {
            std::size_t g = a.generators[gi];
            std::size_t v = a.basis[g].src, w = a.basis[g].tgt;
            nu_left_mult_.push_back(apply(left_mult_[gi], proj_[w], proj_[v]));
        }
    }

    const AlgPtr<K>& algebra() const { return alg_; }
    const Rep<K>& injective(std::size_t v) const { return inj_[v]; }
    const Rep<K>& proj(std::size_t v) const { return proj_[v]; }

    /// nu(M).
    Rep<K> apply(const Rep<K>& m) const {
        const auto& a = *alg_;
        std::vector<HomSpace<K>> homs;
        for (std::size_t w = 0; w < a.num_idempotents(); ++w) homs.push_back(hom_modules(m, proj_[w]));
        Rep<K> r;
        r.alg = alg_;
        for (const auto& h : homs) r.dims.push_back(h.dim());
        for (std::size_t gi = 0; gi < a.generators.size(); ++gi) {
            std::size_t g = a.generators[gi];
            std::size_t v = a.basis[g].src, w = a.basis[g].tgt;
            // rows: phi_i L_g in Hom(M, P_v) for phi_i in Hom(M, P_w); nu acts by the transpose
            Mat<K> t(homs[w].dim(), homs[v].dim());
            for (std::size_t i = 0; i < homs[w].dim(); ++i) {
                auto c = homs[v].coords(homs[w].basis[i] * left_mult_[gi]);
                for (std::size_t j = 0; j < c.size(); ++j) t(i, j) = c[j];
            }
            r.act.push_back(t.transpose());
        }
        return r;
    }

    /// nu(f) for f : M -> N.
    ModMap<K> apply(const ModMap<K>& f, const Rep<K>& m, const Rep<K>& n) const {
        const auto& a = *alg_;
        ModMap<K> r;
        for (std::size_t v = 0; v < a.num_idempotents(); ++v) {
            auto hm = hom_modules(m, proj_[v]);
            auto hn = hom_modules(n, proj_[v]);
            Mat<K> s(hn.dim(), hm.dim());
            for (std::size_t i = 0; i < hn.dim(); ++i) {
                auto c = hm.coords(f * hn.basis[i]);
                for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = c[j];
            }
            r.b.push_back(s.transpose());
        }
        return r;
    }

    /// nu^{-1}(N)_v = Hom(I_v, N) with I_v = nu(P_v).
    Rep<K> apply_inverse(const Rep<K>& n) const {
        const auto& a = *alg_;
        std::vector<HomSpace<K>> homs;
        for (std::size_t v = 0; v < a.num_idempotents(); ++v) homs.push_back(hom_modules(inj_[v], n));
        Rep<K> r;
        r.alg = alg_;
        for (const auto& h : homs) r.dims.push_back(h.dim());
        for (std::size_t gi = 0; gi < a.generators.size(); ++gi) {
            std::size_t g = a.generators[gi];
            std::size_t v = a.basis[g].src, w = a.basis[g].tgt;
            Mat<K> t(homs[v].dim(), homs[w].dim());
            for (std::size_t i = 0; i < homs[v].dim(); ++i) {
                auto c = homs[w].coords(nu_left_mult_[gi] * homs[v].basis[i]);
                for (std::size_t j = 0; j < c.size(); ++j) t(i, j) = c[j];
            }
            r.act.push_back(std::move(t));
        }
        return r;
    }

    ModMap<K> apply_inverse(const ModMap<K>& f, const Rep<K>& m, const Rep<K>& n) const {
        const auto& a = *alg_;
        ModMap<K> r;
        for (std::size_t v = 0; v < a.num_idempotents(); ++v) {
            auto hm = hom_modules(inj_[v], m);
            auto hn = hom_modules(inj_[v], n);
            Mat<K> s(hm.dim(), hn.dim());
            for (std::size_t i = 0; i < hm.dim(); ++i) {
                auto c = hn.coords(hm.basis[i] * f);
                for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = c[j];
            }
            r.b.push_back(std::move(s));
        }
        return r;
    }

private:
    AlgPtr<K> alg_;
    std::vector<Rep<K>> proj_, inj_;
    std::vector<ModMap<K>> left_mult_, nu_left_mult_;
};

}  // namespace angleforge
