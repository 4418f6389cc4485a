#pragma once

// Projective and injective replacements of bounded complexes, and lifting of
// chain maps through quasi-isomorphisms.
//
// The projective replacement is built from the top degree down. Having P^{>k}
// and q^{>k}, the cycles of the partial mapping cone in degree k are
//   Z^k = {(p, c) in P^{k+1} (+) C^k : p d_P = 0, p q + c d_C = 0},
// and P^k is a projective cover of Z^k modulo the boundaries (0, c' d_C) and
// rad Z^k; d_P^k and q^k are the two components of the cover (q with a minus
// sign). The mapping cone of q is then acyclic, so q is a quasi-isomorphism.

#include <optional>
#include <vector>

#include "angleforge/complex.hpp"
#include "angleforge/map_system.hpp"
#include "angleforge/nakayama.hpp"

namespace angleforge {

template <class K>
struct Replacement {
    Complex<K> obj;  // termwise explicit projective (or injective for injective replacements)
    ChainMap<K> q;   // obj -> c for projective, c -> obj for injective
};

/// Transports a complex whose terms are projective onto explicit projective
/// terms; `iso` is the termwise isomorphism explicit -> original.
template <class K>
Replacement<K> make_explicit(const Complex<K>& c) {
    Replacement<K> r;
    std::vector<Rep<K>> terms;
    std::vector<ModMap<K>> to, from;
    for (const auto& t : c.terms) {
        if (t.explicit_projective) {
            terms.push_back(t);
            to.push_back(ModMap<K>::identity(t));
            from.push_back(ModMap<K>::identity(t));
            continue;
        }
        auto cov = make_explicit_projective(t);
        terms.push_back(cov.proj);
        to.push_back(cov.map);
        from.push_back(inverse_iso(cov.map));
    }
    std::vector<ModMap<K>> ds;
    for (std::size_t k = 0; k < c.d.size(); ++k) ds.push_back(to[k] * c.d[k] * from[k + 1]);
    r.obj = Complex<K>(c.alg, c.lo, std::move(terms), std::move(ds));
    r.q.lo = c.lo;
    r.q.f = std::move(to);
    return r;
}

template <class K>
Replacement<K> projective_replacement(const Complex<K>& c, std::size_t bound = 32) {
    if (c.is_projective()) return {c, ChainMap<K>::identity(c)};
    const auto& alg = c.alg;
    const auto& a = *alg;
    std::size_t nv = a.num_idempotents();
    std::vector<Rep<K>> terms;  // from the top down
    std::vector<ModMap<K>> ds, qs;
    Rep<K> p_next = Rep<K>::zero(alg), p_next2 = Rep<K>::zero(alg);
    ModMap<K> d_next = ModMap<K>::zero(p_next, p_next2), q_next = ModMap<K>::zero(p_next, c.term(c.hi() + 1));
    int k = c.hi();
    for (;; --k) {
        const Rep<K>& ck = c.term(k);
        Rep<K> src = direct_sum(p_next, ck);
        Rep<K> tgt = direct_sum(p_next2, c.term(k + 1));
        ModMap<K> phi = block_map<K>({p_next, ck}, {p_next2, c.term(k + 1)},
                                     {{d_next, q_next}, {ModMap<K>::zero(ck, p_next2), c.diff(k)}});
        auto z = kernel_module(src, phi);
        if (k < c.lo && z.rep.is_zero()) break;
        if (k < c.lo && static_cast<std::size_t>(c.lo - k) > bound)
            throw Error(ErrorKind::ResolutionTooLong,
                        "projective replacement needs more than " + std::to_string(bound) + " extra degrees");
        // boundaries (0, c' d_C^{k-1}) in coordinates of Z
        std::vector<Mat<K>> known(nv);
        ModMap<K> dprev = c.diff(k - 1);
        for (std::size_t s = 0; s < nv; ++s) {
            known[s] = Mat<K>(0, z.rep.dims[s]);
            if (z.rep.dims[s] == 0 || dprev.b[s].rows() == 0) continue;
            LinearCoordinates<K> lc(z.incl.b[s]);
            for (std::size_t i = 0; i < dprev.b[s].rows(); ++i) {
                std::vector<K> v(src.dims[s], K(0));
                for (std::size_t j = 0; j < dprev.b[s].cols(); ++j) v[p_next.dims[s] + j] = dprev.b[s](i, j);
                if (all_zero<K>(v)) continue;
                known[s].append_row(lc.coords(v));
            }
        }
        auto cov = projective_cover(z.rep, &known);
        ModMap<K> m = cov.map * z.incl;
        ModMap<K> dk, qk;
        for (std::size_t s = 0; s < nv; ++s) {
            std::size_t r = m.b[s].rows();
            dk.b.push_back(m.b[s].block(0, 0, r, p_next.dims[s]));
            qk.b.push_back(-m.b[s].block(0, p_next.dims[s], r, ck.dims[s]));
        }
        terms.push_back(cov.proj);
        ds.push_back(dk);
        qs.push_back(qk);
        p_next2 = p_next;
        p_next = cov.proj;
        d_next = dk;
        q_next = qk;
    }
    // terms[t] sits in degree hi - t; reverse into increasing degree
    int lo = k + 1;
    std::size_t n = terms.size();
    std::vector<Rep<K>> ts(terms.rbegin(), terms.rend());
    // ds[t] : terms[t] -> terms[t - 1]
    std::vector<ModMap<K>> diffs;
    for (std::size_t t = n; t-- > 1;) diffs.push_back(ds[t]);
    std::vector<ModMap<K>> qf(qs.rbegin(), qs.rend());
    Replacement<K> r;
    r.obj = Complex<K>(alg, lo, std::move(ts), std::move(diffs));
    r.q.lo = lo;
    r.q.f = std::move(qf);
    // trim zero terms at the ends, keeping q aligned
    Complex<K> tr = r.obj.trimmed();
    if (tr.terms.size() != r.obj.terms.size()) {
        ChainMap<K> q2;
        q2.lo = tr.lo;
        for (int i = tr.lo; i <= tr.hi(); ++i) q2.f.push_back(r.q.at(i, r.obj, c));
        r.obj = std::move(tr);
        r.q = std::move(q2);
    }
    return r;
}

/// Complex dual D X over the opposite algebra: (DX)^i = D(X^{-i}), d = D(d).
template <class K>
Complex<K> dual(const Complex<K>& x, AlgPtr<K> op) {
    if (x.terms.empty()) return Complex<K>::zero(op);
    std::vector<Rep<K>> ts;
    std::vector<ModMap<K>> ds;
    for (int i = -x.hi(); i <= -x.lo; ++i) ts.push_back(dual(x.term(-i), op));
    for (int i = -x.hi(); i < -x.lo; ++i) ds.push_back(dual(x.diff(-i - 1)));
    return Complex<K>(op, -x.hi(), std::move(ts), std::move(ds));
}

/// D f : D Y -> D X for f : X -> Y.
template <class K>
ChainMap<K> dual(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y) {
    ChainMap<K> r;
    if (y.terms.empty()) return r;
    r.lo = -y.hi();
    for (int i = -y.hi(); i <= -y.lo; ++i) r.f.push_back(dual(f.at(-i, x, y)));
    return r;
}

/// Injective replacement j : c -> I with I termwise injective, via duality and
/// a projective replacement over the opposite algebra.
template <class K>
Replacement<K> injective_replacement(const Complex<K>& c, AlgPtr<K> op, std::size_t bound = 32) {
    Complex<K> dc = dual(c, op);
    auto pr = projective_replacement(dc, bound);
    Replacement<K> r;
    r.obj = dual(pr.obj, c.alg);
    r.q = dual(pr.q, pr.obj, dc);
    return r;
}

template <class K>
struct Lift {
    ChainMap<K> map;       // x -> p
    Homotopy<K> homotopy;  // witness for map * q - f
};

/// Lifts f : X -> C through a quasi-isomorphism q : P -> C, for X termwise
/// projective. Solves for g and a homotopy h in one system:
///   g chain map,  g^i q^i - d_X h^{i+1} - h^i d_C = f^i.
template <class K>
Lift<K> lift_through_quasi_iso(const ChainMap<K>& f, const ChainMap<K>& q, const Complex<K>& x, const Complex<K>& p,
                               const Complex<K>& c) {
    MapSystem<K> sys;
    Lift<K> out;
    out.map = ChainMap<K>::zero(x, p);
    out.homotopy.lo = x.lo;
    for (int i = x.lo; i <= x.hi(); ++i) out.homotopy.h.push_back(ModMap<K>::zero(x.term(i), c.term(i - 1)));
    if (x.terms.empty()) return out;
    int lo = x.lo, hi = x.hi();
    std::vector<std::optional<std::size_t>> gu, hu;
    for (int i = lo; i <= hi; ++i) {
        gu.push_back(p.in_range(i) ? std::optional<std::size_t>(sys.unknown(hom_modules(x.term(i), p.term(i))))
                                   : std::nullopt);
        hu.push_back(c.in_range(i - 1)
                         ? std::optional<std::size_t>(sys.unknown(hom_modules(x.term(i), c.term(i - 1))))
                         : std::nullopt);
    }
    auto g_at = [&](int i) { return (i >= lo && i <= hi) ? gu[i - lo] : std::nullopt; };
    auto h_at = [&](int i) { return (i >= lo && i <= hi) ? hu[i - lo] : std::nullopt; };
    for (int i = lo; i <= hi; ++i) {
        // chain condition in Hom(X^i, P^{i+1})
        if (p.in_range(i + 1)) {
            std::size_t e = sys.equation(hom_modules(x.term(i), p.term(i + 1)));
            if (auto u = g_at(i)) sys.add(e, *u, K(1), std::nullopt, p.diff(i));
            if (auto u = g_at(i + 1)) sys.add(e, *u, K(-1), x.diff(i));
        }
        // homotopy equation in Hom(X^i, C^i)
        if (c.in_range(i)) {
            std::size_t e = sys.equation(hom_modules(x.term(i), c.term(i)));
            if (auto u = g_at(i)) sys.add(e, *u, K(1), std::nullopt, q.at(i, p, c));
            if (auto u = h_at(i + 1)) sys.add(e, *u, K(-1), x.diff(i));
            if (auto u = h_at(i)) sys.add(e, *u, K(-1), std::nullopt, c.diff(i - 1));
            sys.rhs(e, f.at(i, x, c));
        }
    }
    auto sol = sys.solve();
    if (!sol) throw Error(ErrorKind::Internal, "lift through quasi-isomorphism: no solution");
    for (int i = lo; i <= hi; ++i) {
        if (auto u = g_at(i)) out.map.f[i - lo] = (*sol)[*u];
        if (auto u = h_at(i)) out.homotopy.h[i - lo] = (*sol)[*u];
    }
    return out;
}

/// Cohomology of a complex, compared vertexwise: true when q induces
/// isomorphisms, tested by acyclicity of its cone.
template <class K>
bool is_quasi_iso(const ChainMap<K>& q, const Complex<K>& p, const Complex<K>& c) {
    auto cn = cone(q, p, c);
    for (const auto& row : cohomology_dims(cn.obj))
        for (auto v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace angleforge
