#pragma once

// Approximations, source and sink maps and decompositions relative to a finite
// family of indecomposable catalog entries with local endomorphism rings,
// pairwise non-isomorphic.
//
// With rad(U_s, U_r) known for all members, the minimal left approximation of
// X takes, for every member U_r, a complement of
//   sum_s Hom(X, U_s) rad(U_s, U_r)
// in Hom(X, U_r) as the components into copies of U_r. Source maps use
// rad(X, -) instead of Hom(X, -); right approximations and sink maps are dual.

#include <functional>
#include <vector>

#include "angleforge/catalog.hpp"

namespace angleforge {

using Family = std::vector<std::size_t>;

/// Row span of {x then y : x in rows of xs, y in rows of ys}, in Hom(a,c).
template <class K>
Mat<K> products(Catalog<K>& cat, std::size_t a, std::size_t b, std::size_t c, const Mat<K>& xs, const Mat<K>& ys) {
    std::size_t n = cat.dim(a, c);
    Mat<K> out(0, n);
    if (n == 0 || xs.rows() == 0 || ys.rows() == 0) return out;
    for (std::size_t i = 0; i < xs.rows(); ++i)
        for (std::size_t j = 0; j < ys.rows(); ++j) out.append_row(cat.compose(a, b, c, xs.row(i), ys.row(j)));
    return row_space(out);
}

template <class K>
Mat<K> whole(Catalog<K>& cat, std::size_t a, std::size_t b) {
    return Mat<K>::identity(cat.dim(a, b));
}

/// Checks that the members are indecomposable with local endomorphism rings
/// and pairwise non-isomorphic.
template <class K>
void check_family(Catalog<K>& cat, const Family& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
        cat.residue(fam[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (fam[i] == fam[j]) throw Error(ErrorKind::Input, "family lists " + cat.name(fam[i]) + " twice");
            std::size_t a = fam[i], b = fam[j];
            if (cat.dim(a, b) == 0 || cat.dim(b, a) == 0) continue;
            Mat<K> loops = products(cat, a, b, a, whole(cat, a, b), whole(cat, b, a));
            const auto& lam = cat.residue(a);
            for (std::size_t r = 0; r < loops.rows(); ++r) {
                K s(0);
                for (std::size_t k = 0; k < lam.size(); ++k) s += loops(r, k) * lam[k];
                if (!is_zero(s))
                    throw Error(ErrorKind::Input, "family members " + cat.name(a) + " and " + cat.name(b) + " are isomorphic");
            }
        }
    }
}

namespace detail {

template <class K>
AddMap<K> assemble_left(Catalog<K>& cat, std::size_t x, const Family& fam, const std::vector<Mat<K>>& comps) {
    AddMap<K> f;
    f.src = {x};
    f.blk.resize(1);
    for (std::size_t r = 0; r < fam.size(); ++r)
        for (std::size_t i = 0; i < comps[r].rows(); ++i) {
            f.tgt.push_back(fam[r]);
            auto row = comps[r].row(i);
            f.blk[0].emplace_back(row.begin(), row.end());
        }
    (void)cat;
    return f;
}

template <class K>
AddMap<K> assemble_right(Catalog<K>& cat, std::size_t x, const Family& fam, const std::vector<Mat<K>>& comps) {
    AddMap<K> f;
    f.tgt = {x};
    for (std::size_t r = 0; r < fam.size(); ++r)
        for (std::size_t i = 0; i < comps[r].rows(); ++i) {
            f.src.push_back(fam[r]);
            auto row = comps[r].row(i);
            f.blk.push_back({std::vector<K>(row.begin(), row.end())});
        }
    (void)cat;
    return f;
}

}  // namespace detail

/// Minimal left approximation X -> U of an entry; with `radical_only` and X
/// in the family this is the source map of X.
template <class K>
AddMap<K> minimal_left_approximation(Catalog<K>& cat, std::size_t x, const Family& fam, bool radical_only = false) {
    std::vector<Mat<K>> start(fam.size()), comps(fam.size());
    for (std::size_t r = 0; r < fam.size(); ++r)
        start[r] = radical_only ? cat.radical(x, fam[r]) : whole(cat, x, fam[r]);
    for (std::size_t r = 0; r < fam.size(); ++r) {
        std::size_t n = cat.dim(x, fam[r]);
        Mat<K> sub(0, n);
        if (n == 0) {
            comps[r] = sub;
            continue;
        }
        for (std::size_t s = 0; s < fam.size(); ++s) {
            if (start[s].rows() == 0 || cat.dim(fam[s], fam[r]) == 0) continue;
            sub = vstack(sub, products(cat, x, fam[s], fam[r], start[s], cat.radical(fam[s], fam[r])));
        }
        comps[r] = complement_rows(start[r], sub);
    }
    return detail::assemble_left(cat, x, fam, comps);
}

template <class K>
AddMap<K> minimal_right_approximation(Catalog<K>& cat, std::size_t x, const Family& fam, bool radical_only = false) {
    std::vector<Mat<K>> start(fam.size()), comps(fam.size());
    for (std::size_t r = 0; r < fam.size(); ++r)
        start[r] = radical_only ? cat.radical(fam[r], x) : whole(cat, fam[r], x);
    for (std::size_t r = 0; r < fam.size(); ++r) {
        std::size_t n = cat.dim(fam[r], x);
        Mat<K> sub(0, n);
        if (n == 0) {
            comps[r] = sub;
            continue;
        }
        for (std::size_t s = 0; s < fam.size(); ++s) {
            if (start[s].rows() == 0 || cat.dim(fam[r], fam[s]) == 0) continue;
            sub = vstack(sub, products(cat, fam[r], fam[s], x, cat.radical(fam[r], fam[s]), start[s]));
        }
        comps[r] = complement_rows(start[r], sub);
    }
    return detail::assemble_right(cat, x, fam, comps);
}

template <class K>
AddMap<K> source_map(Catalog<K>& cat, std::size_t x, const Family& fam) {
    return minimal_left_approximation(cat, x, fam, true);
}

template <class K>
AddMap<K> sink_map(Catalog<K>& cat, std::size_t x, const Family& fam) {
    return minimal_right_approximation(cat, x, fam, true);
}

/// Span of {f then h : h in Hom(U, V)} restricted to the V-component, in Hom(X, V) for f : X -> U.
template <class K>
Mat<K> factoring_left(Catalog<K>& cat, const AddMap<K>& f, std::size_t v) {
    ensure(f.src.size() == 1, "factoring_left: single source expected");
    std::size_t x = f.src[0];
    Mat<K> out(0, cat.dim(x, v));
    for (std::size_t c = 0; c < f.tgt.size(); ++c) {
        if (all_zero<K>(f.blk[0][c])) continue;
        out = vstack(out, products(cat, x, f.tgt[c], v, Mat<K>::row_vector(f.blk[0][c]), whole(cat, f.tgt[c], v)));
    }
    return out;
}

template <class K>
Mat<K> factoring_right(Catalog<K>& cat, const AddMap<K>& f, std::size_t v) {
    ensure(f.tgt.size() == 1, "factoring_right: single target expected");
    std::size_t x = f.tgt[0];
    Mat<K> out(0, cat.dim(v, x));
    for (std::size_t r = 0; r < f.src.size(); ++r) {
        if (all_zero<K>(f.blk[r][0])) continue;
        out = vstack(out, products(cat, v, f.src[r], x, whole(cat, v, f.src[r]), Mat<K>::row_vector(f.blk[r][0])));
    }
    return out;
}

/// Every map X -> U_r (or every radical map, with radical_only) factors through f.
template <class K>
bool is_left_approximation(Catalog<K>& cat, const AddMap<K>& f, const Family& fam, bool radical_only = false) {
    std::size_t x = f.src.at(0);
    for (auto u : fam) {
        Mat<K> need = radical_only ? cat.radical(x, u) : whole(cat, x, u);
        if (!contained_in(need, factoring_left(cat, f, u))) return false;
    }
    return true;
}

template <class K>
bool is_right_approximation(Catalog<K>& cat, const AddMap<K>& f, const Family& fam, bool radical_only = false) {
    std::size_t x = f.tgt.at(0);
    for (auto u : fam) {
        Mat<K> need = radical_only ? cat.radical(u, x) : whole(cat, u, x);
        if (!contained_in(need, factoring_right(cat, f, u))) return false;
    }
    return true;
}

/// Left minimality by summand cancellation: f : X -> D_1 + ... + D_m (indecomposable D_r)
/// is left minimal iff no component satisfies
///   f_r = sum_{s != r} f_s g_s + f_r rho,  g_s in Hom(D_s, D_r), rho in rad End(D_r).
template <class K>
bool is_left_minimal(Catalog<K>& cat, const AddMap<K>& f) {
    std::size_t x = f.src.at(0);
    for (std::size_t r = 0; r < f.tgt.size(); ++r) {
        std::size_t d = f.tgt[r];
        Mat<K> span(0, cat.dim(x, d));
        for (std::size_t s = 0; s < f.tgt.size(); ++s) {
            Mat<K> fs = Mat<K>::row_vector(f.blk[0][s]);
            Mat<K> g = s == r ? cat.radical(d, d) : whole(cat, f.tgt[s], d);
            span = vstack(span, products(cat, x, f.tgt[s], d, fs, g));
        }
        if (contained_in(Mat<K>::row_vector(f.blk[0][r]), span)) return false;
    }
    return true;
}

template <class K>
bool is_right_minimal(Catalog<K>& cat, const AddMap<K>& f) {
    std::size_t x = f.tgt.at(0);
    for (std::size_t r = 0; r < f.src.size(); ++r) {
        std::size_t d = f.src[r];
        Mat<K> span(0, cat.dim(d, x));
        for (std::size_t s = 0; s < f.src.size(); ++s) {
            Mat<K> fs = Mat<K>::row_vector(f.blk[s][0]);
            Mat<K> g = s == r ? cat.radical(d, d) : whole(cat, d, f.src[s]);
            span = vstack(span, products(cat, d, f.src[s], x, g, fs));
        }
        if (contained_in(Mat<K>::row_vector(f.blk[r][0]), span)) return false;
    }
    return true;
}

/// A map between family objects lies in the radical: diagonal blocks between
/// equal members have zero residue (distinct members are non-isomorphic).
template <class K>
bool is_radical(Catalog<K>& cat, const AddMap<K>& f) {
    for (std::size_t r = 0; r < f.src.size(); ++r)
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            if (f.src[r] != f.tgt[c] || all_zero<K>(f.blk[r][c])) continue;
            const auto& lam = cat.residue(f.src[r]);
            K s(0);
            for (std::size_t k = 0; k < lam.size(); ++k) s += f.blk[r][c][k] * lam[k];
            if (!is_zero(s)) return false;
        }
    return true;
}

/// Solves for g : src -> tgt with op(g) = rhs, op linear.
template <class K>
std::optional<AddMap<K>> solve_addmap(Catalog<K>& cat, const AddObj& src, const AddObj& tgt,
                                      const std::function<AddMap<K>(const AddMap<K>&)>& op, const AddMap<K>& rhs) {
    AddMap<K> g = AddMap<K>::zero(cat, src, tgt);
    std::size_t n = g.size();
    std::vector<K> b = rhs.flatten();
    if (n == 0) {
        if (all_zero<K>(b)) return g;
        return std::nullopt;
    }
    Mat<K> m(n, b.size());
    std::vector<K> unit(n, K(0));
    for (std::size_t k = 0; k < n; ++k) {
        unit[k] = K(1);
        g.unflatten(unit);
        auto v = op(g).flatten();
        for (std::size_t t = 0; t < v.size(); ++t) m(k, t) = v[t];
        unit[k] = K(0);
    }
    if (b.empty()) {
        g.unflatten(unit);
        return g;
    }
    auto s = solve_left(m, Mat<K>::row_vector(b));
    if (!s) return std::nullopt;
    auto row = s->row(0);
    g.unflatten(row);
    return g;
}

template <class K>
AddMap<K> inverse(Catalog<K>& cat, const AddMap<K>& h) {
    auto g = solve_addmap<K>(
        cat, h.tgt, h.src, [&](const AddMap<K>& y) { return compose(cat, h, y); }, AddMap<K>::identity(cat, h.src));
    if (!g || !(compose(cat, *g, h) == AddMap<K>::identity(cat, h.tgt)))
        throw Error(ErrorKind::Internal, "map is not invertible");
    return *g;
}

template <class K>
struct Decomposition {
    AddObj summands;
    AddMap<K> to;    // summands -> [c]
    AddMap<K> from;  // [c] -> summands, inverse of `to`
};

/// Writes an entry as a direct sum of family members, with an explicit
/// isomorphism. Multiplicities are ranks of the residue pairing
/// Hom(U, C) x Hom(C, U) -> k; throws NotInAddU when a summand is missing.
template <class K>
Decomposition<K> decompose(Catalog<K>& cat, std::size_t c, const Family& fam) {
    Decomposition<K> d;
    AddObj one{c};
    if (cat.dim(c, c) == 0) {
        d.to = AddMap<K>::zero(cat, {}, one);
        d.from = AddMap<K>::zero(cat, one, {});
        return d;
    }
    std::vector<std::vector<K>> ss, ts;
    for (auto u : fam) {
        std::size_t p = cat.dim(u, c), q = cat.dim(c, u);
        if (p == 0 || q == 0) continue;
        const auto& lam = cat.residue(u);
        Mat<K> pair(p, q);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j) {
                auto e = cat.compose(u, c, u, Mat<K>::identity(p).row(i), Mat<K>::identity(q).row(j));
                K s(0);
                for (std::size_t k = 0; k < lam.size(); ++k) s += e[k] * lam[k];
                pair(i, j) = s;
            }
        // independent rows, then independent columns among them
        std::vector<std::size_t> rows, cols;
        complement_rows(pair, Mat<K>(0, q), &rows);
        if (rows.empty()) continue;
        Mat<K> sel = pair.select_rows(rows);
        complement_rows(sel.transpose(), Mat<K>(0, rows.size()), &cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            d.summands.push_back(u);
            std::vector<K> sv(p, K(0)), tv(q, K(0));
            sv[rows[i]] = K(1);
            tv[cols[i]] = K(1);
            ss.push_back(sv);
            ts.push_back(tv);
        }
    }
    d.to = AddMap<K>::zero(cat, d.summands, one);
    AddMap<K> t = AddMap<K>::zero(cat, one, d.summands);
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        d.to.blk[i][0] = ss[i];
        t.blk[0][i] = ts[i];
    }
    AddMap<K> st = compose(cat, d.to, t);
    d.from = compose(cat, t, inverse(cat, st));
    if (!(compose(cat, d.from, d.to) == AddMap<K>::identity(cat, one)))
        throw Error(ErrorKind::NotInAddU, cat.name(c) + " has a summand outside the family");
    return d;
}

/// An isomorphism a -> b between entries, if one exists, found by decomposing b relative to {a}.
template <class K>
std::optional<std::vector<K>> find_isomorphism(Catalog<K>& cat, std::size_t a, std::size_t b) {
    if (a == b) return cat.identity(a);
    try {
        auto d = decompose(cat, b, Family{a});
        if (d.summands.size() != 1) return std::nullopt;
        return d.to.blk[0][0];
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInAddU || e.kind() == ErrorKind::DecompositionRequired) return std::nullopt;
        throw;
    }
}

}  // namespace angleforge
