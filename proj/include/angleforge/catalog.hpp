#pragma once

// Named objects of K^b(proj A) with cached Hom spaces, and additive objects
// (lists of catalog entries) with block morphisms in Hom_{K^b} coordinates.
//
// Composition, the functor F and the suspension act on coordinates through
// cached matrices. Objects obtained by one step of F^{+-1} or by a shift are
// looked up by (parent, step) and deduplicated by literal equality of
// complexes. F^i(F^j X) and F^{i+j}X therefore share an id, and so do
// F(X[j]) and F(X)[j] whenever the two complexes coincide.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "angleforge/functor.hpp"

namespace angleforge {

template <class K>
bool same_complex(const Complex<K>& a, const Complex<K>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    if (a.terms.empty()) return true;
    if (a.lo != b.lo) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
        const auto &s = a.terms[k], &t = b.terms[k];
        if (s.dims != t.dims || s.explicit_projective != t.explicit_projective || s.tops != t.tops || s.act != t.act)
            return false;
    }
    return a.d == b.d;
}

template <class K>
class Catalog {
public:
    Catalog(Functor<K> f, int suspension) : f_(std::move(f)), susp_(suspension) {}

    const Functor<K>& functor() const { return f_; }
    const AlgPtr<K>& algebra() const { return f_.algebra(); }
    int suspension() const { return susp_; }
    std::size_t size() const { return entries_.size(); }

    /// Adds a named object; an object equal to an existing one gets the name as an alias.
    std::size_t add(const std::string& name, Complex<K> c) {
        if (by_name_.count(name)) throw Error(ErrorKind::Input, "duplicate object name " + name);
        std::size_t id = intern(std::move(c), {name, 0, 0});
        by_name_[name] = id;
        return id;
    }

    /// Adds an object under a fresh name derived from `base` (base, base#2, ...).
    std::size_t add_fresh(const std::string& base, Complex<K> c) {
        std::string name = base;
        for (int k = 2; by_name_.count(name); ++k) name = base + "#" + std::to_string(k);
        return add(name, std::move(c));
    }

    /// Gives an entry a new primary name (the old one stays as an alias).
    void rename(std::size_t id, const std::string& name) {
        auto it = by_name_.find(name);
        if (it != by_name_.end() && it->second != id) throw Error(ErrorKind::Input, "duplicate object name " + name);
        entries_[id].label = {name, 0, 0};
        by_name_[name] = id;
    }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t id(const std::string& name) const {
        auto r = find(name);
        if (!r) throw Error(ErrorKind::Input, "unknown object " + name);
        return *r;
    }
    std::string name(std::size_t id) const { return entries_[id].label.text(); }
    const Complex<K>& obj(std::size_t id) const { return entries_[id].c; }

    /// F^k applied to an entry.
    std::size_t translate(std::size_t id, int k) {
        for (; k > 0; --k) id = step(id, 1).id;
        for (; k < 0; ++k) id = step(id, -1).id;
        return id;
    }

    /// X[j].
    std::size_t shift(std::size_t id, int j) {
        if (j == 0) return id;
        auto key = std::make_pair(id, j);
        if (auto it = shifts_.find(key); it != shifts_.end()) return it->second;
        const auto& e = entries_[id].label;
        Label l = e.shift == 0 && e.fpow == 0 ? Label{e.root, 0, j} : Label{e.root, e.fpow, e.shift + j};
        std::size_t r = intern(angleforge::shift(entries_[id].c, j), l);
        shifts_[key] = r;
        return r;
    }

    /// Sigma^k = [k * suspension].
    std::size_t sigma(std::size_t id, int k = 1) { return shift(id, k * susp_); }

    const HomKb<K>& hom(std::size_t a, std::size_t b) {
        auto key = std::make_pair(a, b);
        auto it = homs_.find(key);
        if (it == homs_.end()) it = homs_.emplace(key, std::make_unique<HomKb<K>>(obj(a), obj(b))).first;
        return *it->second;
    }
    std::size_t dim(std::size_t a, std::size_t b) { return hom(a, b).dim(); }

    std::vector<K> coords(std::size_t a, std::size_t b, const ChainMap<K>& f) { return hom(a, b).coords(f); }
    ChainMap<K> map(std::size_t a, std::size_t b, std::span<const K> c) { return hom(a, b).combine(c); }

    /// Composition table: t[i] row j holds the coordinates of (basis i of
    /// Hom(a,b)) then (basis j of Hom(b,c)) in Hom(a,c).
    const std::vector<Mat<K>>& compose_table(std::size_t a, std::size_t b, std::size_t c) {
        std::array<std::size_t, 3> key{a, b, c};
        if (auto it = comp_.find(key); it != comp_.end()) return it->second;
        const auto& hab = hom(a, b);
        const auto& hbc = hom(b, c);
        const auto& hac = hom(a, c);
        std::vector<Mat<K>> t;
        for (std::size_t i = 0; i < hab.dim(); ++i) {
            Mat<K> m(hbc.dim(), hac.dim());
            ChainMap<K> f = hab.basis(i);
            for (std::size_t j = 0; j < hbc.dim(); ++j) {
                auto v = hac.coords(angleforge::compose(f, hbc.basis(j), obj(a), obj(b), obj(c)));
                for (std::size_t k = 0; k < v.size(); ++k) m(j, k) = v[k];
            }
            t.push_back(std::move(m));
        }
        return comp_.emplace(key, std::move(t)).first->second;
    }

    /// x in Hom(a,b), y in Hom(b,c): coordinates of x then y.
    std::vector<K> compose(std::size_t a, std::size_t b, std::size_t c, std::span<const K> x, std::span<const K> y) {
        std::vector<K> r(dim(a, c), K(0));
        if (r.empty()) return r;
        const auto& t = compose_table(a, b, c);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (is_zero(y[j])) continue;
                K s = x[i] * y[j];
                for (std::size_t k = 0; k < r.size(); ++k)
                    if (!is_zero(t[i](j, k))) r[k] += s * t[i](j, k);
            }
        }
        return r;
    }

    /// Coordinates of the identity of a.
    const std::vector<K>& identity(std::size_t a) {
        if (auto it = ids_.find(a); it != ids_.end()) return it->second;
        return ids_.emplace(a, coords(a, a, ChainMap<K>::identity(obj(a)))).first->second;
    }

    /// Matrix of F^k : Hom(a,b) -> Hom(F^k a, F^k b) on coordinates (rows = source basis).
    Mat<K> translate_matrix(std::size_t a, std::size_t b, int k) {
        if (k < 0 && !f_.strictly_invertible())
            throw Error(ErrorKind::Unsupported, "negative powers of " + f_.name() + " on morphisms");
        Mat<K> m = Mat<K>::identity(dim(a, b));
        int s = k > 0 ? 1 : -1;
        for (int i = 0; i != k; i += s) {
            m = m * step_matrix(a, b, s);
            a = translate(a, s);
            b = translate(b, s);
        }
        return m;
    }

    /// Matrix of [j] : Hom(a,b) -> Hom(a[j], b[j]).
    Mat<K> shift_matrix(std::size_t a, std::size_t b, int j) {
        auto key = std::array<std::size_t, 3>{a, b, static_cast<std::size_t>(j + (1 << 20))};
        if (auto it = shiftm_.find(key); it != shiftm_.end()) return it->second;
        std::size_t sa = shift(a, j), sb = shift(b, j);
        const auto& h = hom(a, b);
        Mat<K> m(h.dim(), dim(sa, sb));
        for (std::size_t i = 0; i < h.dim(); ++i) {
            auto v = coords(sa, sb, angleforge::shift(h.basis(i), j));
            for (std::size_t t = 0; t < v.size(); ++t) m(i, t) = v[t];
        }
        return shiftm_.emplace(key, m).first->second;
    }

    /// Residue End(a) -> k of an object with local endomorphism ring:
    /// lambda(x) is the scalar with x - lambda(x) id nilpotent. Uses
    /// Tr(L_x) = dim * lambda(x), valid in characteristic 0 and p > dim.
    const std::vector<K>& residue(std::size_t a) {
        if (auto it = residue_.find(a); it != residue_.end()) return it->second;
        std::size_t n = dim(a, a);
        if (n == 0) throw Error(ErrorKind::DecompositionRequired, name(a) + " is zero");
        const auto& t = compose_table(a, a, a);
        std::vector<K> tr(n, K(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) tr[i] += t[i](j, j);
        // local iff the trace form has rank one
        Mat<K> gram(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) gram(i, j) += t[i](j, k) * tr[k];
        if (rank(gram) != 1)
            throw Error(ErrorKind::DecompositionRequired, name(a) + " does not have a local endomorphism ring");
        std::vector<K> lam(n);
        K inv = K(1) / K(static_cast<long>(n));
        for (std::size_t i = 0; i < n; ++i) lam[i] = tr[i] * inv;
        return residue_.emplace(a, std::move(lam)).first->second;
    }

    /// Basis of rad(a, b) in Hom(a,b) coordinates: everything for distinct
    /// entries (assumed non-isomorphic), the kernel of the residue for a = b.
    Mat<K> radical(std::size_t a, std::size_t b) {
        std::size_t n = dim(a, b);
        if (a != b) return Mat<K>::identity(n);
        const auto& lam = residue(a);
        Mat<K> col(n, 1);
        for (std::size_t i = 0; i < n; ++i) col(i, 0) = lam[i];
        Mat<K> k = left_kernel(col);
        return k.rows() ? k : Mat<K>(0, n);
    }

    /// The comparison F^i(Sigma X) -> Sigma F^i(X); only the identity case is supported.
    void require_strict_delta(std::size_t x, int i) {
        if (translate(sigma(x), i) != sigma(translate(x, i)))
            throw Error(ErrorKind::Unsupported, "F^" + std::to_string(i) + " does not commute strictly with the suspension on " +
                                                    name(x));
    }

private:
    struct Label {
        std::string root;
        int fpow = 0, shift = 0;
        std::string text() const {
            std::string s = root;
            if (fpow == 1) s = "F(" + s + ")";
            else if (fpow != 0) s = "F^" + std::to_string(fpow) + "(" + s + ")";
            if (shift != 0) s += "[" + std::to_string(shift) + "]";
            return s;
        }
    };
    struct Entry {
        Label label;
        Complex<K> c;
    };
    struct Step {
        std::size_t id;
        typename Functor<K>::Image image;
    };

    std::size_t intern(Complex<K> c, Label l) {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (same_complex(entries_[i].c, c)) return i;
        entries_.push_back({std::move(l), std::move(c)});
        return entries_.size() - 1;
    }

    const Step& step(std::size_t id, int s) {
        auto key = std::make_pair(id, s);
        if (auto it = steps_.find(key); it != steps_.end()) return it->second;
        auto img = s > 0 ? f_.apply(obj(id)) : f_.apply_inverse(obj(id));
        const auto& e = entries_[id].label;
        Label l = e.shift == 0 ? Label{e.root, e.fpow + s, 0} : Label{e.text(), s, 0};
        std::size_t r = intern(img.obj, l);
        return steps_.emplace(key, Step{r, std::move(img)}).first->second;
    }

    const Mat<K>& step_matrix(std::size_t a, std::size_t b, int s) {
        auto key = std::array<std::size_t, 3>{a, b, static_cast<std::size_t>(s + 1)};
        if (auto it = stepm_.find(key); it != stepm_.end()) return it->second;
        const auto& sa = step(a, s);
        const auto& sb = step(b, s);
        std::size_t ta = sa.id, tb = sb.id;
        const auto& h = hom(a, b);
        Mat<K> m(h.dim(), dim(ta, tb));
        for (std::size_t i = 0; i < h.dim(); ++i) {
            ChainMap<K> f = s > 0 ? f_.apply(h.basis(i), obj(a), obj(b), sa.image, sb.image)
                                  : f_.apply_inverse(h.basis(i), obj(a), obj(b), sa.image, sb.image);
            auto v = coords(ta, tb, f);
            for (std::size_t t = 0; t < v.size(); ++t) m(i, t) = v[t];
        }
        return stepm_.emplace(key, m).first->second;
    }

    Functor<K> f_;
    int susp_;
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> by_name_;
    std::map<std::pair<std::size_t, int>, Step> steps_;
    std::map<std::pair<std::size_t, int>, std::size_t> shifts_;
    std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<HomKb<K>>> homs_;
    std::map<std::array<std::size_t, 3>, std::vector<Mat<K>>> comp_;
    std::map<std::array<std::size_t, 3>, Mat<K>> stepm_, shiftm_;
    std::map<std::size_t, std::vector<K>> ids_, residue_;
};

/// An object of add(catalog): a list of entries, repetitions allowed.
using AddObj = std::vector<std::size_t>;

/// A morphism between additive objects; blk[r][c] are coordinates in Hom(src[r], tgt[c]).
template <class K>
struct AddMap {
    AddObj src, tgt;
    std::vector<std::vector<std::vector<K>>> blk;

    static AddMap zero(Catalog<K>& cat, const AddObj& s, const AddObj& t) {
        AddMap m{s, t, {}};
        m.blk.resize(s.size());
        for (std::size_t r = 0; r < s.size(); ++r)
            for (std::size_t c = 0; c < t.size(); ++c) m.blk[r].emplace_back(cat.dim(s[r], t[c]), K(0));
        return m;
    }
    static AddMap identity(Catalog<K>& cat, const AddObj& x) {
        AddMap m = zero(cat, x, x);
        for (std::size_t r = 0; r < x.size(); ++r) m.blk[r][r] = cat.identity(x[r]);
        return m;
    }

    bool is_zero() const {
        for (const auto& row : blk)
            for (const auto& v : row)
                if (!all_zero<K>(v)) return false;
        return true;
    }
    AddMap& operator+=(const AddMap& o) {
        ensure(src == o.src && tgt == o.tgt, "AddMap sum: shapes differ");
        for (std::size_t r = 0; r < blk.size(); ++r)
            for (std::size_t c = 0; c < blk[r].size(); ++c)
                for (std::size_t k = 0; k < blk[r][c].size(); ++k) blk[r][c][k] += o.blk[r][c][k];
        return *this;
    }
    AddMap& operator*=(const K& s) {
        for (auto& row : blk)
            for (auto& v : row)
                for (auto& x : v) x *= s;
        return *this;
    }
    friend AddMap operator+(AddMap a, const AddMap& b) { return a += b; }
    friend AddMap operator-(AddMap a, const AddMap& b) {
        AddMap nb = b;
        nb *= K(-1);
        return a += nb;
    }
    friend AddMap operator*(const K& s, AddMap a) { return a *= s; }
    friend bool operator==(const AddMap& a, const AddMap& b) {
        return a.src == b.src && a.tgt == b.tgt && a.blk == b.blk;
    }

    /// All coordinates, blocks row by row.
    std::vector<K> flatten() const {
        std::vector<K> v;
        for (const auto& row : blk)
            for (const auto& b : row) v.insert(v.end(), b.begin(), b.end());
        return v;
    }
    void unflatten(std::span<const K> v) {
        std::size_t o = 0;
        for (auto& row : blk)
            for (auto& b : row)
                for (auto& x : b) x = v[o++];
    }
    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& row : blk)
            for (const auto& b : row) n += b.size();
        return n;
    }
};

/// f then g.
template <class K>
AddMap<K> compose(Catalog<K>& cat, const AddMap<K>& f, const AddMap<K>& g) {
    ensure(f.tgt == g.src, "AddMap composition: objects differ");
    AddMap<K> h = AddMap<K>::zero(cat, f.src, g.tgt);
    for (std::size_t r = 0; r < f.src.size(); ++r)
        for (std::size_t m = 0; m < f.tgt.size(); ++m) {
            if (all_zero<K>(f.blk[r][m])) continue;
            for (std::size_t c = 0; c < g.tgt.size(); ++c) {
                if (all_zero<K>(g.blk[m][c])) continue;
                auto v = cat.compose(f.src[r], f.tgt[m], g.tgt[c], f.blk[r][m], g.blk[m][c]);
                for (std::size_t k = 0; k < v.size(); ++k) h.blk[r][c][k] += v[k];
            }
        }
    return h;
}

inline AddObj concat(const AddObj& a, const AddObj& b) {
    AddObj r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// Block matrix of maps assembled from parts: parts[i][j] : rows[i] -> cols[j].
template <class K>
AddMap<K> block_addmap(Catalog<K>& cat, const std::vector<AddObj>& rows, const std::vector<AddObj>& cols,
                       const std::vector<std::vector<std::optional<AddMap<K>>>>& parts) {
    AddObj s, t;
    for (const auto& r : rows) s = concat(s, r);
    for (const auto& c : cols) t = concat(t, c);
    AddMap<K> m = AddMap<K>::zero(cat, s, t);
    std::size_t ro = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t co = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (parts[i][j]) {
                const auto& p = *parts[i][j];
                ensure(p.src == rows[i] && p.tgt == cols[j], "block_addmap: part shape");
                for (std::size_t r = 0; r < rows[i].size(); ++r)
                    for (std::size_t c = 0; c < cols[j].size(); ++c) m.blk[ro + r][co + c] = p.blk[r][c];
            }
            co += cols[j].size();
        }
        ro += rows[i].size();
    }
    return m;
}

/// Restriction of f to a range of source and target summands.
template <class K>
AddMap<K> sub_map(const AddMap<K>& f, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
    AddMap<K> m;
    m.src.assign(f.src.begin() + r0, f.src.begin() + r0 + nr);
    m.tgt.assign(f.tgt.begin() + c0, f.tgt.begin() + c0 + nc);
    m.blk.resize(nr);
    for (std::size_t r = 0; r < nr; ++r) m.blk[r].assign(f.blk[r0 + r].begin() + c0, f.blk[r0 + r].begin() + c0 + nc);
    return m;
}

template <class K>
AddObj translate(Catalog<K>& cat, const AddObj& x, int k) {
    AddObj r;
    for (auto a : x) r.push_back(cat.translate(a, k));
    return r;
}

template <class K>
AddObj shift(Catalog<K>& cat, const AddObj& x, int j) {
    AddObj r;
    for (auto a : x) r.push_back(cat.shift(a, j));
    return r;
}

template <class K>
AddObj sigma(Catalog<K>& cat, const AddObj& x, int k = 1) {
    return shift(cat, x, k * cat.suspension());
}

template <class K>
AddMap<K> translate(Catalog<K>& cat, const AddMap<K>& f, int k) {
    AddMap<K> m = AddMap<K>::zero(cat, translate(cat, f.src, k), translate(cat, f.tgt, k));
    for (std::size_t r = 0; r < f.src.size(); ++r)
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            if (all_zero<K>(f.blk[r][c])) continue;
            m.blk[r][c] = vec_times(f.blk[r][c], cat.translate_matrix(f.src[r], f.tgt[c], k));
        }
    return m;
}

/// f[j], without sign.
template <class K>
AddMap<K> shift(Catalog<K>& cat, const AddMap<K>& f, int j) {
    AddMap<K> m = AddMap<K>::zero(cat, shift(cat, f.src, j), shift(cat, f.tgt, j));
    for (std::size_t r = 0; r < f.src.size(); ++r)
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            if (all_zero<K>(f.blk[r][c])) continue;
            m.blk[r][c] = vec_times(f.blk[r][c], cat.shift_matrix(f.src[r], f.tgt[c], j));
        }
    return m;
}

template <class K>
AddMap<K> sigma(Catalog<K>& cat, const AddMap<K>& f, int k = 1) {
    return shift(cat, f, k * cat.suspension());
}

/// The direct sum complex of an additive object, with inclusions and projections.
template <class K>
SumComplex<K> realize(Catalog<K>& cat, const AddObj& x) {
    std::vector<Complex<K>> cs;
    for (auto a : x) cs.push_back(cat.obj(a));
    return direct_sum(cs, cat.algebra());
}

/// The chain map between direct sum complexes represented by f.
template <class K>
ChainMap<K> to_chain_map(Catalog<K>& cat, const AddMap<K>& f, const SumComplex<K>& s, const SumComplex<K>& t) {
    ChainMap<K> out = ChainMap<K>::zero(s.obj, t.obj);
    for (std::size_t r = 0; r < f.src.size(); ++r)
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            if (all_zero<K>(f.blk[r][c])) continue;
            const Complex<K>& a = cat.obj(f.src[r]);
            const Complex<K>& b = cat.obj(f.tgt[c]);
            ChainMap<K> m = cat.map(f.src[r], f.tgt[c], f.blk[r][c]);
            ChainMap<K> g = compose(compose(s.proj[r], m, s.obj, a, b), t.incl[c], s.obj, b, t.obj);
            out += normalize(g, s.obj, t.obj);
        }
    return out;
}

/// Coordinates of a chain map between the realizations of x and y.
template <class K>
AddMap<K> from_chain_map(Catalog<K>& cat, const ChainMap<K>& g, const AddObj& x, const SumComplex<K>& s,
                         const AddObj& y, const SumComplex<K>& t) {
    AddMap<K> m = AddMap<K>::zero(cat, x, y);
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < y.size(); ++c) {
            const Complex<K>& a = cat.obj(x[r]);
            const Complex<K>& b = cat.obj(y[c]);
            ChainMap<K> h = compose(compose(s.incl[r], g, a, s.obj, t.obj), t.proj[c], a, t.obj, b);
            m.blk[r][c] = cat.coords(x[r], y[c], h);
        }
    return m;
}

}  // namespace angleforge
