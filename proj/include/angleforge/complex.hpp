#pragma once

// Bounded cochain complexes of right modules, chain maps, shifts, cones and
// Hom in the homotopy category.
//
// Conventions: d^i : X^i -> X^{i+1}, composition is diagrammatic (f then g is
// f * g), so the complex condition reads d^i d^{i+1} = 0 and a chain map
// satisfies f^i d_Y^i = d_X^i f^{i+1}. A homotopy h^i : X^i -> Y^{i-1} is a
// witness for f^i = d_X^i h^{i+1} + h^i d_Y^{i-1}.

#include <optional>
#include <vector>

#include "angleforge/module.hpp"

namespace angleforge {

template <class K>
struct Complex {
    AlgPtr<K> alg;
    int lo = 0;
    std::vector<Rep<K>> terms;
    std::vector<ModMap<K>> d;  // d[k] : terms[k] -> terms[k + 1]
    Rep<K> zero_term;

    Complex() = default;
    Complex(AlgPtr<K> a, int low, std::vector<Rep<K>> ts, std::vector<ModMap<K>> ds)
        : alg(a), lo(low), terms(std::move(ts)), d(std::move(ds)), zero_term(Rep<K>::zero(a)) {
        if (terms.empty() ? !d.empty() : d.size() + 1 != terms.size())
            throw Error(ErrorKind::DimensionMismatch, "complex: need one differential between consecutive terms");
    }

    static Complex zero(AlgPtr<K> a) { return Complex(a, 0, {}, {}); }
    static Complex stalk(const Rep<K>& m, int degree = 0) { return Complex(m.alg, degree, {m}, {}); }

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool in_range(int i) const { return !terms.empty() && i >= lo && i <= hi(); }
    const Rep<K>& term(int i) const { return in_range(i) ? terms[i - lo] : zero_term; }

    /// d^i : X^i -> X^{i+1}; a zero map where either side is outside the range.
    ModMap<K> diff(int i) const {
        if (in_range(i) && in_range(i + 1)) return d[i - lo];
        return ModMap<K>::zero(term(i), term(i + 1));
    }

    bool is_zero() const {
        for (const auto& t : terms)
            if (!t.is_zero()) return false;
        return true;
    }
    bool is_projective() const {
        for (const auto& t : terms)
            if (!t.explicit_projective) return false;
        return true;
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& t : terms) s += t.total();
        return s;
    }

    /// Drops zero terms at both ends.
    Complex trimmed() const {
        std::size_t a = 0, b = terms.size();
        while (a < b && terms[a].is_zero()) ++a;
        while (b > a && terms[b - 1].is_zero()) --b;
        if (a == b) return zero(alg);
        std::vector<Rep<K>> ts(terms.begin() + a, terms.begin() + b);
        std::vector<ModMap<K>> ds(d.begin() + a, d.begin() + (b - 1));
        return Complex(alg, lo + static_cast<int>(a), std::move(ts), std::move(ds));
    }
};

template <class K>
bool is_complex(const Complex<K>& x) {
    for (std::size_t k = 0; k + 1 < x.d.size(); ++k)
        if (!(x.d[k] * x.d[k + 1]).is_zero()) return false;
    for (std::size_t k = 0; k < x.d.size(); ++k)
        if (!is_module_map(x.d[k], x.terms[k], x.terms[k + 1])) return false;
    return true;
}

/// Degreewise maps f^i : X^i -> Y^i, stored over the degree range of X.
template <class K>
struct ChainMap {
    int lo = 0;
    std::vector<ModMap<K>> f;

    /// f^i, with the zero map outside the stored range.
    ModMap<K> at(int i, const Complex<K>& x, const Complex<K>& y) const {
        int k = i - lo;
        if (k >= 0 && k < static_cast<int>(f.size())) return f[k];
        return ModMap<K>::zero(x.term(i), y.term(i));
    }

    static ChainMap zero(const Complex<K>& x, const Complex<K>& y) {
        ChainMap c;
        c.lo = x.lo;
        for (int i = x.lo; i <= x.hi(); ++i) c.f.push_back(ModMap<K>::zero(x.term(i), y.term(i)));
        return c;
    }
    static ChainMap identity(const Complex<K>& x) {
        ChainMap c;
        c.lo = x.lo;
        for (const auto& t : x.terms) c.f.push_back(ModMap<K>::identity(t));
        return c;
    }

    ChainMap& operator+=(const ChainMap& o) {
        ensure(lo == o.lo && f.size() == o.f.size(), "chain map sum: ranges differ");
        for (std::size_t k = 0; k < f.size(); ++k) f[k] += o.f[k];
        return *this;
    }
    ChainMap& operator-=(const ChainMap& o) {
        ensure(lo == o.lo && f.size() == o.f.size(), "chain map difference: ranges differ");
        for (std::size_t k = 0; k < f.size(); ++k) f[k] -= o.f[k];
        return *this;
    }
    ChainMap& operator*=(const K& c) {
        for (auto& m : f) m *= c;
        return *this;
    }
    friend ChainMap operator+(ChainMap a, const ChainMap& b) { return a += b; }
    friend ChainMap operator-(ChainMap a, const ChainMap& b) { return a -= b; }
    friend ChainMap operator*(const K& c, ChainMap a) { return a *= c; }
    ChainMap operator-() const {
        ChainMap r = *this;
        for (auto& m : r.f) m = -m;
        return r;
    }
    friend bool operator==(const ChainMap& a, const ChainMap& b) { return a.lo == b.lo && a.f == b.f; }
    bool is_zero() const {
        for (const auto& m : f)
            if (!m.is_zero()) return false;
        return true;
    }
};

/// Re-indexes a chain map onto the full degree range of x (zero-padded).
template <class K>
ChainMap<K> normalize(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y) {
    ChainMap<K> c;
    c.lo = x.lo;
    for (int i = x.lo; i <= x.hi(); ++i) c.f.push_back(f.at(i, x, y));
    return c;
}

template <class K>
ChainMap<K> compose(const ChainMap<K>& f, const ChainMap<K>& g, const Complex<K>& x, const Complex<K>& y,
                    const Complex<K>& z) {
    ChainMap<K> c;
    c.lo = x.lo;
    for (int i = x.lo; i <= x.hi(); ++i) c.f.push_back(f.at(i, x, y) * g.at(i, y, z));
    return c;
}

template <class K>
bool is_chain_map(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y) {
    int a = std::min(x.lo, y.lo) - 1, b = std::max(x.hi(), y.hi()) + 1;
    if (x.terms.empty()) return true;
    for (int i = a; i <= b; ++i) {
        if (!x.in_range(i)) continue;
        auto fi = f.at(i, x, y);
        if (!is_module_map(fi, x.term(i), y.term(i))) return false;
        if (!(fi * y.diff(i) - x.diff(i) * f.at(i + 1, x, y)).is_zero()) return false;
    }
    return true;
}

/// h^i : X^i -> Y^{i-1}, stored over the degree range of X.
template <class K>
struct Homotopy {
    int lo = 0;
    std::vector<ModMap<K>> h;

    ModMap<K> at(int i, const Complex<K>& x, const Complex<K>& y) const {
        int k = i - lo;
        if (k >= 0 && k < static_cast<int>(h.size())) return h[k];
        return ModMap<K>::zero(x.term(i), y.term(i - 1));
    }
};

/// The chain map d_X h + h d_Y.
template <class K>
ChainMap<K> boundary_of(const Homotopy<K>& h, const Complex<K>& x, const Complex<K>& y) {
    ChainMap<K> c;
    c.lo = x.lo;
    for (int i = x.lo; i <= x.hi(); ++i)
        c.f.push_back(x.diff(i) * h.at(i + 1, x, y) + h.at(i, x, y) * y.diff(i - 1));
    return c;
}

template <class K>
bool is_homotopy(const Homotopy<K>& h, const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y) {
    return boundary_of(h, x, y) == normalize(f, x, y);
}

/// X[j]: (X[j])^i = X^{i+j}, differential multiplied by (-1)^j.
template <class K>
Complex<K> shift(const Complex<K>& x, int j) {
    Complex<K> r = x;
    r.lo = x.lo - j;
    if (j % 2 != 0)
        for (auto& m : r.d) m = -m;
    return r;
}

/// f[j] : X[j] -> Y[j], the same components without sign.
template <class K>
ChainMap<K> shift(const ChainMap<K>& f, int j) {
    ChainMap<K> r = f;
    r.lo = f.lo - j;
    return r;
}

template <class K>
Homotopy<K> shift(const Homotopy<K>& h, int j) {
    Homotopy<K> r = h;
    r.lo = h.lo - j;
    if (j % 2 != 0)
        for (auto& m : r.h) m = -m;
    return r;
}

/// cone(f) for f : X -> Y, with cone^i = X^{i+1} (+) Y^i and differential
/// [[-d_X, f], [0, d_Y]] on row vectors (x, y). The canonical maps are the
/// inclusion Y -> cone(f) and the projection cone(f) -> X[1].
template <class K>
struct Cone {
    Complex<K> obj;
    ChainMap<K> incl;  // Y -> cone
    ChainMap<K> proj;  // cone -> X[1]
};

template <class K>
Cone<K> cone(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y) {
    AlgPtr<K> alg = x.alg ? x.alg : y.alg;
    int lo, hi;
    if (x.terms.empty() && y.terms.empty()) {
        lo = 0;
        hi = -1;
    } else if (x.terms.empty()) {
        lo = y.lo;
        hi = y.hi();
    } else if (y.terms.empty()) {
        lo = x.lo - 1;
        hi = x.hi() - 1;
    } else {
        lo = std::min(x.lo - 1, y.lo);
        hi = std::max(x.hi() - 1, y.hi());
    }
    std::vector<Rep<K>> terms;
    std::vector<ModMap<K>> ds;
    for (int i = lo; i <= hi; ++i) terms.push_back(direct_sum(x.term(i + 1), y.term(i)));
    for (int i = lo; i < hi; ++i) {
        std::vector<Rep<K>> src{x.term(i + 1), y.term(i)}, tgt{x.term(i + 2), y.term(i + 1)};
        ds.push_back(block_map<K>(src, tgt,
                                  {{-x.diff(i + 1), f.at(i + 1, x, y)},
                                   {ModMap<K>::zero(y.term(i), x.term(i + 2)), y.diff(i)}}));
    }
    Cone<K> c;
    c.obj = Complex<K>(alg, lo, std::move(terms), std::move(ds));
    Complex<K> x1 = shift(x, 1);
    c.incl.lo = y.lo;
    for (int i = y.lo; i <= y.hi(); ++i)
        c.incl.f.push_back(block_map<K>({y.term(i)}, {x.term(i + 1), y.term(i)},
                                        {{ModMap<K>::zero(y.term(i), x.term(i + 1)), ModMap<K>::identity(y.term(i))}}));
    c.proj.lo = lo;
    for (int i = lo; i <= hi; ++i)
        c.proj.f.push_back(block_map<K>({x.term(i + 1), y.term(i)}, {x.term(i + 1)},
                                        {{ModMap<K>::identity(x.term(i + 1))},
                                         {ModMap<K>::zero(y.term(i), x.term(i + 1))}}));
    return c;
}

/// Direct sum of complexes with the canonical inclusions and projections.
template <class K>
struct SumComplex {
    Complex<K> obj;
    std::vector<ChainMap<K>> incl, proj;
};

template <class K>
SumComplex<K> direct_sum(const std::vector<Complex<K>>& xs, AlgPtr<K> alg) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& x : xs) {
        if (x.terms.empty()) continue;
        lo = any ? std::min(lo, x.lo) : x.lo;
        hi = any ? std::max(hi, x.hi()) : x.hi();
        any = true;
    }
    std::vector<Rep<K>> terms;
    std::vector<ModMap<K>> ds;
    for (int i = lo; i <= hi; ++i) {
        Rep<K> t = Rep<K>::zero(alg);
        for (const auto& x : xs) t = direct_sum(t, x.term(i));
        terms.push_back(std::move(t));
    }
    for (int i = lo; i < hi; ++i) {
        std::vector<Rep<K>> src, tgt;
        std::vector<std::vector<ModMap<K>>> parts(xs.size());
        for (const auto& x : xs) {
            src.push_back(x.term(i));
            tgt.push_back(x.term(i + 1));
        }
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = 0; b < xs.size(); ++b)
                parts[a].push_back(a == b ? xs[a].diff(i) : ModMap<K>::zero(xs[a].term(i), xs[b].term(i + 1)));
        ds.push_back(block_map<K>(src, tgt, parts));
    }
    SumComplex<K> s;
    s.obj = Complex<K>(alg, lo, std::move(terms), std::move(ds));
    for (std::size_t a = 0; a < xs.size(); ++a) {
        ChainMap<K> in, out;
        in.lo = xs[a].lo;
        out.lo = lo;
        for (int i = xs[a].lo; i <= xs[a].hi(); ++i) {
            std::vector<Rep<K>> parts_t;
            std::vector<ModMap<K>> row;
            for (std::size_t b = 0; b < xs.size(); ++b) {
                parts_t.push_back(xs[b].term(i));
                row.push_back(a == b ? ModMap<K>::identity(xs[a].term(i)) : ModMap<K>::zero(xs[a].term(i), xs[b].term(i)));
            }
            in.f.push_back(block_map<K>({xs[a].term(i)}, parts_t, {row}));
        }
        for (int i = lo; i <= hi; ++i) {
            std::vector<Rep<K>> parts_t;
            std::vector<std::vector<ModMap<K>>> col;
            for (std::size_t b = 0; b < xs.size(); ++b) {
                parts_t.push_back(xs[b].term(i));
                col.push_back({a == b ? ModMap<K>::identity(xs[a].term(i)) : ModMap<K>::zero(xs[b].term(i), xs[a].term(i))});
            }
            out.f.push_back(block_map<K>(parts_t, {xs[a].term(i)}, col));
        }
        s.incl.push_back(std::move(in));
        s.proj.push_back(std::move(out));
    }
    return s;
}

/// Hom_{K^b}(X, Y): chain maps modulo null-homotopic ones.
///
/// A chain map is flattened into the concatenated coordinates of its
/// components in Hom(X^i, Y^i). Cycles are the solutions of the chain
/// condition, boundaries the span of d_X h + h d_Y over a basis of the
/// homotopy spaces, and the returned basis is a deterministic complement.
template <class K>
class HomKb {
public:
    HomKb(const Complex<K>& x, const Complex<K>& y) : x_(x), y_(y) {
        if (!x.terms.empty() && !y.terms.empty()) {
            dlo_ = std::max(x.lo, y.lo);
            dhi_ = std::min(x.hi(), y.hi());
        }
        std::size_t n = 0;
        for (int i = dlo_; i <= dhi_; ++i) {
            comps_.push_back(hom_modules(x.term(i), y.term(i)));
            offset_.push_back(n);
            n += comps_.back().dim();
        }
        unknowns_ = n;
        // chain condition: columns are coordinates in Hom(X^j, Y^{j+1})
        std::vector<HomSpace<K>> cons;
        std::vector<int> cdeg;
        std::vector<std::size_t> coff;
        std::size_t ncons = 0;
        for (int j = dlo_ - 1; j <= dhi_; ++j) {
            if (!x.in_range(j) || !y.in_range(j + 1)) continue;
            cons.push_back(hom_modules(x.term(j), y.term(j + 1)));
            cdeg.push_back(j);
            coff.push_back(ncons);
            ncons += cons.back().dim();
        }
        Mat<K> c(n, ncons);
        for (int i = dlo_; i <= dhi_; ++i) {
            const auto& hs = comps_[i - dlo_];
            for (std::size_t k = 0; k < hs.dim(); ++k) {
                std::size_t row = offset_[i - dlo_] + k;
                const auto& b = hs.basis[k];
                for (std::size_t q = 0; q < cons.size(); ++q) {
                    int j = cdeg[q];
                    ModMap<K> v;
                    if (j == i) v = -(b * y.diff(i));
                    else if (j == i - 1) v = x.diff(i - 1) * b;
                    else continue;
                    auto cc = cons[q].coords(v);
                    for (std::size_t t = 0; t < cc.size(); ++t) c(row, coff[q] + t) = cc[t];
                }
            }
        }
        cycles_ = ncons ? left_kernel(c) : Mat<K>::identity(n);
        if (cycles_.rows() == 0) cycles_ = Mat<K>(0, n);
        // homotopy generators
        htop_ = Mat<K>(0, n);
        for (int i = x.lo; i <= x.hi(); ++i) {
            if (!y.in_range(i - 1)) continue;
            auto hs = hom_modules(x.term(i), y.term(i - 1));
            for (const auto& h : hs.basis) {
                std::vector<K> v(n, K(0));
                if (i >= dlo_ && i <= dhi_) add_coords(v, i, h * y.diff(i - 1));
                if (i - 1 >= dlo_ && i - 1 <= dhi_) add_coords(v, i - 1, x.diff(i - 1) * h);
                htop_.append_row(v);
                hgen_.push_back({i, h});
            }
        }
        boundaries_ = htop_.rows() ? row_space(htop_) : Mat<K>(0, n);
        reps_ = complement_rows(cycles_, boundaries_);
        if (reps_.rows() == 0) reps_ = Mat<K>(0, n);
        Mat<K> all = vstack(reps_, boundaries_);
        if (all.rows()) lc_ = LinearCoordinates<K>(all);
    }

    std::size_t dim() const { return reps_.rows(); }
    std::size_t cycles_dim() const { return cycles_.rows(); }
    std::size_t boundaries_dim() const { return boundaries_.rows(); }
    const Complex<K>& source() const { return x_; }
    const Complex<K>& target() const { return y_; }

    /// Flattened component coordinates of a chain map.
    std::vector<K> flatten(const ChainMap<K>& f) const {
        std::vector<K> v(unknowns_, K(0));
        for (int i = dlo_; i <= dhi_; ++i) add_coords(v, i, f.at(i, x_, y_));
        return v;
    }

    ChainMap<K> from_flat(std::span<const K> v) const {
        ChainMap<K> f = ChainMap<K>::zero(x_, y_);
        for (int i = dlo_; i <= dhi_; ++i) {
            const auto& hs = comps_[i - dlo_];
            f.f[i - x_.lo] = hs.combine(v.subspan(offset_[i - dlo_], hs.dim()));
        }
        return f;
    }

    /// Representative of the k-th basis class.
    ChainMap<K> basis(std::size_t k) const { return from_flat(reps_.row(k)); }

    ChainMap<K> combine(std::span<const K> c) const {
        std::vector<K> v(unknowns_, K(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (is_zero(c[k])) continue;
            for (std::size_t j = 0; j < unknowns_; ++j) v[j] += c[k] * reps_(k, j);
        }
        return from_flat(v);
    }

    /// Class coordinates of a chain map (must be a chain map).
    std::vector<K> coords(const ChainMap<K>& f) const {
        if (lc_.dim() == 0) return {};
        auto c = lc_.coords(flatten(f));
        c.resize(dim());
        return c;
    }

    bool is_null(const ChainMap<K>& f) const {
        auto c = coords(f);
        for (const auto& v : c)
            if (!is_zero(v)) return false;
        return true;
    }

    /// A witness h with f = d h + h d, or nullopt.
    std::optional<Homotopy<K>> homotopy(const ChainMap<K>& f) const {
        Homotopy<K> h;
        h.lo = x_.lo;
        for (int i = x_.lo; i <= x_.hi(); ++i) h.h.push_back(ModMap<K>::zero(x_.term(i), y_.term(i - 1)));
        auto v = flatten(f);
        if (all_zero<K>(v)) return h;
        if (htop_.rows() == 0) return std::nullopt;
        auto s = solve_left(htop_, Mat<K>::row_vector(v));
        if (!s) return std::nullopt;
        for (std::size_t r = 0; r < hgen_.size(); ++r)
            if (!is_zero((*s)(0, r))) h.h[hgen_[r].first - x_.lo] += (*s)(0, r) * hgen_[r].second;
        return h;
    }

private:
    void add_coords(std::vector<K>& v, int i, const ModMap<K>& m) const {
        const auto& hs = comps_[i - dlo_];
        auto c = hs.coords(m);
        for (std::size_t t = 0; t < c.size(); ++t) v[offset_[i - dlo_] + t] += c[t];
    }

    Complex<K> x_, y_;
    int dlo_ = 0, dhi_ = -1;
    std::vector<HomSpace<K>> comps_;
    std::vector<std::size_t> offset_;
    std::size_t unknowns_ = 0;
    Mat<K> cycles_, boundaries_, reps_, htop_;
    std::vector<std::pair<int, ModMap<K>>> hgen_;
    LinearCoordinates<K> lc_;
};

/// Witness that f is null-homotopic, or nullopt.
template <class K>
std::optional<Homotopy<K>> null_homotopy(const ChainMap<K>& f, const Complex<K>& x, const Complex<K>& y) {
    return HomKb<K>(x, y).homotopy(f);
}

template <class K>
bool homotopic(const ChainMap<K>& f, const ChainMap<K>& g, const Complex<K>& x, const Complex<K>& y) {
    return null_homotopy<K>(normalize(f, x, y) - normalize(g, x, y), x, y).has_value();
}

/// Cohomology dimensions per degree and vertex, by ranks.
template <class K>
std::vector<std::vector<std::size_t>> cohomology_dims(const Complex<K>& x) {
    std::vector<std::vector<std::size_t>> out;
    for (int i = x.lo; i <= x.hi(); ++i) {
        const auto& t = x.term(i);
        std::vector<std::size_t> row;
        auto din = x.diff(i - 1), dout = x.diff(i);
        for (std::size_t s = 0; s < t.dims.size(); ++s)
            row.push_back(t.dims[s] - rank(dout.b[s]) - rank(din.b[s]));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace angleforge
