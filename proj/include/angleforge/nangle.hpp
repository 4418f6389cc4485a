#pragma once

// n-Sigma-sequences in K^b(proj A) over a catalog, the staircase of cones that
// builds an n-angle from its first map, padded angles, exactness against
// probe objects, completion of partial morphisms and Auslander-Reiten checks.
//
// A sequence is X_1 -> X_2 -> ... -> X_n -> Sigma X_1 with objects in
// add(catalog) and maps in Hom_{K^b} coordinates, so "commutes up to
// homotopy" is equality of coordinates.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "angleforge/approx.hpp"

namespace angleforge {

template <class K>
struct NSigmaSequence {
    std::vector<AddObj> x;       // X_1 .. X_n
    std::vector<AddMap<K>> a;    // alpha_1 .. alpha_n, alpha_n : X_n -> Sigma X_1
    std::size_t n() const { return x.size(); }
};

/// Checks shapes and that all composites alpha_i alpha_{i+1} (including
/// alpha_{n-1} alpha_n and alpha_n Sigma(alpha_1)) vanish in K^b.
template <class K>
void validate_shape(Catalog<K>& cat, const NSigmaSequence<K>& s) {
    std::size_t n = s.n();
    if (n < 3) throw Error(ErrorKind::Input, "an n-Sigma-sequence needs n >= 3");
    if (s.a.size() != n) throw Error(ErrorKind::DimensionMismatch, "need one map per object");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (s.a[i].src != s.x[i] || s.a[i].tgt != s.x[i + 1])
            throw Error(ErrorKind::DimensionMismatch, "map " + std::to_string(i + 1) + " has the wrong shape");
    if (s.a[n - 1].src != s.x[n - 1] || s.a[n - 1].tgt != sigma(cat, s.x[0]))
        throw Error(ErrorKind::DimensionMismatch, "last map must end in Sigma X_1");
}

template <class K>
void validate(Catalog<K>& cat, const NSigmaSequence<K>& s) {
    validate_shape(cat, s);
    std::size_t n = s.n();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!compose(cat, s.a[i], s.a[i + 1]).is_zero())
            throw Error(ErrorKind::NotNullHomotopic,
                        "composite of maps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " is not null-homotopic");
    if (!compose(cat, s.a[n - 1], sigma(cat, s.a[0])).is_zero())
        throw Error(ErrorKind::NotNullHomotopic, "composite of the last map and Sigma of the first is not null-homotopic");
}

/// Removes summand `entry` from the middle term k (1 <= k <= n-2), restricting
/// the adjacent maps. The result is usually not an n-Sigma-sequence any more;
/// it serves as a corrupted input.
template <class K>
NSigmaSequence<K> drop_summand(const NSigmaSequence<K>& s, std::size_t k, std::size_t entry) {
    ensure(k >= 1 && k + 1 < s.n(), "drop_summand: not a middle term");
    auto it = std::find(s.x[k].begin(), s.x[k].end(), entry);
    if (it == s.x[k].end()) throw Error(ErrorKind::Input, "drop_summand: no such summand");
    std::size_t p = static_cast<std::size_t>(it - s.x[k].begin());
    NSigmaSequence<K> r = s;
    r.x[k].erase(r.x[k].begin() + p);
    auto& in = r.a[k - 1];
    in.tgt.erase(in.tgt.begin() + p);
    for (auto& row : in.blk) row.erase(row.begin() + p);
    auto& out = r.a[k];
    out.src.erase(out.src.begin() + p);
    out.blk.erase(out.blk.begin() + p);
    return r;
}

/// X -> X -> 0 -> ... -> 0 -> Sigma X with the identity first.
template <class K>
NSigmaSequence<K> trivial_sequence(Catalog<K>& cat, const AddObj& x, std::size_t n) {
    if (n < 3) throw Error(ErrorKind::Input, "n must be at least 3");
    NSigmaSequence<K> s;
    s.x.assign(n, AddObj{});
    s.x[0] = x;
    s.x[1] = x;
    s.a.push_back(AddMap<K>::identity(cat, x));
    for (std::size_t i = 1; i + 1 < n; ++i) s.a.push_back(AddMap<K>::zero(cat, s.x[i], s.x[i + 1]));
    s.a.push_back(AddMap<K>::zero(cat, s.x[n - 1], sigma(cat, x)));
    return s;
}

/// Left rotation: X_2 -> ... -> X_n -> Sigma X_1 -> Sigma X_2, last map (-1)^n Sigma alpha_1.
/// Right rotation: Sigma^{-1} X_n -> X_1 -> ... -> X_n, first map (-1)^n Sigma^{-1} alpha_n.
template <class K>
NSigmaSequence<K> rotate(Catalog<K>& cat, const NSigmaSequence<K>& s, bool left) {
    std::size_t n = s.n();
    K sign = n % 2 == 0 ? K(1) : K(-1);
    NSigmaSequence<K> r;
    if (left) {
        r.x.assign(s.x.begin() + 1, s.x.end());
        r.x.push_back(sigma(cat, s.x[0]));
        r.a.assign(s.a.begin() + 1, s.a.end());
        r.a.push_back(sign * sigma(cat, s.a[0]));
    } else {
        r.x.push_back(sigma(cat, s.x[n - 1], -1));
        r.x.insert(r.x.end(), s.x.begin(), s.x.end() - 1);
        r.a.push_back(sign * sigma(cat, s.a[n - 1], -1));
        r.a.insert(r.a.end(), s.a.begin(), s.a.end() - 1);
    }
    return r;
}

/// Matrix of Hom(Y, f) : Hom(Y, A) -> Hom(Y, B), rows indexed by the basis of Hom(Y, A).
template <class K>
Mat<K> induced_hom(Catalog<K>& cat, std::size_t y, const AddMap<K>& f) {
    std::vector<std::size_t> ro, co;
    std::size_t nr = 0, nc = 0;
    for (auto a : f.src) ro.push_back(std::exchange(nr, nr + cat.dim(y, a)));
    for (auto b : f.tgt) co.push_back(std::exchange(nc, nc + cat.dim(y, b)));
    Mat<K> m(nr, nc);
    for (std::size_t r = 0; r < f.src.size(); ++r) {
        std::size_t da = cat.dim(y, f.src[r]);
        for (std::size_t c = 0; c < f.tgt.size(); ++c) {
            if (all_zero<K>(f.blk[r][c])) continue;
            for (std::size_t i = 0; i < da; ++i) {
                std::vector<K> e(da, K(0));
                e[i] = K(1);
                auto v = cat.compose(y, f.src[r], f.tgt[c], e, f.blk[r][c]);
                for (std::size_t k = 0; k < v.size(); ++k) m(ro[r] + i, co[c] + k) += v[k];
            }
        }
    }
    return m;
}

struct ExactnessFailure {
    std::string probe;
    std::size_t position;  // 1-based object index
};

struct ExactnessReport {
    std::size_t probes = 0;
    std::vector<ExactnessFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Exactness of Hom(Y, -) applied to Sigma^{-1} X_n -> X_1 -> ... -> X_n -> Sigma X_1,
/// at X_1 .. X_n, by rank counts.
template <class K>
ExactnessReport check_exactness(Catalog<K>& cat, const NSigmaSequence<K>& s, const std::vector<std::size_t>& probes) {
    std::size_t n = s.n();
    ExactnessReport rep;
    AddMap<K> first = sigma(cat, s.a[n - 1], -1);
    for (auto y : probes) {
        ++rep.probes;
        std::vector<Mat<K>> m;
        m.push_back(induced_hom(cat, y, first));
        for (const auto& f : s.a) m.push_back(induced_hom(cat, y, f));
        for (std::size_t j = 1; j <= n; ++j) {
            const Mat<K>& in = m[j - 1];
            const Mat<K>& out = m[j];
            bool ok = true;
            if (in.rows() && out.cols() && !(in * out).is_zero()) ok = false;
            std::size_t dim = out.rows();
            std::size_t rin = in.rows() && in.cols() ? rank(in) : 0;
            std::size_t rout = out.rows() && out.cols() ? rank(out) : 0;
            if (rin != dim - rout) ok = false;
            if (!ok) rep.failures.push_back({cat.name(y), j});
        }
    }
    return rep;
}

/// Indecomposable summands of the objects and their F^{+-1}-translates.
template <class K>
std::vector<std::size_t> default_probes(Catalog<K>& cat, const NSigmaSequence<K>& s) {
    std::vector<std::size_t> out;
    auto push = [&](std::size_t e) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    };
    for (const auto& x : s.x)
        for (auto e : x) push(e);
    std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
        push(cat.translate(out[i], 1));
        push(cat.translate(out[i], -1));
    }
    return out;
}

/// Mapping cone of a map of additive objects as a new entry, with the
/// inclusion B -> cone and the projection cone -> A[1].
template <class K>
struct ConeEntry {
    std::size_t id;
    AddMap<K> incl;
    AddMap<K> proj;
};

template <class K>
ConeEntry<K> cone_entry(Catalog<K>& cat, const AddMap<K>& f, const std::string& name) {
    auto sa = realize(cat, f.src);
    auto sb = realize(cat, f.tgt);
    auto cn = cone(to_chain_map(cat, f, sa, sb), sa.obj, sb.obj);
    ConeEntry<K> r;
    r.id = cat.add_fresh(name, cn.obj);
    AddObj c{r.id};
    AddObj a1 = shift(cat, f.src, 1);
    r.incl = AddMap<K>::zero(cat, f.tgt, c);
    for (std::size_t k = 0; k < f.tgt.size(); ++k)
        r.incl.blk[k][0] = cat.coords(f.tgt[k], r.id,
                                      compose(sb.incl[k], cn.incl, cat.obj(f.tgt[k]), sb.obj, cn.obj));
    r.proj = AddMap<K>::zero(cat, c, a1);
    Complex<K> sa1 = shift(sa.obj, 1);
    for (std::size_t k = 0; k < f.src.size(); ++k)
        r.proj.blk[0][k] =
            cat.coords(r.id, a1[k], compose(cn.proj, shift(sa.proj[k], 1), cn.obj, sa1, cat.obj(a1[k])));
    return r;
}

/// The staircase: cones X_{k+0.5} = cone(X_{k-0.5} -> X_k) for k = 2..n-1
/// (X_{1.5} = X_1) and left approximations X_{k-0.5} -> X_k for k = 3..n-1.
template <class K>
struct Tower {
    std::vector<ConeEntry<K>> cones;    // cones[k-2] = X_{k+0.5}
    std::vector<AddMap<K>> approx;      // approx[k-3] : X_{k-0.5} -> X_k
    std::optional<Decomposition<K>> last;  // X_n as family objects, when it decomposes
};

template <class K>
struct NAngleInstance {
    NSigmaSequence<K> seq;
    std::optional<Tower<K>> tower;
};

/// Builds the n-angle starting with alpha_1 : X_1 -> X_2 from the staircase of
/// cones. For n >= 4 the family supplies the approximations and X_n.
template <class K>
NAngleInstance<K> build_from_tower(Catalog<K>& cat, const AddMap<K>& alpha1, std::size_t n, const Family& fam,
                                   const std::string& prefix = "X") {
    if (n < 3) throw Error(ErrorKind::Input, "n must be at least 3");
    if (cat.suspension() != static_cast<int>(n) - 2)
        throw Error(ErrorKind::Input, "the suspension must be [n-2] for the staircase construction");
    NAngleInstance<K> inst;
    Tower<K> t;
    auto& s = inst.seq;
    s.x.push_back(alpha1.src);
    s.x.push_back(alpha1.tgt);
    s.a.push_back(alpha1);
    t.cones.push_back(cone_entry(cat, alpha1, prefix + "_2.5"));
    for (std::size_t k = 3; k < n; ++k) {
        ConeEntry<K> prev = t.cones.back();
        AddMap<K> ap = minimal_left_approximation(cat, prev.id, fam);
        t.approx.push_back(ap);
        s.x.push_back(ap.tgt);
        s.a.push_back(compose(cat, prev.incl, ap));
        t.cones.push_back(cone_entry(cat, ap, prefix + "_" + std::to_string(k) + ".5"));
    }
    // X_n and the last two maps
    ConeEntry<K> top = t.cones.back();
    AddMap<K> to_top, from_top;  // X_n -> X_{n-0.5} and back
    std::optional<Decomposition<K>> d3;
    if (n == 3) {
        // keep the raw cone unless it lies in add of the family
        try {
            d3 = decompose(cat, top.id, fam);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DecompositionRequired && e.kind() != ErrorKind::NotInAddU) throw;
        }
    }
    if (n == 3 && !d3) {
        s.x.push_back({top.id});
        to_top = AddMap<K>::identity(cat, {top.id});
        from_top = to_top;
    } else if (n == 3) {
        s.x.push_back(d3->summands);
        to_top = d3->to;
        from_top = d3->from;
        t.last = d3;
    } else {
        auto d = decompose(cat, top.id, fam);
        s.x.push_back(d.summands);
        to_top = d.to;
        from_top = d.from;
        t.last = d;
    }
    s.a.push_back(compose(cat, top.incl, from_top));
    // lower edge X_n -> X_{n-0.5} -> X_{n-1.5}[1] -> ... -> X_1[n-2]
    AddMap<K> edge = compose(cat, to_top, top.proj);
    for (std::size_t j = t.cones.size() - 1; j-- > 0;)
        edge = compose(cat, edge, shift(cat, t.cones[j].proj, static_cast<int>(t.cones.size() - 1 - j)));
    s.a.push_back(edge);
    inst.tower = std::move(t);
    validate(cat, s);
    return inst;
}

/// Re-derives every cone of the tower and compares it with the stored data.
template <class K>
bool verify_tower(Catalog<K>& cat, const NAngleInstance<K>& inst) {
    if (!inst.tower) throw Error(ErrorKind::MissingTower, "instance has no tower");
    const auto& t = *inst.tower;
    std::vector<AddMap<K>> bases{inst.seq.a[0]};
    for (const auto& ap : t.approx) bases.push_back(ap);
    if (bases.size() != t.cones.size()) return false;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        auto sa = realize(cat, bases[k].src);
        auto sb = realize(cat, bases[k].tgt);
        auto cn = cone(to_chain_map(cat, bases[k], sa, sb), sa.obj, sb.obj);
        if (!same_complex(cn.obj, cat.obj(t.cones[k].id))) return false;
        if (!compose(cat, bases[k], t.cones[k].incl).is_zero()) return false;
        if (!compose(cat, t.cones[k].incl, t.cones[k].proj).is_zero()) return false;
    }
    return true;
}

/// Sum of the middle terms M = X_2 + ... + X_{n-1}.
template <class K>
AddObj middle_sum(const NSigmaSequence<K>& s) {
    AddObj m;
    for (std::size_t i = 1; i + 1 < s.n(); ++i) m = concat(m, s.x[i]);
    return m;
}

enum class PadSide { Bar, Tilde };

/// Direct sums with trivial angles on M = M_1 + ... + M_{n-2}:
///   Bar:   X -> M_1 -> ... -> M_{n-3} -> M_{n-2}+M -> M+Y -> Sigma X
///   Tilde: X+M -> M_1+M -> M_2 -> ... -> M_{n-2} -> Y -> Sigma(X+M)
template <class K>
NSigmaSequence<K> pad_angle(Catalog<K>& cat, const NSigmaSequence<K>& s, PadSide side) {
    std::size_t n = s.n();
    AddObj m = middle_sum(s);
    const AddObj& x = s.x[0];
    const AddObj& y = s.x[n - 1];
    const AddObj& mlast = s.x[n - 2];
    NSigmaSequence<K> r;
    using Opt = std::optional<AddMap<K>>;
    if (side == PadSide::Bar) {
        for (std::size_t i = 0; i + 2 < n; ++i) r.x.push_back(s.x[i]);
        r.x.push_back(concat(mlast, m));
        r.x.push_back(concat(m, y));
        for (std::size_t i = 0; i + 3 < n; ++i) r.a.push_back(s.a[i]);
        r.a.push_back(block_addmap<K>(cat, {s.x[n - 3]}, {mlast, m}, {{Opt(s.a[n - 3]), Opt()}}));
        r.a.push_back(block_addmap<K>(cat, {mlast, m}, {m, y},
                                      {{Opt(), Opt(s.a[n - 2])}, {Opt(AddMap<K>::identity(cat, m)), Opt()}}));
        r.a.push_back(block_addmap<K>(cat, {m, y}, {sigma(cat, x)}, {{Opt()}, {Opt(s.a[n - 1])}}));
    } else {
        AddObj v = concat(x, m);
        r.x.push_back(v);
        r.x.push_back(concat(s.x[1], m));
        for (std::size_t i = 2; i < n; ++i) r.x.push_back(s.x[i]);
        r.a.push_back(block_addmap<K>(cat, {x, m}, {s.x[1], m},
                                      {{Opt(s.a[0]), Opt()}, {Opt(), Opt(AddMap<K>::identity(cat, m))}}));
        r.a.push_back(block_addmap<K>(cat, {s.x[1], m}, {s.x[2]}, {{Opt(s.a[1])}, {Opt()}}));
        for (std::size_t i = 2; i + 1 < n; ++i) r.a.push_back(s.a[i]);
        r.a.push_back(block_addmap<K>(cat, {y}, {sigma(cat, x), sigma(cat, m)}, {{Opt(s.a[n - 1]), Opt()}}));
    }
    validate(cat, r);
    return r;
}

/// Solves a linear system whose unknowns are several AddMaps:
/// op(unknowns) = rhs, with op linear.
template <class K>
std::optional<std::vector<AddMap<K>>> solve_maps(
    Catalog<K>& cat, const std::vector<std::pair<AddObj, AddObj>>& shapes,
    const std::function<std::vector<AddMap<K>>(const std::vector<AddMap<K>>&)>& op, const std::vector<AddMap<K>>& rhs) {
    std::vector<AddMap<K>> u;
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (const auto& [a, b] : shapes) {
        u.push_back(AddMap<K>::zero(cat, a, b));
        off.push_back(std::exchange(n, n + u.back().size()));
    }
    auto flat = [](const std::vector<AddMap<K>>& ms) {
        std::vector<K> v;
        for (const auto& m : ms) {
            auto f = m.flatten();
            v.insert(v.end(), f.begin(), f.end());
        }
        return v;
    };
    auto set = [&](const std::vector<K>& v) {
        for (std::size_t k = 0; k < u.size(); ++k)
            u[k].unflatten(std::span<const K>(v).subspan(off[k], u[k].size()));
    };
    std::vector<K> b = flat(rhs);
    if (n == 0) {
        if (all_zero<K>(b)) return u;
        return std::nullopt;
    }
    Mat<K> m(n, b.size());
    std::vector<K> unit(n, K(0));
    for (std::size_t k = 0; k < n; ++k) {
        unit[k] = K(1);
        set(unit);
        auto v = flat(op(u));
        for (std::size_t t = 0; t < v.size(); ++t) m(k, t) = v[t];
        unit[k] = K(0);
    }
    if (b.empty()) {
        set(unit);
        return u;
    }
    auto s = solve_left(m, Mat<K>::row_vector(b));
    if (!s) return std::nullopt;
    auto row = s->row(0);
    set(std::vector<K>(row.begin(), row.end()));
    return u;
}

template <class K>
struct SquareWitness {
    std::size_t square;       // 1-based: square j compares alpha_j phi_{j+1} with phi_j beta_j
    Homotopy<K> homotopy;     // realized on the direct sum complexes
    bool ok;
};

/// Difference of the two paths around square j, as a map X_j -> Y_{j+1} (or Sigma Y_1 for j = n).
template <class K>
AddMap<K> square_defect(Catalog<K>& cat, const NSigmaSequence<K>& s, const NSigmaSequence<K>& t,
                        const std::vector<AddMap<K>>& phi, std::size_t j) {
    std::size_t n = s.n();
    if (j < n) return compose(cat, s.a[j - 1], phi[j]) - compose(cat, phi[j - 1], t.a[j - 1]);
    return compose(cat, s.a[n - 1], sigma(cat, phi[0])) - compose(cat, phi[n - 1], t.a[n - 1]);
}

/// Null-homotopies of every square, computed on realized chain maps.
template <class K>
std::vector<SquareWitness<K>> square_witnesses(Catalog<K>& cat, const NSigmaSequence<K>& s,
                                               const NSigmaSequence<K>& t, const std::vector<AddMap<K>>& phi) {
    std::vector<SquareWitness<K>> out;
    for (std::size_t j = 1; j <= s.n(); ++j) {
        AddMap<K> d = square_defect(cat, s, t, phi, j);
        auto sa = realize(cat, d.src);
        auto sb = realize(cat, d.tgt);
        ChainMap<K> c = to_chain_map(cat, d, sa, sb);
        auto h = null_homotopy(c, sa.obj, sb.obj);
        SquareWitness<K> w{j, {}, false};
        if (h) {
            w.homotopy = *h;
            w.ok = is_homotopy(*h, c, sa.obj, sb.obj);
        }
        out.push_back(std::move(w));
    }
    return out;
}

/// Completes phi_1..phi_i to a morphism of n-angles. The remaining maps solve
/// the commutativity conditions jointly as one linear system in Hom_{K^b}
/// coordinates; existence is what the towers guarantee.
template <class K>
std::vector<AddMap<K>> complete_to_morphism(Catalog<K>& cat, const NAngleInstance<K>& src,
                                            const NAngleInstance<K>& tgt, const std::vector<AddMap<K>>& partial) {
    if (!src.tower || !tgt.tower) throw Error(ErrorKind::MissingTower, "completion needs both towers");
    const auto& s = src.seq;
    const auto& t = tgt.seq;
    std::size_t n = s.n(), i = partial.size();
    if (t.n() != n) throw Error(ErrorKind::DimensionMismatch, "angles of different arity");
    if (i == 0 || i > n) throw Error(ErrorKind::Input, "need between 1 and n given maps");
    for (std::size_t k = 0; k < i; ++k)
        if (partial[k].src != s.x[k] || partial[k].tgt != t.x[k])
            throw Error(ErrorKind::DimensionMismatch, "given map " + std::to_string(k + 1) + " has the wrong shape");
    for (std::size_t j = 1; j < i; ++j)
        if (!square_defect(cat, s, t, partial, j).is_zero())
            throw Error(ErrorKind::NotNullHomotopic, "given square " + std::to_string(j) + " does not commute");
    std::vector<std::pair<AddObj, AddObj>> shapes;
    for (std::size_t k = i; k < n; ++k) shapes.push_back({s.x[k], t.x[k]});
    auto full = [&](const std::vector<AddMap<K>>& u, bool with_given) {
        std::vector<AddMap<K>> phi;
        for (std::size_t k = 0; k < i; ++k)
            phi.push_back(with_given ? partial[k] : AddMap<K>::zero(cat, s.x[k], t.x[k]));
        phi.insert(phi.end(), u.begin(), u.end());
        return phi;
    };
    // squares i..n: linear part in the unknowns, constant part from the given maps
    auto op = [&](const std::vector<AddMap<K>>& u) {
        auto phi = full(u, false);
        std::vector<AddMap<K>> eq;
        for (std::size_t j = i; j <= n; ++j) eq.push_back(square_defect(cat, s, t, phi, j));
        return eq;
    };
    std::vector<AddMap<K>> zero_u;
    for (const auto& [a, b] : shapes) zero_u.push_back(AddMap<K>::zero(cat, a, b));
    std::vector<AddMap<K>> rhs;
    {
        auto phi = full(zero_u, true);
        for (std::size_t j = i; j <= n; ++j) rhs.push_back(K(-1) * square_defect(cat, s, t, phi, j));
    }
    auto sol = solve_maps<K>(cat, shapes, op, rhs);
    if (!sol) throw Error(ErrorKind::CompletionFailed, "no completion of the given maps exists");
    return full(*sol, true);
}

struct ArReport {
    bool terms_in_family = false;
    bool source_map = false;
    bool sink_map = false;
    bool right_approximations = false;
    bool left_approximations = false;
    std::vector<std::string> notes;
    bool ok() const {
        return terms_in_family && source_map && sink_map && right_approximations && left_approximations;
    }
};

/// The four conditions of an Auslander-Reiten n-angle relative to a family.
template <class K>
ArReport ar_checks(Catalog<K>& cat, const NAngleInstance<K>& inst, const Family& fam) {
    const auto& s = inst.seq;
    std::size_t n = s.n();
    ArReport r;
    auto member = [&](std::size_t e) { return std::find(fam.begin(), fam.end(), e) != fam.end(); };
    r.terms_in_family = true;
    for (std::size_t k = 0; k < n; ++k)
        for (auto e : s.x[k])
            if (!member(e)) {
                r.terms_in_family = false;
                r.notes.push_back("X_" + std::to_string(k + 1) + " has summand " + cat.name(e) + " outside the family");
            }
    if (s.x[0].size() != 1 || s.x[n - 1].size() != 1) {
        r.terms_in_family = false;
        r.notes.push_back("end terms must be single indecomposables");
    }
    const AddMap<K>& a1 = s.a[0];
    r.source_map = s.x[0].size() == 1 && is_radical(cat, a1) && is_left_approximation(cat, a1, fam, true) &&
                   is_left_minimal(cat, a1);
    if (!r.source_map) r.notes.push_back("first map is not a source map");
    const AddMap<K>& al = s.a[n - 2];
    r.sink_map = s.x[n - 1].size() == 1 && is_radical(cat, al) && is_right_approximation(cat, al, fam, true) &&
                 is_right_minimal(cat, al);
    if (!r.sink_map) r.notes.push_back("map into X_n is not a sink map");
    if (!inst.tower) {
        r.notes.push_back("no tower: approximation conditions not checked");
        return r;
    }
    const auto& t = *inst.tower;
    // the last cone is X_n itself; its map is the sink map above
    r.right_approximations = true;
    for (std::size_t k = 0; k + 1 < t.cones.size(); ++k) {
        const auto& c = t.cones[k];
        if (!is_right_approximation(cat, c.incl, fam) || !is_right_minimal(cat, c.incl)) {
            r.right_approximations = false;
            r.notes.push_back("X_" + std::to_string(k + 2) + " -> X_" + std::to_string(k + 2) +
                              ".5 is not a minimal right approximation");
        }
    }
    r.left_approximations = true;
    for (std::size_t k = 0; k < t.approx.size(); ++k)
        if (!is_left_approximation(cat, t.approx[k], fam) || !is_left_minimal(cat, t.approx[k])) {
            r.left_approximations = false;
            r.notes.push_back("X_" + std::to_string(k + 2) + ".5 -> X_" + std::to_string(k + 3) + " is not a minimal left approximation");
        }
    return r;
}

}  // namespace angleforge
