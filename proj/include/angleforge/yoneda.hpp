#pragma once

// Perforated Yoneda algebras E(V) = (+)_{i in Phi} Hom(V, F^i V) over a
// catalog, the module maps mu of E(U, -), the approximation and orthogonality
// hypotheses, the factorization ideals I and J, and quotients exported as
// AlgebraData.
//
// Products are diagrammatic: for x in Hom(V_a, F^i V_b) and y in
// Hom(V_b, F^j V_c), x*y = x then F^i(y) in degree i+j, and 0 when i+j is
// not in Phi. Summands of V are deduplicated, so E(V) is basic whenever the
// summands are indecomposable and pairwise non-isomorphic.

#include <algorithm>
#include <array>
#include <memory>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "angleforge/nangle.hpp"

namespace angleforge {

inline std::vector<int> normalize_phi(std::vector<int> phi) {
    std::sort(phi.begin(), phi.end());
    phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
    return phi;
}

/// For all i, j, k in Phi with i+j+k in Phi: i+j in Phi iff j+k in Phi.
inline bool is_admissible(const std::vector<int>& phi_in) {
    auto phi = normalize_phi(phi_in);
    std::set<int> s(phi.begin(), phi.end());
    if (!s.count(0)) throw Error(ErrorKind::ZeroMissing, "Phi must contain 0");
    for (int i : phi)
        for (int j : phi)
            for (int k : phi) {
                if (!s.count(i + j + k)) continue;
                if (s.count(i + j) != s.count(j + k)) return false;
            }
    return true;
}

/// A triple (i, j, k) violating admissibility, if any.
inline std::optional<std::array<int, 3>> admissibility_witness(const std::vector<int>& phi) {
    std::set<int> s(phi.begin(), phi.end());
    for (int i : s)
        for (int j : s)
            for (int k : s)
                if (s.count(i + j + k) && s.count(i + j) != s.count(j + k)) return std::array<int, 3>{i, j, k};
    return std::nullopt;
}

template <class K>
struct EAlgebra {
    struct Component {
        int deg;
        std::size_t a, b;       // positions in v
        std::size_t target;     // entry F^deg(v[b])
        Mat<K> basis;           // rows: Hom_{K^b} coordinates of the component basis
        LinearCoordinates<K> lc;
        std::size_t offset = 0, dim = 0;
    };

    AddObj v;
    std::vector<int> phi;
    std::vector<Component> comps;
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
    AlgebraData<K> table;  // structure constants; no generators

    std::size_t dim() const { return table.dim(); }

    std::optional<std::size_t> position(std::size_t entry) const {
        auto it = std::find(v.begin(), v.end(), entry);
        if (it == v.end()) return std::nullopt;
        return static_cast<std::size_t>(it - v.begin());
    }
    std::size_t require_position(const Catalog<K>& cat, std::size_t entry) const {
        auto p = position(entry);
        if (!p) throw Error(ErrorKind::NotInAddU, cat.name(entry) + " is not a summand");
        return *p;
    }

    const Component* component(int deg, std::size_t a, std::size_t b) const {
        auto it = index.find({deg, a, b});
        return it == index.end() ? nullptr : &comps[it->second];
    }

    /// E coordinates of h in Hom(v[a], F^deg v[b]) (Hom_{K^b} coordinates).
    void add_hom(std::vector<K>& out, int deg, std::size_t a, std::size_t b, std::span<const K> h, K scale = K(1)) const {
        const Component* c = component(deg, a, b);
        if (!c || c->dim == 0) return;
        auto x = c->lc.coords(h);
        for (std::size_t k = 0; k < c->dim; ++k) out[c->offset + k] += scale * x[k];
    }

    /// Hom_{K^b} coordinates of the (deg, a, b) part of an element.
    std::vector<K> hom_part(const std::vector<K>& x, int deg, std::size_t a, std::size_t b) const {
        const Component* c = component(deg, a, b);
        if (!c || c->dim == 0) return {};
        std::vector<K> part(x.begin() + c->offset, x.begin() + c->offset + c->dim);
        return vec_times(part, c->basis);
    }

    /// Degree of a basis element.
    int degree_of(std::size_t basis_index) const {
        for (const auto& c : comps)
            if (basis_index >= c.offset && basis_index < c.offset + c.dim) return c.deg;
        return 0;
    }
};

/// Builds E(V) for Phi. Negative degrees need a strictly invertible functor.
template <class K>
EAlgebra<K> e_algebra(Catalog<K>& cat, const AddObj& v_in, std::vector<int> phi, bool allow_non_admissible = false,
                      const std::string& name = "E", bool dedupe = true) {
    phi = normalize_phi(std::move(phi));
    if (!is_admissible(phi) && !allow_non_admissible)
        throw Error(ErrorKind::NonAdmissiblePhi, "Phi is not admissible");
    for (int i : phi)
        if (i < 0 && !cat.functor().strictly_invertible())
            throw Error(ErrorKind::Unsupported, "negative degrees need an invertible functor");
    EAlgebra<K> e;
    for (auto x : v_in)
        if (!dedupe || std::find(e.v.begin(), e.v.end(), x) == e.v.end()) e.v.push_back(x);
    e.phi = phi;
    std::set<int> inphi(phi.begin(), phi.end());
    std::size_t m = e.v.size();
    auto& t = e.table;
    t.name = name;
    for (auto x : e.v) t.idempotent_names.push_back(cat.name(x));
    t.idempotents.assign(m, 0);
    std::size_t off = 0;
    for (int i : phi)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                typename EAlgebra<K>::Component c;
                c.deg = i;
                c.a = a;
                c.b = b;
                c.target = cat.translate(e.v[b], i);
                std::size_t d = cat.dim(e.v[a], c.target);
                c.basis = Mat<K>::identity(d);
                if (i == 0 && a == b) {
                    // put the identity first
                    Mat<K> id = Mat<K>::row_vector(cat.identity(e.v[a]));
                    c.basis = vstack(id, complement_rows(Mat<K>::identity(d), id));
                    t.idempotents[a] = off;
                }
                if (d) c.lc = LinearCoordinates<K>(c.basis);
                c.offset = off;
                c.dim = d;
                off += d;
                for (std::size_t k = 0; k < d; ++k) {
                    BasisElement be;
                    be.tag = "[" + std::to_string(i) + "]" + cat.name(e.v[a]) + ">" + cat.name(e.v[b]) + "#" +
                             std::to_string(k);
                    be.src = a;
                    be.tgt = b;
                    t.basis.push_back(std::move(be));
                }
                e.index[{i, a, b}] = e.comps.size();
                e.comps.push_back(std::move(c));
            }
    std::size_t n = off;
    t.products.assign(n * n, {});
    for (const auto& cx : e.comps) {
        if (cx.dim == 0) continue;
        for (const auto& cy : e.comps) {
            if (cy.dim == 0 || cy.a != cx.b || !inphi.count(cx.deg + cy.deg)) continue;
            const auto* cz = e.component(cx.deg + cy.deg, cx.a, cy.b);
            if (!cz || cz->dim == 0) continue;
            std::size_t mid = cx.target;  // F^i v[b]
            std::size_t end = cat.translate(cy.target, cx.deg);
            if (end != cz->target)
                throw Error(ErrorKind::Unsupported, "F^i F^j and F^(i+j) differ on " + cat.name(e.v[cy.b]));
            Mat<K> fy = cat.translate_matrix(e.v[cx.b], cy.target, cx.deg);
            for (std::size_t p = 0; p < cx.dim; ++p) {
                auto xh = cx.basis.row_copy(p);
                for (std::size_t q = 0; q < cy.dim; ++q) {
                    auto yh = vec_times(cy.basis.row_copy(q), fy);
                    auto zh = cat.compose(e.v[cx.a], mid, end, xh, yh);
                    if (all_zero<K>(zh)) continue;
                    auto zc = cz->lc.coords(zh);
                    SparseVec<K> sv;
                    for (std::size_t k = 0; k < zc.size(); ++k)
                        if (!is_zero(zc[k])) sv.push_back({cz->offset + k, zc[k]});
                    t.products[(cx.offset + p) * n + cy.offset + q] = std::move(sv);
                }
            }
        }
    }
    t.finalize();
    if (!allow_non_admissible || is_admissible(phi)) {
        t.radical = trace_form_radical(t);
        validate_algebra(t);
    } else {
        t.radical = Mat<K>(0, n);
    }
    return e;
}

/// Left E-module E(U, U1) = (+)_p E e_{u1[p]} and the maps mu(x) : m -> m x.
template <class K>
struct MuReport {
    std::size_t dim_source = 0;   // dim E(U1, U2)
    std::size_t dim_hom = 0;      // dim Hom_E(E(U,U1), E(U,U2))
    std::size_t rank = 0;         // rank of mu
    bool bijective = false;
    bool multiplicative = false;
    bool faithful = false;        // injective on the degree 0 part
    bool vanishing = false;       // Hom(U1, F^i U2) = 0 off degree 0
    std::optional<bool> orthogonality_iso;  // set only when vanishing holds
};

namespace detail {

/// Basis indices of E(U, U_sum): column blocks, summand by summand.
template <class K>
std::vector<std::pair<std::size_t, std::size_t>> column_basis(const AlgebraData<K>& t, const std::vector<std::size_t>& u) {
    std::vector<std::pair<std::size_t, std::size_t>> out;  // (summand, basis index)
    for (std::size_t p = 0; p < u.size(); ++p)
        for (std::size_t b = 0; b < t.dim(); ++b)
            if (t.basis[b].tgt == u[p]) out.push_back({p, b});
    return out;
}

/// Basis of E(U1, U2): (p, q, basis index) with src u1[p], tgt u2[q].
template <class K>
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pair_basis(const AlgebraData<K>& t,
                                                                          const std::vector<std::size_t>& u1,
                                                                          const std::vector<std::size_t>& u2) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < u1.size(); ++p)
        for (std::size_t q = 0; q < u2.size(); ++q)
            for (std::size_t b = 0; b < t.dim(); ++b)
                if (t.basis[b].src == u1[p] && t.basis[b].tgt == u2[q]) out.push_back({p, q, b});
    return out;
}

template <class K>
Mat<K> mu_matrix(const AlgebraData<K>& t, const std::vector<std::pair<std::size_t, std::size_t>>& c1,
                 const std::vector<std::pair<std::size_t, std::size_t>>& c2, std::size_t p, std::size_t q,
                 std::size_t b) {
    Mat<K> m(c1.size(), c2.size());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
    for (std::size_t j = 0; j < c2.size(); ++j) where[c2[j]] = j;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (c1[i].first != p) continue;
        for (const auto& [k, v] : t.product(c1[i].second, b)) m(i, where.at({q, k})) += v;
    }
    return m;
}

}  // namespace detail

/// mu : E(U1,U2) -> Hom_{E(U)}(E(U,U1), E(U,U2)) with U1, U2, U3 given as
/// lists of summand positions; multiplicativity is tested on E(U1,U2) x E(U2,U3).
template <class K>
MuReport<K> mu_check(const EAlgebra<K>& e, const std::vector<std::size_t>& u1, const std::vector<std::size_t>& u2,
                     const std::vector<std::size_t>& u3) {
    const auto& t = e.table;
    MuReport<K> r;
    auto c1 = detail::column_basis(t, u1), c2 = detail::column_basis(t, u2), c3 = detail::column_basis(t, u3);
    auto b12 = detail::pair_basis(t, u1, u2), b23 = detail::pair_basis(t, u2, u3);
    r.dim_source = b12.size();
    // Hom_E(E(U,U1), E(U,U2)): phi with phi(y m) = y phi(m)
    std::size_t d1 = c1.size(), d2 = c2.size();
    std::size_t nu = d1 * d2;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> w1, w2;
    for (std::size_t i = 0; i < d1; ++i) w1[c1[i]] = i;
    for (std::size_t j = 0; j < d2; ++j) w2[c2[j]] = j;
    std::vector<std::vector<K>> eqs;
    for (std::size_t y = 0; y < t.dim(); ++y)
        for (std::size_t i = 0; i < d1; ++i) {
            auto [p, m] = c1[i];
            const auto& ym = t.product(y, m);
            bool nonzero_left = !ym.empty();
            bool composable = t.basis[y].tgt == t.basis[m].src;
            if (!composable && !nonzero_left) continue;
            for (std::size_t j = 0; j < d2; ++j) {
                // coefficient of basis c2[j] in phi(y m) - y phi(m)
                std::vector<K> row(nu, K(0));
                for (const auto& [k, v] : ym) row[w1.at({p, k}) * d2 + j] += v;
                auto [q, tb] = c2[j];
                for (std::size_t l = 0; l < d2; ++l) {
                    if (c2[l].first != q) continue;
                    for (const auto& [k, v] : t.product(y, c2[l].second))
                        if (k == tb) row[i * d2 + l] -= v;
                }
                if (!all_zero<K>(row)) eqs.push_back(std::move(row));
            }
        }
    Mat<K> em(eqs.size(), nu);
    for (std::size_t a = 0; a < eqs.size(); ++a)
        for (std::size_t b = 0; b < nu; ++b) em(a, b) = eqs[a][b];
    r.dim_hom = nu - (eqs.empty() ? 0 : rank(em));
    // mu images
    Mat<K> imgs(0, nu), imgs0(0, nu);
    std::vector<Mat<K>> mu12;
    for (auto [p, q, b] : b12) {
        Mat<K> mm = detail::mu_matrix(t, c1, c2, p, q, b);
        imgs.append_row(mm.data());
        if (e.degree_of(b) == 0) imgs0.append_row(mm.data());
        mu12.push_back(std::move(mm));
    }
    r.rank = imgs.rows() && nu ? rank(imgs) : 0;
    r.bijective = r.rank == r.dim_source && r.rank == r.dim_hom;
    std::size_t n0 = imgs0.rows();
    r.faithful = n0 == 0 || rank(imgs0) == n0;
    // multiplicativity: mu(x y) = mu(x) mu(y)
    r.multiplicative = true;
    for (std::size_t a = 0; a < b12.size() && r.multiplicative; ++a) {
        auto [p, q, x] = b12[a];
        for (auto [q2, s, y] : b23) {
            if (q2 != q) continue;
            Mat<K> lhs(c1.size(), c3.size());
            for (const auto& [k, v] : t.product(x, y)) {
                Mat<K> mk = detail::mu_matrix(t, c1, c3, p, s, k);
                mk *= v;
                lhs += mk;
            }
            Mat<K> rhs = mu12[a] * detail::mu_matrix(t, c2, c3, q, s, y);
            if (!(lhs == rhs)) {
                r.multiplicative = false;
                break;
            }
        }
    }
    // orthogonality: all of E(U1, U2) in degree 0
    r.vanishing = imgs0.rows() == imgs.rows();
    if (r.vanishing) r.orthogonality_iso = (n0 == 0 ? 0 : rank(imgs0)) == r.dim_hom;
    return r;
}

/// Hom spaces out of an additive object into one entry, flattened over summands.
template <class K>
std::size_t hom_dim(Catalog<K>& cat, const AddObj& x, std::size_t t) {
    std::size_t d = 0;
    for (auto a : x) d += cat.dim(a, t);
    return d;
}

/// alpha : X -> M_1 is a left (add M, F, Phi)-approximation: for all i in Phi and
/// summands M' of M, Hom(M_1, F^i M') -> Hom(X, F^i M') is onto.
template <class K>
bool is_left_phi_approximation(Catalog<K>& cat, const AddMap<K>& alpha, const AddObj& m, const std::vector<int>& phi) {
    for (int i : phi)
        for (auto mp : m) {
            std::size_t t = cat.translate(mp, i);
            std::size_t need = hom_dim(cat, alpha.src, t);
            if (need == 0) continue;
            Mat<K> img(0, need);
            for (std::size_t c = 0; c < alpha.tgt.size(); ++c) {
                std::size_t d = cat.dim(alpha.tgt[c], t);
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<K> h(d, K(0));
                    h[k] = K(1);
                    std::vector<K> row;
                    for (std::size_t r = 0; r < alpha.src.size(); ++r) {
                        auto v = cat.compose(alpha.src[r], alpha.tgt[c], t, alpha.blk[r][c], h);
                        row.insert(row.end(), v.begin(), v.end());
                    }
                    img.append_row(row);
                }
            }
            if ((img.rows() ? rank(img) : 0) != need) return false;
        }
    return true;
}

/// alpha : M_{n-2} -> Y is a right (add M, F, -Phi)-approximation: for all i in Phi,
/// Hom(F^{-i} M', M_{n-2}) -> Hom(F^{-i} M', Y) is onto.
template <class K>
bool is_right_phi_approximation(Catalog<K>& cat, const AddMap<K>& alpha, const AddObj& m, const std::vector<int>& phi) {
    for (int i : phi)
        for (auto mp : m) {
            std::size_t s = cat.translate(mp, -i);
            std::size_t need = 0;
            for (auto y : alpha.tgt) need += cat.dim(s, y);
            if (need == 0) continue;
            Mat<K> img(0, need);
            for (std::size_t r = 0; r < alpha.src.size(); ++r) {
                std::size_t d = cat.dim(s, alpha.src[r]);
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<K> h(d, K(0));
                    h[k] = K(1);
                    std::vector<K> row;
                    for (std::size_t c = 0; c < alpha.tgt.size(); ++c) {
                        auto v = cat.compose(s, alpha.src[r], alpha.tgt[c], h, alpha.blk[r][c]);
                        row.insert(row.end(), v.begin(), v.end());
                    }
                    img.append_row(row);
                }
            }
            if ((img.rows() ? rank(img) : 0) != need) return false;
        }
    return true;
}

enum class ScriptSide {
    X,  // Hom(obj, F^i M) = 0 for i in Phi \ {0}
    Y   // Hom(M, F^i obj) = 0 for i in Phi \ {0}
};

template <class K>
bool script_membership(Catalog<K>& cat, const AddObj& obj, const AddObj& m, const std::vector<int>& phi,
                       ScriptSide side) {
    for (int i : phi) {
        if (i == 0) continue;
        for (auto a : obj)
            for (auto b : m) {
                std::size_t d = side == ScriptSide::X ? cat.dim(a, cat.translate(b, i)) : cat.dim(b, cat.translate(a, i));
                if (d) return false;
            }
    }
    return true;
}

struct HypothesisReport {
    bool angle = false;  // composites vanish and the sequence is exact on the default probes
    bool left_approximation = false;
    bool right_approximation = false;
    bool x_in_y_of_m = false;
    bool y_in_x_of_m = false;
    bool ok() const { return angle && left_approximation && right_approximation && x_in_y_of_m && y_in_x_of_m; }
    std::string failures() const {
        std::string s;
        auto add = [&](bool b, const char* what) {
            if (!b) s += std::string(s.empty() ? "" : "; ") + what;
        };
        add(angle, "the sequence is not an n-angle");
        add(left_approximation, "first map is not a left approximation");
        add(right_approximation, "map into Y is not a right approximation");
        add(x_in_y_of_m, "X is not in Y(M)");
        add(y_in_x_of_m, "Y is not in X(M)");
        return s;
    }
};

template <class K>
HypothesisReport check_hypotheses(Catalog<K>& cat, const NSigmaSequence<K>& s, const std::vector<int>& phi) {
    std::size_t n = s.n();
    AddObj m = middle_sum(s);
    HypothesisReport h;
    validate_shape(cat, s);
    try {
        validate(cat, s);
        h.angle = check_exactness(cat, s, default_probes(cat, s)).ok();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotNullHomotopic) throw;
    }
    h.left_approximation = is_left_phi_approximation(cat, s.a[0], m, phi);
    h.right_approximation = is_right_phi_approximation(cat, s.a[n - 2], m, phi);
    h.x_in_y_of_m = script_membership(cat, s.x[0], m, phi, ScriptSide::Y);
    h.y_in_x_of_m = script_membership(cat, s.x[n - 1], m, phi, ScriptSide::X);
    return h;
}

/// Offsets of the blocks of an AddMap V -> V in flattened coordinates.
template <class K>
std::vector<std::vector<std::size_t>> block_offsets(Catalog<K>& cat, const AddObj& v, const AddObj& w) {
    std::vector<std::vector<std::size_t>> off(v.size(), std::vector<std::size_t>(w.size()));
    std::size_t o = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b) {
            off[a][b] = o;
            o += cat.dim(v[a], w[b]);
        }
    return off;
}

template <class K>
std::size_t flat_dim(Catalog<K>& cat, const AddObj& v, const AddObj& w) {
    std::size_t o = 0;
    for (auto a : v)
        for (auto b : w) o += cat.dim(a, b);
    return o;
}

/// span{u v : u : V -> M, v : M -> V} in flattened End(V) coordinates.
template <class K>
Mat<K> through_add(Catalog<K>& cat, const AddObj& v, const AddObj& m) {
    auto off = block_offsets(cat, v, v);
    std::size_t n = flat_dim(cat, v, v);
    Mat<K> out(0, n);
    AddObj ms;
    for (auto x : m)
        if (std::find(ms.begin(), ms.end(), x) == ms.end()) ms.push_back(x);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b) {
            for (auto r : ms) {
                Mat<K> p = products(cat, v[a], r, v[b], whole(cat, v[a], r), whole(cat, r, v[b]));
                for (std::size_t i = 0; i < p.rows(); ++i) {
                    std::vector<K> row(n, K(0));
                    for (std::size_t k = 0; k < p.cols(); ++k) row[off[a][b] + k] = p(i, k);
                    out.append_row(row);
                }
            }
        }
    return row_space(out);
}

/// {s then g : s : V -> D} for g : D -> V.
template <class K>
Mat<K> through_map_before(Catalog<K>& cat, const AddObj& v, const AddMap<K>& g) {
    ensure(g.tgt == v, "through_map_before: g must end in V");
    auto off = block_offsets(cat, v, v);
    std::size_t n = flat_dim(cat, v, v);
    Mat<K> out(0, n);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t d = 0; d < g.src.size(); ++d) {
            std::size_t dim = cat.dim(v[a], g.src[d]);
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<K> s(dim, K(0));
                s[k] = K(1);
                std::vector<K> row(n, K(0));
                for (std::size_t b = 0; b < v.size(); ++b) {
                    auto c = cat.compose(v[a], g.src[d], v[b], s, g.blk[d][b]);
                    for (std::size_t t = 0; t < c.size(); ++t) row[off[a][b] + t] += c[t];
                }
                out.append_row(row);
            }
        }
    return out.rows() ? row_space(out) : out;
}

/// {g then t : t : D -> W} for g : W -> D.
template <class K>
Mat<K> through_map_after(Catalog<K>& cat, const AddObj& w, const AddMap<K>& g) {
    ensure(g.src == w, "through_map_after: g must start in W");
    auto off = block_offsets(cat, w, w);
    std::size_t n = flat_dim(cat, w, w);
    Mat<K> out(0, n);
    for (std::size_t d = 0; d < g.tgt.size(); ++d)
        for (std::size_t b = 0; b < w.size(); ++b) {
            std::size_t dim = cat.dim(g.tgt[d], w[b]);
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<K> t(dim, K(0));
                t[k] = K(1);
                std::vector<K> row(n, K(0));
                for (std::size_t a = 0; a < w.size(); ++a) {
                    auto c = cat.compose(w[a], g.tgt[d], w[b], g.blk[a][d], t);
                    for (std::size_t q = 0; q < c.size(); ++q) row[off[a][b] + q] += c[q];
                }
                out.append_row(row);
            }
        }
    return out.rows() ? row_space(out) : out;
}

template <class K>
struct IdealData {
    Mat<K> basis;        // in E coordinates
    Mat<K> through_add;  // factorization subspaces, flattened End coordinates of the full object
    Mat<K> through_map;
    Mat<K> both;
    bool closed = false;
    std::size_t dim() const { return basis.rows(); }
};

/// Degree-0 flattened End(U) coordinates (U possibly with repeated summands)
/// to E coordinates, keeping the blocks between first occurrences.
template <class K>
Mat<K> flat_to_e(Catalog<K>& cat, const EAlgebra<K>& e, const AddObj& u, const Mat<K>& rows) {
    auto off = block_offsets(cat, u, u);
    bool same = e.v == u;
    // position of u[a] in e.v, or npos for a repeated summand
    std::vector<std::size_t> pos(u.size(), AlgebraData<K>::npos);
    for (std::size_t a = 0; a < u.size(); ++a) {
        if (same) pos[a] = a;
        else if (std::find(u.begin(), u.end(), u[a]) - u.begin() == static_cast<long>(a))
            pos[a] = e.require_position(cat, u[a]);
    }
    Mat<K> out(0, e.dim());
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::vector<K> x(e.dim(), K(0));
        for (std::size_t a = 0; a < u.size(); ++a) {
            if (pos[a] == AlgebraData<K>::npos) continue;
            for (std::size_t b = 0; b < u.size(); ++b) {
                if (pos[b] == AlgebraData<K>::npos) continue;
                std::size_t d = cat.dim(u[a], u[b]);
                if (!d) continue;
                std::vector<K> h(rows.row(r).begin() + off[a][b], rows.row(r).begin() + off[a][b] + d);
                e.add_hom(x, 0, pos[a], pos[b], h);
            }
        }
        out.append_row(x);
    }
    return out.rows() ? row_space(out) : Mat<K>(0, e.dim());
}

template <class K>
IdealData<K> make_ideal(Catalog<K>& cat, const EAlgebra<K>& e, const AddObj& u, Mat<K> a, Mat<K> b) {
    IdealData<K> id;
    std::size_t n = flat_dim(cat, u, u);
    if (a.rows() == 0) a = Mat<K>(0, n);
    if (b.rows() == 0) b = Mat<K>(0, n);
    id.through_add = a;
    id.through_map = b;
    id.both = subspace_ops(a, b).intersection;
    id.basis = flat_to_e(cat, e, u, id.both);
    id.closed = is_two_sided_ideal(e.table, id.basis);
    return id;
}

/// I in E(V), V = X + M: degree 0 elements factoring through add(M) and
/// through Sigma^{-1} of (alpha_n, 0) : Y -> Sigma X + Sigma M.
template <class K>
IdealData<K> ideal_I(Catalog<K>& cat, const EAlgebra<K>& e, const NSigmaSequence<K>& s, const std::vector<int>& phi,
                     bool check = true) {
    if (check) {
        auto h = check_hypotheses(cat, s, phi);
        if (!h.ok()) throw Error(ErrorKind::HypothesisFailed, h.failures());
    }
    AddObj m = middle_sum(s);
    AddObj v = concat(s.x[0], m);
    auto tilde = pad_angle(cat, s, PadSide::Tilde);
    AddMap<K> g = sigma(cat, tilde.a[s.n() - 1], -1);  // Sigma^{-1} Y -> V
    return make_ideal(cat, e, v, through_add(cat, v, m), through_map_before(cat, v, g));
}

/// J in E(W), W = M + Y: degree 0 elements factoring through add(M) and
/// through (0; alpha_n) : M + Y -> Sigma X.
template <class K>
IdealData<K> ideal_J(Catalog<K>& cat, const EAlgebra<K>& e, const NSigmaSequence<K>& s, const std::vector<int>& phi,
                     bool check = true) {
    if (check) {
        auto h = check_hypotheses(cat, s, phi);
        if (!h.ok()) throw Error(ErrorKind::HypothesisFailed, h.failures());
    }
    AddObj m = middle_sum(s);
    AddObj w = concat(m, s.x[s.n() - 1]);
    auto bar = pad_angle(cat, s, PadSide::Bar);
    const AddMap<K>& g = bar.a[s.n() - 1];  // W -> Sigma X
    return make_ideal(cat, e, w, through_add(cat, w, m), through_map_after(cat, w, g));
}

/// Quotient of a structure-constant algebra by a two-sided ideal, re-presented
/// with generators and monomial words so modules can be built over it.
template <class K>
struct QuotientAlgebra {
    std::shared_ptr<const AlgebraData<K>> alg;
    Mat<K> lift;  // rows: representatives in the original coordinates of the new basis
    LinearCoordinates<K> reduce;  // original coordinates -> (quotient units, ideal) coordinates
    std::vector<std::size_t> units;  // original basis indices spanning the quotient
    Mat<K> to_new;  // quotient-unit coordinates -> new basis coordinates

    /// New-basis coordinates of the class of an original element.
    std::vector<K> project(const std::vector<K>& x) const {
        auto c = reduce.coords(x);
        c.resize(units.size());
        return vec_times(c, to_new);
    }
};

template <class K>
QuotientAlgebra<K> quotient_algebra(const AlgebraData<K>& t, const Mat<K>& ideal, const std::string& name,
                                    bool monomialize = true) {
    std::size_t n = t.dim(), m = t.num_idempotents();
    QuotientAlgebra<K> q;
    // units: idempotents first, then the other basis elements in order
    EchelonBasis<K> acc(n);
    for (std::size_t r = 0; r < ideal.rows(); ++r) acc.add(ideal.row(r));
    std::vector<std::size_t> order(t.idempotents.begin(), t.idempotents.end());
    for (std::size_t b = 0; b < n; ++b)
        if (std::find(order.begin(), order.end(), b) == order.end()) order.push_back(b);
    for (auto b : order)
        if (acc.add(t.unit_vector(b))) q.units.push_back(b);
    for (std::size_t s = 0; s < m; ++s)
        if (q.units[s] != t.idempotents[s]) throw Error(ErrorKind::Internal, name + ": ideal contains an idempotent");
    std::size_t d = q.units.size();
    Mat<K> full(0, n);
    for (auto b : q.units) full.append_row(t.unit_vector(b));
    full = vstack(full, ideal.rows() ? ideal : Mat<K>(0, n));
    q.reduce = LinearCoordinates<K>(full);
    auto red = [&](const std::vector<K>& x) {
        auto c = q.reduce.coords(x);
        c.resize(d);
        return c;
    };
    // quotient structure constants in unit coordinates
    AlgebraData<K> u;
    u.name = name;
    u.idempotent_names = t.idempotent_names;
    for (auto b : q.units) u.basis.push_back(t.basis[b]);
    for (auto& be : u.basis) be.word.clear();
    for (std::size_t s = 0; s < m; ++s) u.idempotents.push_back(s);
    {
        std::vector<SparseVec<K>> pr(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto& p = t.product(q.units[i], q.units[j]);
                if (p.empty()) continue;
                std::vector<K> x(n, K(0));
                for (const auto& [k, v] : p) x[k] += v;
                auto c = red(x);
                for (std::size_t k = 0; k < d; ++k)
                    if (!is_zero(c[k])) pr[i * d + j].push_back({k, c[k]});
            }
        u.products = std::move(pr);
    }
    u.finalize();
    Mat<K> rad = trace_form_radical(u);
    Mat<K> unit_to_orig(d, n);
    for (std::size_t i = 0; i < d; ++i) unit_to_orig(i, q.units[i]) = K(1);
    if (!monomialize) {
        u.radical = rad;
        validate_algebra(u);
        q.lift = unit_to_orig;
        q.to_new = Mat<K>::identity(d);
        q.alg = std::make_shared<AlgebraData<K>>(std::move(u));
        return q;
    }
    if (d - rad.rows() != m)
        throw Error(ErrorKind::Unsupported, name + " is not basic: semisimple quotient has dimension " +
                                                std::to_string(d - rad.rows()));
    // radical and its square, block by block
    auto restrict = [&](const std::vector<K>& x, std::size_t a, std::size_t b) {
        std::vector<K> y(d, K(0));
        for (std::size_t k = 0; k < d; ++k)
            if (u.basis[k].src == a && u.basis[k].tgt == b) y[k] = x[k];
        return y;
    };
    std::vector<std::vector<Mat<K>>> rb(m, std::vector<Mat<K>>(m, Mat<K>(0, d)));
    for (std::size_t r = 0; r < rad.rows(); ++r)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                auto y = restrict(rad.row_copy(r), a, b);
                if (!all_zero<K>(y)) rb[a][b].append_row(y);
            }
    for (auto& row : rb)
        for (auto& x : row)
            if (x.rows()) x = row_space(x);
    std::vector<std::vector<Mat<K>>> rb2(m, std::vector<Mat<K>>(m, Mat<K>(0, d)));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t i = 0; i < rb[a][c].rows(); ++i)
                    for (std::size_t j = 0; j < rb[c][b].rows(); ++j) {
                        auto p = u.multiply(rb[a][c].row_copy(i), rb[c][b].row_copy(j));
                        if (!all_zero<K>(p)) rb2[a][b].append_row(p);
                    }
    // generators and monomials
    struct Mono {
        std::vector<K> x;
        std::size_t src, tgt;
        std::vector<std::size_t> word;
    };
    std::vector<Mono> gens, monos;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Mat<K> g = complement_rows(rb[a][b], rb2[a][b]);
            for (std::size_t i = 0; i < g.rows(); ++i) gens.push_back({g.row_copy(i), a, b, {gens.size()}});
        }
    std::vector<std::vector<EchelonBasis<K>>> span(m, std::vector<EchelonBasis<K>>(m, EchelonBasis<K>(d)));
    std::vector<Mono> frontier;
    for (const auto& g : gens)
        if (span[g.src][g.tgt].add(g.x)) {
            monos.push_back(g);
            frontier.push_back(g);
        }
    while (!frontier.empty()) {
        std::vector<Mono> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                if (g.src != f.tgt) continue;
                auto p = u.multiply(f.x, g.x);
                if (all_zero<K>(p) || !span[f.src][g.tgt].add(p)) continue;
                Mono nm{p, f.src, g.tgt, f.word};
                nm.word.push_back(g.word[0]);
                monos.push_back(nm);
                next.push_back(std::move(nm));
            }
        frontier = std::move(next);
    }
    if (monos.size() != rad.rows()) throw Error(ErrorKind::Internal, name + ": monomials do not span the radical");
    // new basis: idempotents, then monomials
    auto out = std::make_shared<AlgebraData<K>>();
    out->name = name;
    out->idempotent_names = t.idempotent_names;
    Mat<K> nb(0, d);
    for (std::size_t s = 0; s < m; ++s) {
        nb.append_row(u.unit_vector(s));
        out->basis.push_back({"e" + std::to_string(s), s, s, {}});
        out->idempotents.push_back(s);
    }
    for (std::size_t g = 0; g < gens.size(); ++g) out->generators.push_back(0);
    for (const auto& mo : monos) {
        std::string tag;
        for (std::size_t i = 0; i < mo.word.size(); ++i) tag += (i ? "*g" : "g") + std::to_string(mo.word[i]);
        if (mo.word.size() == 1) out->generators[mo.word[0]] = nb.rows();
        out->basis.push_back({tag, mo.src, mo.tgt, mo.word});
        nb.append_row(mo.x);
    }
    LinearCoordinates<K> nlc(nb);
    std::size_t nd = nb.rows();
    out->products.assign(nd * nd, {});
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = 0; j < nd; ++j) {
            if (out->basis[i].tgt != out->basis[j].src) continue;
            auto p = u.multiply(nb.row_copy(i), nb.row_copy(j));
            if (all_zero<K>(p)) continue;
            auto c = nlc.coords(p);
            for (std::size_t k = 0; k < nd; ++k)
                if (!is_zero(c[k])) out->products[i * nd + j].push_back({k, c[k]});
        }
    out->radical = Mat<K>(0, nd);
    for (std::size_t k = m; k < nd; ++k) out->radical.append_row(out->unit_vector(k));
    out->finalize();
    validate_algebra(*out);
    // coordinate changes
    q.lift = nb * unit_to_orig;
    q.to_new = Mat<K>(d, nd);
    for (std::size_t i = 0; i < d; ++i) {
        auto c = nlc.coords(u.unit_vector(i));
        for (std::size_t k = 0; k < nd; ++k) q.to_new(i, k) = c[k];
    }
    q.alg = out;
    return q;
}

}  // namespace angleforge
