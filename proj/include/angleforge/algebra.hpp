#pragma once

// Finite-dimensional algebras with a complete set of orthogonal idempotents,
// given by a homogeneous basis and structure constants. Every basis element
// b lives in e_src b e_tgt, and products concatenate: b_i * b_j is nonzero only
// when tgt(b_i) == src(b_j). Quiver algebras are one source of such data;
// perforated Yoneda algebras are another.

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "angleforge/error.hpp"
#include "angleforge/matrix.hpp"

namespace angleforge {

struct Arrow {
    std::string label;
    std::size_t from = 0, to = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        std::set<std::string> seen;
        for (const auto& v : vertices_)
            if (!seen.insert(v).second) throw Error(ErrorKind::Input, "duplicate vertex " + v);
        seen.clear();
        for (const auto& a : arrows_) {
            if (a.from >= vertices_.size() || a.to >= vertices_.size())
                throw Error(ErrorKind::Input, "arrow " + a.label + " has an unknown endpoint");
            if (!seen.insert(a.label).second) throw Error(ErrorKind::Input, "duplicate arrow " + a.label);
        }
        check_acyclic();
    }

    /// Convenience constructor from (label, from-name, to-name) triples.
    static Quiver from_names(std::vector<std::string> vertices,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
        std::vector<Arrow> as;
        for (const auto& [label, f, t] : arrows) {
            auto fi = std::find(vertices.begin(), vertices.end(), f);
            auto ti = std::find(vertices.begin(), vertices.end(), t);
            if (fi == vertices.end() || ti == vertices.end())
                throw Error(ErrorKind::Input, "arrow " + label + " has an unknown endpoint");
            as.push_back({label, std::size_t(fi - vertices.begin()), std::size_t(ti - vertices.begin())});
        }
        return Quiver(std::move(vertices), std::move(as));
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t arrow_index(const std::string& label) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].label == label) return i;
        throw Error(ErrorKind::UnknownArrow, label);
    }

    /// Same vertices, every arrow reversed.
    Quiver opposite() const {
        std::vector<Arrow> as;
        for (const auto& a : arrows_) as.push_back({a.label, a.to, a.from});
        return Quiver(vertices_, std::move(as));
    }

private:
    void check_acyclic() const {
        std::vector<int> indeg(vertices_.size(), 0);
        for (const auto& a : arrows_) ++indeg[a.to];
        std::vector<std::size_t> queue;
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (indeg[v] == 0) queue.push_back(v);
        std::size_t done = 0;
        while (done < queue.size()) {
            std::size_t v = queue[done++];
            for (const auto& a : arrows_)
                if (a.from == v && --indeg[a.to] == 0) queue.push_back(a.to);
        }
        if (queue.size() != vertices_.size()) throw Error(ErrorKind::CyclicQuiver, "quiver has an oriented cycle");
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

template <class K>
struct RelationTerm {
    K coeff;
    std::vector<std::string> path;  // arrow labels in traversal order
};

template <class K>
using Relation = std::vector<RelationTerm<K>>;

/// Relations of the opposite quiver: every path read backwards.
template <class K>
std::vector<Relation<K>> opposite_relations(const std::vector<Relation<K>>& rels) {
    std::vector<Relation<K>> out = rels;
    for (auto& r : out)
        for (auto& t : r) std::reverse(t.path.begin(), t.path.end());
    return out;
}

/// A path as a sequence of arrow indices; trivial paths carry only a vertex.
struct Path {
    std::size_t src = 0, tgt = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows.empty()) return a.src < b.src;
        return a.arrows < b.arrows;
    }
    friend bool operator==(const Path& a, const Path& b) {
        return a.src == b.src && a.tgt == b.tgt && a.arrows == b.arrows;
    }
};

/// All paths of an acyclic quiver, ordered by length then lexicographically
/// by arrow index (trivial paths first, in vertex order).
inline std::vector<Path> enumerate_paths(const Quiver& q) {
    std::vector<Path> out;
    for (std::size_t v = 0; v < q.vertices().size(); ++v) out.push_back({v, v, {}});
    std::vector<Path> frontier = out;
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (std::size_t a = 0; a < q.arrows().size(); ++a)
                if (q.arrows()[a].from == p.tgt) {
                    Path r = p;
                    r.arrows.push_back(a);
                    r.tgt = q.arrows()[a].to;
                    next.push_back(std::move(r));
                }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

inline std::string path_name(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e" + q.vertices()[p.src];
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + q.arrows()[p.arrows[i]].label;
    return s;
}

struct BasisElement {
    std::string tag;
    std::size_t src = 0, tgt = 0;
    std::vector<std::size_t> word;  // positions in AlgebraData::generators, in multiplication order
};

template <class K>
using SparseVec = std::vector<std::pair<std::size_t, K>>;

template <class K>
struct AlgebraData {
    std::string name;
    std::vector<std::string> idempotent_names;
    std::vector<BasisElement> basis;
    std::vector<std::size_t> idempotents;  // basis index of e_s
    std::vector<std::size_t> generators;   // basis indices; together with idempotents they generate
    std::vector<SparseVec<K>> products;    // products[i * dim + j] = b_i * b_j
    Mat<K> radical;                        // rows: coordinates of a radical basis

    // Derived lookup tables, filled by finalize().
    std::vector<std::vector<std::vector<std::size_t>>> block;  // block[s][t]: basis indices in e_s A e_t
    std::vector<std::size_t> position_in_block;
    std::vector<std::size_t> generator_position;  // basis index -> position in generators, or npos

    static constexpr std::size_t npos = std::size_t(-1);

    std::size_t dim() const { return basis.size(); }
    std::size_t num_idempotents() const { return idempotent_names.size(); }
    const SparseVec<K>& product(std::size_t i, std::size_t j) const { return products[i * dim() + j]; }

    void finalize() {
        std::size_t m = num_idempotents();
        block.assign(m, std::vector<std::vector<std::size_t>>(m));
        position_in_block.assign(dim(), 0);
        for (std::size_t b = 0; b < dim(); ++b) {
            auto& blk = block[basis[b].src][basis[b].tgt];
            position_in_block[b] = blk.size();
            blk.push_back(b);
        }
        generator_position.assign(dim(), npos);
        for (std::size_t g = 0; g < generators.size(); ++g) generator_position[generators[g]] = g;
    }

    /// Product of two elements given in basis coordinates.
    std::vector<K> multiply(const std::vector<K>& x, const std::vector<K>& y) const {
        std::vector<K> r(dim(), K(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (is_zero(y[j])) continue;
                K c = x[i] * y[j];
                for (const auto& [k, v] : product(i, j)) r[k] += c * v;
            }
        }
        return r;
    }

    std::vector<K> unit_vector(std::size_t i) const {
        std::vector<K> v(dim(), K(0));
        v[i] = K(1);
        return v;
    }

    std::vector<K> one() const {
        std::vector<K> v(dim(), K(0));
        for (auto e : idempotents) v[e] = K(1);
        return v;
    }
};

template <class K>
using AlgPtr = std::shared_ptr<const AlgebraData<K>>;

/// Dickson's trace-form criterion: in characteristic 0 (and for p larger than
/// the dimension) the radical is {x : Tr(L_{xy}) = 0 for all y}.
template <class K>
Mat<K> trace_form_radical(const AlgebraData<K>& a) {
    std::size_t n = a.dim();
    std::vector<K> tr(n, K(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [j, c] : a.product(k, i))
                if (j == i) tr[k] += c;
    Mat<K> gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : a.product(i, j)) gram(i, j) += c * tr[k];
    return row_space(left_kernel(gram));
}

/// Checks associativity on all basis triples; returns the first failing triple if any.
template <class K>
std::optional<std::array<std::size_t, 3>> find_associativity_failure(const AlgebraData<K>& a) {
    std::size_t n = a.dim();
    std::vector<K> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a.basis[i].tgt != a.basis[j].src) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (a.basis[j].tgt != a.basis[k].src) continue;
                std::fill(lhs.begin(), lhs.end(), K(0));
                std::fill(rhs.begin(), rhs.end(), K(0));
                for (const auto& [m, c] : a.product(i, j))
                    for (const auto& [r, d] : a.product(m, k)) lhs[r] += c * d;
                for (const auto& [m, c] : a.product(j, k))
                    for (const auto& [r, d] : a.product(i, m)) rhs[r] += c * d;
                if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

/// Idempotent identities: e_s e_t = delta e_s, e_s b = [src b = s] b, b e_t = [tgt b = t] b.
template <class K>
bool check_idempotents(const AlgebraData<K>& a) {
    for (std::size_t s = 0; s < a.num_idempotents(); ++s) {
        std::size_t e = a.idempotents[s];
        if (a.basis[e].src != s || a.basis[e].tgt != s) return false;
        for (std::size_t b = 0; b < a.dim(); ++b) {
            SparseVec<K> expect_left, expect_right;
            if (a.basis[b].src == s) expect_left = {{b, K(1)}};
            if (a.basis[b].tgt == s) expect_right = {{b, K(1)}};
            if (a.product(e, b) != expect_left || a.product(b, e) != expect_right) return false;
        }
    }
    return true;
}

/// Two-sided ideal test for a subspace given by row coordinates.
template <class K>
bool is_two_sided_ideal(const AlgebraData<K>& a, const Mat<K>& ideal) {
    if (ideal.rows() == 0) return true;
    EchelonBasis<K> span(a.dim());
    for (std::size_t r = 0; r < ideal.rows(); ++r) span.add(ideal.row(r));
    for (std::size_t r = 0; r < ideal.rows(); ++r) {
        auto x = ideal.row_copy(r);
        for (std::size_t b = 0; b < a.dim(); ++b) {
            auto e = a.unit_vector(b);
            if (!span.contains(a.multiply(x, e)) || !span.contains(a.multiply(e, x))) return false;
        }
    }
    return true;
}

template <class K>
bool is_nilpotent_subspace(const AlgebraData<K>& a, const Mat<K>& sub) {
    Mat<K> power = row_space(sub);
    for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
        if (power.rows() == 0) return true;
        Mat<K> next(0, a.dim());
        for (std::size_t i = 0; i < power.rows(); ++i)
            for (std::size_t j = 0; j < sub.rows(); ++j) {
                auto v = a.multiply(power.row_copy(i), sub.row_copy(j));
                if (!all_zero<K>(v)) next.append_row(v);
            }
        power = next.rows() ? row_space(next) : Mat<K>(0, a.dim());
    }
    return power.rows() == 0;
}

/// Full invariant check: associativity, idempotents, radical is a nilpotent ideal
/// with semisimple quotient (trace-form radical has the same span).
template <class K>
void validate_algebra(const AlgebraData<K>& a) {
    if (auto bad = find_associativity_failure(a))
        throw Error(ErrorKind::Internal, a.name + ": associativity fails on basis triple (" +
                                             std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                                             std::to_string((*bad)[2]) + ")");
    if (!check_idempotents(a)) throw Error(ErrorKind::Internal, a.name + ": idempotent identities fail");
    if (!is_two_sided_ideal(a, a.radical)) throw Error(ErrorKind::Internal, a.name + ": radical is not an ideal");
    if (!is_nilpotent_subspace(a, a.radical)) throw Error(ErrorKind::Internal, a.name + ": radical is not nilpotent");
    Mat<K> tr = trace_form_radical(a);
    if (row_space(a.radical) != tr) throw Error(ErrorKind::Internal, a.name + ": quotient by radical is not semisimple");
}

/// Algebra from quiver and relations: residue classes of paths modulo the
/// two-sided ideal generated by the relations. The basis consists of the
/// normal monomials (paths that are not leading terms of the ideal), where
/// longer paths lead.
template <class K>
AlgebraData<K> build_algebra(const Quiver& q, const std::vector<Relation<K>>& relations,
                             const std::string& name = "A") {
    auto paths = enumerate_paths(q);
    std::map<std::vector<std::size_t>, std::size_t> nontrivial_index;
    for (std::size_t i = q.vertices().size(); i < paths.size(); ++i) nontrivial_index[paths[i].arrows] = i;
    std::size_t np = paths.size();

    // Relations as path-coordinate vectors, validated.
    struct Rel {
        std::size_t src, tgt;
        SparseVec<K> terms;
    };
    std::vector<Rel> rels;
    for (const auto& rel : relations) {
        if (rel.empty()) continue;
        Rel r{0, 0, {}};
        bool first = true;
        for (const auto& term : rel) {
            if (term.path.size() < 2) throw Error(ErrorKind::Input, "relation path of length < 2");
            std::vector<std::size_t> arrows;
            for (const auto& l : term.path) arrows.push_back(q.arrow_index(l));
            for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
                if (q.arrows()[arrows[i]].to != q.arrows()[arrows[i + 1]].from)
                    throw Error(ErrorKind::Input, "relation path is not composable");
            std::size_t s = q.arrows()[arrows.front()].from, t = q.arrows()[arrows.back()].to;
            if (first) {
                r.src = s;
                r.tgt = t;
                first = false;
            } else if (s != r.src || t != r.tgt) {
                throw Error(ErrorKind::Input, "relation is not homogeneous in source and target");
            }
            r.terms.push_back({nontrivial_index.at(arrows), term.coeff});
        }
        rels.push_back(std::move(r));
    }

    // Column order for elimination: longer paths first, so pivots are leading terms.
    std::vector<std::size_t> col_of(np), path_of_col(np);
    {
        std::vector<std::size_t> order(np);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return paths[a].length() > paths[b].length(); });
        for (std::size_t c = 0; c < np; ++c) {
            path_of_col[c] = order[c];
            col_of[order[c]] = c;
        }
    }

    auto concat = [&](const Path& a, const Path& b) -> std::optional<std::size_t> {
        if (a.tgt != b.src) return std::nullopt;
        if (a.arrows.empty()) return b.arrows.empty() ? std::optional<std::size_t>(a.src) : nontrivial_index.at(b.arrows);
        if (b.arrows.empty()) return nontrivial_index.at(a.arrows);
        auto w = a.arrows;
        w.insert(w.end(), b.arrows.begin(), b.arrows.end());
        return nontrivial_index.at(w);
    };

    Mat<K> ideal_rows(0, np);
    for (const auto& r : rels)
        for (const auto& p : paths) {
            if (p.tgt != r.src) continue;
            for (const auto& s : paths) {
                if (s.src != r.tgt) continue;
                std::vector<K> v(np, K(0));
                for (const auto& [idx, c] : r.terms) {
                    auto left = concat(p, paths[idx]);
                    auto full = concat(paths[*left], s);
                    v[col_of[*full]] += c;
                }
                if (!all_zero<K>(v)) ideal_rows.append_row(v);
            }
        }
    Mat<K> red = ideal_rows.rows() ? row_space(ideal_rows) : Mat<K>(0, np);
    std::vector<bool> is_pivot(np, false);
    std::vector<std::size_t> pivot_row(np, 0);
    for (std::size_t r = 0; r < red.rows(); ++r)
        for (std::size_t c = 0; c < np; ++c)
            if (!is_zero(red(r, c))) {
                is_pivot[c] = true;
                pivot_row[c] = r;
                break;
            }

    AlgebraData<K> a;
    a.name = name;
    a.idempotent_names = q.vertices();
    std::vector<std::size_t> basis_of_path(np, AlgebraData<K>::npos);
    std::vector<std::size_t> basis_paths;
    for (std::size_t p = 0; p < np; ++p)
        if (!is_pivot[col_of[p]]) {
            basis_of_path[p] = basis_paths.size();
            basis_paths.push_back(p);
        }
    // Generators: the arrows (never leading terms since relations have length >= 2).
    std::vector<std::size_t> arrow_gen(q.arrows().size());
    for (std::size_t ar = 0; ar < q.arrows().size(); ++ar) {
        std::size_t b = basis_of_path[nontrivial_index.at({ar})];
        ensure(b != AlgebraData<K>::npos, "arrow became a leading term");
        arrow_gen[ar] = a.generators.size();
        a.generators.push_back(b);
    }
    for (std::size_t p : basis_paths) {
        BasisElement be;
        be.tag = path_name(q, paths[p]);
        be.src = paths[p].src;
        be.tgt = paths[p].tgt;
        for (auto ar : paths[p].arrows) be.word.push_back(arrow_gen[ar]);
        a.basis.push_back(std::move(be));
    }
    for (std::size_t v = 0; v < q.vertices().size(); ++v) a.idempotents.push_back(basis_of_path[v]);

    // Normal form of a path as a sparse vector in the monomial basis.
    auto normal_form = [&](std::size_t p) -> SparseVec<K> {
        std::size_t c = col_of[p];
        if (!is_pivot[c]) return {{basis_of_path[p], K(1)}};
        SparseVec<K> out;
        std::size_t r = pivot_row[c];
        for (std::size_t j = 0; j < np; ++j) {
            if (j == c || is_zero(red(r, j))) continue;
            std::size_t pj = path_of_col[j];
            out.push_back({basis_of_path[pj], -red(r, j)});
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    };

    std::size_t n = basis_paths.size();
    a.products.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto c = concat(paths[basis_paths[i]], paths[basis_paths[j]]);
            if (c) a.products[i * n + j] = normal_form(*c);
        }
    a.radical = Mat<K>(0, n);
    for (std::size_t b = 0; b < n; ++b)
        if (!paths[basis_paths[b]].arrows.empty()) a.radical.append_row(a.unit_vector(b));
    a.finalize();
    validate_algebra(a);
    return a;
}

/// Opposite algebra on the same basis: src and tgt swap and products reverse.
template <class K>
AlgebraData<K> opposite_algebra(const AlgebraData<K>& a) {
    AlgebraData<K> o;
    o.name = a.name + "^op";
    o.idempotent_names = a.idempotent_names;
    o.basis = a.basis;
    for (auto& b : o.basis) {
        std::swap(b.src, b.tgt);
        std::reverse(b.word.begin(), b.word.end());
    }
    o.idempotents = a.idempotents;
    o.generators = a.generators;
    std::size_t n = a.dim();
    o.products.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) o.products[i * n + j] = a.product(j, i);
    o.radical = a.radical;
    o.finalize();
    return o;
}

}  // namespace angleforge
