#pragma once

// Shared instances built directly, without the job loader: the 10-vertex
// algebra with its nu_2 window and AR 4-angle at 111:0, the A_2 triangle
// window and the A_3 angle with a nonzero ideal.

#include <memory>

#include "angleforge/approx.hpp"
#include "angleforge/catalog.hpp"
#include "angleforge/nangle.hpp"
#include "common.hpp"

namespace testing_support {

inline const char* const kGridLabels[10] = {"300", "210", "120", "030", "201", "111", "021", "102", "012", "003"};

template <class K = Q>
struct Grid10 {
    AlgPtr<K> alg;
    std::unique_ptr<Catalog<K>> cat;
    Family fam;
    std::optional<NAngleInstance<K>> inst;

    std::size_t id(const std::string& name) const { return cat->id(name); }
};

/// Builds the window F^{-l}(P_v), l = -1..2, named "label:l", and the 4-angle.
template <class K = Q>
Grid10<K> make_grid10(bool with_angle = true) {
    Grid10<K> s;
    s.alg = grid10_algebra_reversed<K>();
    s.cat = std::make_unique<Catalog<K>>(Functor<K>::nakayama(s.alg, 2), 2);
    auto& cat = *s.cat;
    for (int lvl = -1; lvl <= 2; ++lvl)
        for (std::size_t v = 0; v < 10; ++v) {
            std::size_t p = cat.add("P" + std::to_string(v + 1) + "@" + std::to_string(lvl),
                                    Complex<K>::stalk(projective(s.alg, v)));
            std::size_t e = cat.translate(p, -lvl);
            cat.rename(e, std::string(kGridLabels[v]) + ":" + std::to_string(lvl));
            s.fam.push_back(e);
        }
    if (with_angle) s.inst = build_from_tower(cat, source_map(cat, cat.id("111:0"), s.fam), 4, s.fam);
    return s;
}

/// Process-wide instance; building it takes a fraction of a second but many tests share it.
inline Grid10<Q>& grid10() {
    static Grid10<Q> s = make_grid10<Q>();
    return s;
}

/// A_2 with Sigma = [1] and F = 1: P1, P2, the cone S of the nonzero map
/// P1 -> P2, and their shifts by -1, 0, 1.
struct A2 {
    AlgPtr<Q> alg;
    std::unique_ptr<Catalog<Q>> cat;
    Family fam;
};

inline A2 make_a2() {
    A2 a;
    a.alg = make_algebra<Q>(a2_quiver().opposite(), {}, "A2");
    a.cat = std::make_unique<Catalog<Q>>(Functor<Q>::identity(a.alg), 1);
    auto& cat = *a.cat;
    auto p1 = projective(a.alg, 0), p2 = projective(a.alg, 1);
    auto hs = hom_modules(p1, p2);
    Complex<Q> s(a.alg, -1, {p1, p2}, {hs.basis[0]});
    for (int sh = -1; sh <= 1; ++sh) {
        std::string suf = sh == 0 ? "" : "[" + std::to_string(sh) + "]";
        a.fam.push_back(cat.add("P1" + suf, shift(Complex<Q>::stalk(p1), sh)));
        a.fam.push_back(cat.add("P2" + suf, shift(Complex<Q>::stalk(p2), sh)));
        a.fam.push_back(cat.add("S" + suf, shift(s, sh)));
    }
    return a;
}

/// 1 -> 2 -> 3 with the composite zero (right modules), F = 1, Sigma = [1],
/// and the triangle P2 -> P1 + P3 -> Y built from (a, 0). Here I is nonzero.
struct A3 {
    AlgPtr<Q> alg;
    std::unique_ptr<Catalog<Q>> cat;
    Family fam;
    std::optional<NAngleInstance<Q>> inst;
};

inline A3 make_a3() {
    A3 a;
    std::vector<Relation<Q>> rels{Relation<Q>{RelationTerm<Q>{Q(1), {"a", "b"}}}};
    a.alg = make_algebra<Q>(a3_quiver(), rels, "A3");
    a.cat = std::make_unique<Catalog<Q>>(Functor<Q>::identity(a.alg), 1);
    auto& cat = *a.cat;
    for (std::size_t v = 0; v < 3; ++v)
        a.fam.push_back(cat.add("P" + std::to_string(v + 1), Complex<Q>::stalk(projective(a.alg, v))));
    auto a1 = AddMap<Q>::zero(cat, {a.fam[1]}, {a.fam[0], a.fam[2]});
    a1.blk[0][0] = {Q(1)};
    a.inst = build_from_tower(cat, a1, 3, a.fam);
    return a;
}

template <class K>
std::vector<std::string> names(const Catalog<K>& cat, const AddObj& x) {
    std::vector<std::string> out;
    for (auto e : x) out.push_back(cat.name(e));
    return out;
}

}  // namespace testing_support
