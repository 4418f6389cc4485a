#include <gtest/gtest.h>

#include <set>

#include "angleforge/nakayama.hpp"
#include "common.hpp"
#include "path_oracle.hpp"

using namespace angleforge;
using namespace testing_support;

namespace {

std::vector<std::size_t> dims_of(const Rep<Q>& m) { return m.dims; }

}  // namespace

TEST(BuildAlgebra, SingleArrow) {
    auto a = make_algebra<Q>(a2_quiver(), {});
    EXPECT_EQ(a->dim(), 3u);
    EXPECT_EQ(a->radical.rows(), 1u);
}

TEST(BuildAlgebra, OneVertexIsTheField) {
    auto a = make_algebra<Q>(Quiver({"1"}, {}), {});
    EXPECT_EQ(a->dim(), 1u);
    EXPECT_EQ(a->radical.rows(), 0u);
}

TEST(BuildAlgebra, Grid10MatchesBruteForceClosure) {
    auto q = grid10_quiver();
    auto rels = grid10_relations();
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t expect = oracle_dim(q, rels, &blocks);
    auto a = make_algebra(q, rels);
    EXPECT_EQ(a->dim(), expect);
    for (std::size_t s = 0; s < 10; ++s)
        for (std::size_t t = 0; t < 10; ++t) EXPECT_EQ(a->block[s][t].size(), blocks[s][t]);
    EXPECT_FALSE(find_associativity_failure(*a));
}

TEST(BuildAlgebra, Errors) {
    EXPECT_THROW(Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), Error);
    try {
        Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CyclicQuiver);
    }
    Relation<Q> bad{{Q(1), {"a", "zz"}}};
    try {
        build_algebra<Q>(a3_quiver(), {bad});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownArrow);
    }
}

TEST(BuildAlgebra, ZeroRelationOnA3) {
    auto a = make_algebra<Q>(a3_quiver(), {{{Q(1), {"a", "b"}}}});
    EXPECT_EQ(a->dim(), 5u);
    auto opp = opposite_algebra(*a);
    EXPECT_FALSE(find_associativity_failure(opp));
    EXPECT_TRUE(check_idempotents(opp));
}

TEST(Projectives, SingleArrow) {
    auto a = make_algebra<Q>(a2_quiver(), {});
    auto p1 = projective(a, 0), p2 = projective(a, 1);
    EXPECT_EQ(dims_of(p1), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(dims_of(p2), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(hom_modules(p2, p1).dim(), 1u);
    EXPECT_EQ(hom_modules(p1, p2).dim(), 0u);
    EXPECT_TRUE(is_valid_rep(p1));
}

TEST(Projectives, Grid10DimensionVectors) {
    auto q = grid10_quiver();
    auto rels = grid10_relations();
    std::vector<std::vector<std::size_t>> blocks;
    oracle_dim(q, rels, &blocks);
    auto a = make_algebra(q, rels);
    std::size_t total = 0;
    for (std::size_t t = 0; t < 10; ++t) {
        auto p = projective(a, t);
        EXPECT_TRUE(is_valid_rep(p));
        for (std::size_t s = 0; s < 10; ++s) EXPECT_EQ(p.dims[s], blocks[t][s]);
        total += p.total();
        // top is simple at t
        auto rad = radical_of_module(p);
        for (std::size_t s = 0; s < 10; ++s) EXPECT_EQ(p.dims[s] - rad[s].rows(), s == t ? 1u : 0u);
    }
    EXPECT_EQ(total, a->dim());
}

TEST(HomModules, YonedaCountAndGenericAgreement) {
    auto a = make_algebra(grid10_quiver(), grid10_relations());
    std::mt19937 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        auto m = random_module(a, rng);
        ASSERT_TRUE(is_valid_rep(m));
        auto id = ModMap<Q>::identity(m);
        auto end = hom_modules(m, m);
        EXPECT_TRUE(end.checked_coords(id).has_value());
        for (std::size_t t = 0; t < 10; ++t) {
            auto p = projective(a, t);
            auto y = hom_modules(p, m);
            auto g = hom_generic(p, m);
            EXPECT_EQ(y.dim(), m.dims[t]);
            EXPECT_EQ(g.dim(), m.dims[t]);
            for (const auto& f : y.basis) EXPECT_TRUE(is_module_map(f, p, m));
        }
    }
}

TEST(HomModules, BetweenProjectivesCountsPathClasses) {
    auto a = make_algebra(grid10_quiver(), grid10_relations());
    for (std::size_t s = 0; s < 10; ++s)
        for (std::size_t t = 0; t < 10; ++t) {
            auto h = hom_generic(projective(a, s), projective(a, t));
            EXPECT_EQ(h.dim(), a->block[t][s].size());
        }
}

TEST(Nakayama, SingleArrowInjective) {
    auto a = make_algebra<Q>(a2_quiver(), {});
    Nakayama<Q> nu(a);
    EXPECT_EQ(dims_of(nu.injective(1)), (std::vector<std::size_t>{1, 1}));
    EXPECT_TRUE(is_valid_rep(nu.injective(1)));
}

TEST(Nakayama, FieldIsSymmetric) {
    auto a = make_algebra<Q>(Quiver({"1"}, {}), {});
    Nakayama<Q> nu(a);
    EXPECT_EQ(dims_of(nu.injective(0)), dims_of(projective(a, 0)));
}

TEST(Nakayama, Grid10DimensionsAndInverse) {
    auto a = make_algebra(grid10_quiver(), grid10_relations());
    Nakayama<Q> nu(a);
    for (std::size_t t = 0; t < 10; ++t) {
        const auto& inj = nu.injective(t);
        EXPECT_TRUE(is_valid_rep(inj));
        std::size_t col = 0;
        for (std::size_t s = 0; s < 10; ++s) col += a->block[s][t].size();
        EXPECT_EQ(inj.total(), col);
        // socle of I_t is simple at t: Hom(S_s, I_t) = delta
        for (std::size_t s = 0; s < 10; ++s)
            EXPECT_EQ(hom_modules(simple_module(a, s), inj).dim(), s == t ? 1u : 0u);
        auto back = nu.apply_inverse(inj);
        EXPECT_TRUE(is_valid_rep(back));
        EXPECT_EQ(dims_of(back), dims_of(projective(a, t)));
        auto e = make_explicit_projective(back);
        EXPECT_EQ(e.proj.tops, (std::vector<std::size_t>{t}));
    }
}

TEST(Nakayama, FunctorialOnMaps) {
    auto a = make_algebra(grid10_quiver(), grid10_relations());
    Nakayama<Q> nu(a);
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_module(a, rng), n = random_module(a, rng);
        auto h = hom_modules(m, n);
        auto num = nu.apply(m), nun = nu.apply(n);
        EXPECT_TRUE(is_valid_rep(num));
        for (const auto& f : h.basis) EXPECT_TRUE(is_module_map(nu.apply(f, m, n), num, nun));
        auto e = nu.apply(ModMap<Q>::identity(m), m, m);
        EXPECT_EQ(e, ModMap<Q>::identity(num));
    }
}

TEST(Resolution, ProjectiveAndSimples) {
    auto a = make_algebra<Q>(a2_quiver(), {});
    auto r = min_proj_resolution(projective(a, 0));
    EXPECT_EQ(r.terms.size(), 1u);
    auto s2 = min_proj_resolution(simple_module(a, 1));
    EXPECT_EQ(s2.terms.size(), 1u);
    auto s1 = min_proj_resolution(simple_module(a, 0));
    ASSERT_EQ(s1.terms.size(), 2u);
    EXPECT_EQ(s1.terms[1].tops, (std::vector<std::size_t>{1}));
    EXPECT_EQ(s1.terms[0].tops, (std::vector<std::size_t>{0}));
}

TEST(Resolution, Grid10SimplesAreMinimalAndExact) {
    auto a = make_algebra(grid10_quiver(), grid10_relations());
    for (std::size_t t = 0; t < 10; ++t) {
        auto s = simple_module(a, t);
        auto r = min_proj_resolution(s);
        EXPECT_LE(r.terms.size(), 4u);
        for (std::size_t k = 0; k < r.diffs.size(); ++k) {
            // image inside the radical of the next term
            auto rad = radical_of_module(r.terms[k]);
            for (std::size_t v = 0; v < 10; ++v) EXPECT_TRUE(contained_in(r.diffs[k].b[v], rad[v]));
            ModMap<Q> comp = k == 0 ? r.diffs[0] * r.augmentation : r.diffs[k] * r.diffs[k - 1];
            EXPECT_TRUE(comp.is_zero());
        }
        // exactness by ranks: alternating sum of dimensions vanishes vertexwise
        for (std::size_t v = 0; v < 10; ++v) {
            long long chi = -(long long)s.dims[v];
            for (std::size_t k = 0; k < r.terms.size(); ++k) chi += (k % 2 ? -1 : 1) * (long long)r.terms[k].dims[v];
            EXPECT_EQ(chi, 0);
        }
    }
    EXPECT_THROW(min_proj_resolution(simple_module(a, 0), 0), Error);
}
