#include "fixture_algebras.hpp"
#include "displayed_modules.hpp"
#include "rigid_search.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tautilt;
using Q = Rationals;

namespace {

Representation<Q> sum_of(const Algebra<Q>& alg, std::initializer_list<const char*> intervals) {
    std::vector<Representation<Q>> parts;
    for (auto s : intervals) parts.push_back(from_interval(alg, s));
    return direct_sum(alg, parts);
}

template <class F>
void expect_catalogue_invariants(const Catalogue<F>& cat) {
    const auto& alg = cat.algebra();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& it = cat.item(i);
        EXPECT_TRUE(is_indecomposable(it.module)) << it.label;
        for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(indecomposables_isomorphic(it.module, cat.module(j)));
        EXPECT_EQ(it.projective, is_projective(it.module)) << it.label;
        EXPECT_EQ(it.tau.has_value(), !it.projective) << it.label;
        if (it.tau) {
            EXPECT_TRUE(is_isomorphic(cat.module(*it.tau), tau(it.module))) << it.label;
            EXPECT_EQ(cat.item(*it.tau).tau_inv, i);
        }
        EXPECT_EQ(it.injective, !it.tau_inv.has_value()) << it.label;
        for (std::size_t j = 0; j < cat.size(); ++j) EXPECT_EQ(cat.hom(i, j), hom_dim(it.module, cat.module(j)));
    }
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        EXPECT_TRUE(cat.find(projective(alg, v)).has_value());
        EXPECT_TRUE(cat.find(injective(alg, v)).has_value());
    }
    for (const auto& mesh : cat.meshes()) {
        auto dims = cat.module(mesh.end).dims();
        const auto& start = cat.module(mesh.start).dims();
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += start[v];
        std::vector<std::size_t> mid(dims.size(), 0);
        for (const auto& [k, mult] : mesh.middle)
            for (std::size_t v = 0; v < dims.size(); ++v) mid[v] += mult * cat.module(k).dim(v);
        EXPECT_EQ(dims, mid);
    }
    for (std::size_t i = 1; i < cat.size(); ++i) {
        const auto& a = cat.module(i - 1);
        const auto& b = cat.module(i);
        EXPECT_TRUE(a.total_dim() < b.total_dim() || (a.total_dim() == b.total_dim() && a.dims() <= b.dims()));
    }
}

} // namespace

TEST(Catalogue, LineMatchesIntervals) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    // Intervals i..j of 1 -> 2 -> 3 -> 4 -> 5, minus those containing 1..4.
    std::vector<Representation<Q>> intervals;
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j) {
            if (i == 1 && j >= 4) continue;
            std::string s;
            for (int k = i; k <= j; ++k) s += (s.empty() ? "" : "/") + std::to_string(k);
            intervals.push_back(from_interval(c, s));
        }
    ASSERT_EQ(intervals.size(), 13u);
    ASSERT_EQ(cat.size(), 13u);
    std::set<std::size_t> hit;
    for (const auto& m : intervals) {
        auto i = cat.find(m);
        ASSERT_TRUE(i.has_value());
        hit.insert(*i);
    }
    EXPECT_EQ(hit.size(), 13u);
    expect_catalogue_invariants(cat);
}

TEST(Catalogue, CycleContainsDisplayedModules) {
    auto b = fixtures::with_cycle();
    auto cat = build_catalogue(b);
    ASSERT_EQ(cat.size(), 20u);
    std::set<std::size_t> hit;
    for (const auto& [name, m] : displayed::b_modules(b)) {
        EXPECT_TRUE(is_indecomposable(m)) << name;
        auto i = cat.find(m);
        ASSERT_TRUE(i.has_value()) << name;
        hit.insert(*i);
    }
    EXPECT_EQ(hit.size(), 20u);
    expect_catalogue_invariants(cat);
    EXPECT_TRUE(cat.item(*cat.find(projective(b, 3))).projective);
}

TEST(Catalogue, Semisimple) {
    auto k2 = build_algebra<Q>({"a", "b"}, {}, {}, Q{});
    auto cat = build_catalogue(k2);
    ASSERT_EQ(cat.size(), 2u);
    EXPECT_TRUE(cat.item(0).projective && cat.item(0).injective);
    EXPECT_TRUE(cat.meshes().empty());
}

TEST(Catalogue, InfiniteTypeHitsLimit) {
    PrimeField f(3);
    auto kron = build_algebra<PrimeField>({"1", "2"}, {{"x", "1", "2"}, {"y", "1", "2"}}, {}, f);
    try {
        build_catalogue(kron, CatalogueLimits{12, 2000});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
    }
}

TEST(Catalogue, TorsionViews) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    std::vector<Representation<Q>> ps;
    for (std::size_t v = 0; v < 5; ++v) ps.push_back(projective(c, v));
    auto regular = torsion_view(direct_sum(c, ps), cat);
    EXPECT_TRUE(std::all_of(regular.torsion.begin(), regular.torsion.end(), [](bool b) { return b; }));
    EXPECT_TRUE(regular.sincere);

    auto m1 = sum_of(c, {"2/3/4/5", "2/3/4", "3"});
    auto view = torsion_view(m1, cat);
    EXPECT_TRUE(is_isomorphic(view.tau_module, sum_of(c, {"3/4/5", "4"})));
    EXPECT_TRUE(view.torsionfree[*cat.find(from_interval(c, "3/4/5"))]);
    EXPECT_TRUE(view.torsion[*cat.find(from_interval(c, "1/2/3"))]);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = 0; j < cat.size(); ++j)
            if (view.torsion[i] && view.torsionfree[j]) {
                EXPECT_EQ(cat.hom(i, j), 0u);
            }
}

TEST(Catalogue, ExtProjectives) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    auto m1 = sum_of(c, {"2/3/4/5", "2/3/4", "3"});
    for (auto s : {"2/3/4/5", "2/3/4", "3", "1/2/3"}) EXPECT_TRUE(is_ext_projective_in_perp(from_interval(c, s), m1, cat)) << s;
    EXPECT_FALSE(is_ext_projective_in_perp(from_interval(c, "1/2"), m1, cat));
    try {
        is_ext_projective_in_perp(simple(c, 3), m1, cat);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInTorsionClass);
    }
}

TEST(Catalogue, BongartzExamples) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    auto m1 = sum_of(c, {"2/3/4/5", "2/3/4", "3"});
    EXPECT_TRUE(is_isomorphic(bongartz_complement(m1, cat).module, sum_of(c, {"1/2/3", "3/4"})));
    EXPECT_TRUE(is_isomorphic(bongartz_complement(from_interval(c, "3/4/5"), cat).module,
                              sum_of(c, {"5", "4/5", "2/3/4/5", "1/2/3"})));
    std::vector<Representation<Q>> ps;
    for (std::size_t v = 0; v < 5; ++v) ps.push_back(projective(c, v));
    EXPECT_TRUE(bongartz_complement(direct_sum(c, ps), cat).module.is_zero());
    try {
        bongartz_complement(sum_of(c, {"3", "2"}), cat);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotTauRigid);
    }
}

TEST(Catalogue, BongartzIgnoresItemOrder) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    auto items = cat.items();
    const auto n = items.size();
    std::reverse(items.begin(), items.end());
    for (auto& it : items) {
        if (it.tau) it.tau = n - 1 - *it.tau;
        if (it.tau_inv) it.tau_inv = n - 1 - *it.tau_inv;
    }
    Catalogue<Q> reversed(c, items, {}, {});
    for (const auto& set : search::rigid_sets(cat)) {
        auto m = cat.sum(set);
        EXPECT_TRUE(is_isomorphic(bongartz_complement(m, cat).module, bongartz_complement(m, reversed).module));
    }
}

TEST(Catalogue, TauTilting) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    std::vector<Representation<Q>> ps;
    for (std::size_t v = 0; v < 5; ++v) ps.push_back(projective(c, v));
    EXPECT_TRUE(is_tau_tilting(direct_sum(c, ps), cat));
    auto m1 = sum_of(c, {"2/3/4/5", "2/3/4", "3"});
    EXPECT_TRUE(is_tau_tilting(direct_sum(m1, sum_of(c, {"1/2/3", "3/4"})), cat));
    EXPECT_FALSE(is_tau_tilting(m1, cat));
    EXPECT_FALSE(is_tau_tilting(m1));
}

TEST(Catalogue, RigidModulesAreSmall) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    auto sets = search::rigid_sets(cat);
    EXPECT_EQ(sets.size(), 259u);
    for (const auto& s : sets) {
        auto m = cat.sum(s);
        ASSERT_TRUE(is_tau_rigid(m));
        EXPECT_LE(basic_summand_count(m), 5u);
    }
}

TEST(Catalogue, TauTiltingCounts) {
    // Values from the hom-table search, frozen.
    auto count = [](const auto& cat, std::size_t& rigid, std::size_t& tilting) {
        auto sets = search::rigid_sets(cat);
        rigid = sets.size();
        tilting = 0;
        for (const auto& s : sets) {
            bool full = s.size() == cat.algebra().vertex_count();
            EXPECT_EQ(is_tau_tilting(cat.sum(s)), full);
            tilting += full;
        }
    };
    std::size_t rigid = 0, tilting = 0;
    count(build_catalogue(fixtures::line_with_zero_relation()), rigid, tilting);
    EXPECT_EQ(rigid, 259u);
    EXPECT_EQ(tilting, 23u);
    count(build_catalogue(fixtures::with_cycle()), rigid, tilting);
    EXPECT_EQ(rigid, 547u);
    EXPECT_EQ(tilting, 56u);
}

TEST(Catalogue, ExactlyOneAlternative) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    auto r1 = exactly_one_alternative(from_interval(c, "1/2/3"), sum_of(c, {"2/3/4/5", "2/3/4", "3", "3/4"}), cat);
    EXPECT_TRUE(r1.containment);
    EXPECT_FALSE(r1.generated);
    // 3 is a quotient of 3/4.
    auto r2 = exactly_one_alternative(simple(c, 2), sum_of(c, {"2/3/4/5", "2/3/4", "1/2/3", "3/4"}), cat);
    EXPECT_TRUE(r2.generated);
    EXPECT_FALSE(r2.containment);
    try {
        exactly_one_alternative(simple(c, 2), sum_of(c, {"2/3/4/5", "2/3/4"}), cat);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
    }
}

TEST(Catalogue, BruteForceBongartzAgrees) {
    auto c = fixtures::line_with_zero_relation();
    auto cat = build_catalogue(c);
    auto sets = search::rigid_sets(cat);
    for (const auto& s : sets) {
        auto brute = search::brute_bongartz(cat, s, sets);
        ASSERT_TRUE(brute.has_value());
        EXPECT_EQ(bongartz_complement(cat.sum(s), cat).items, *brute);
    }
}
