#include "test_support.hpp"
#include "tautilt/decompose.hpp"

#include <gtest/gtest.h>

using namespace tautilt;
using Dims = std::vector<std::size_t>;

namespace {

const Algebra<Rationals>& line() {
    static auto c = fixtures::line_with_zero_relation();
    return c;
}
const Algebra<Rationals>& cyc() {
    static auto b = fixtures::with_cycle();
    return b;
}

Representation<Rationals> iv(const std::string& s) { return from_interval(line(), s); }

} // namespace

TEST(StandardModules, Projectives) {
    auto p3 = projective(line(), 2);
    EXPECT_EQ(p3.dims(), (Dims{0, 0, 1, 1, 1}));
    EXPECT_EQ(loewy_label(p3), "3/4/5");
    EXPECT_EQ(projective(cyc(), 3).dims(), (Dims{1, 1, 0, 1, 1}));
    EXPECT_EQ(loewy_label(projective(cyc(), 3)), "4/1 5/2");
    auto s1 = simple(line(), 0);
    EXPECT_EQ(s1.dims(), (Dims{1, 0, 0, 0, 0}));
    for (const auto& a : s1.arrows()) EXPECT_TRUE(a.is_zero());
    std::size_t total = 0;
    for (std::size_t v = 0; v < 5; ++v) total += projective(cyc(), v).total_dim();
    EXPECT_EQ(total, cyc().dimension());
}

TEST(StandardModules, ProjectivesSatisfyRelations) {
    for (const auto* alg : {&line(), &cyc()})
        for (std::size_t v = 0; v < 5; ++v) {
            EXPECT_FALSE(projective(*alg, v).first_violated_relation().has_value());
            EXPECT_FALSE(injective(*alg, v).first_violated_relation().has_value());
        }
}

TEST(StandardModules, Injectives) {
    // I(3) over the line: paths ending at 3 come from 1, 2, 3.
    EXPECT_EQ(injective(line(), 2).dims(), (Dims{1, 1, 1, 0, 0}));
    EXPECT_EQ(loewy_label(injective(line(), 2)), "1/2/3");
    EXPECT_TRUE(injective(line(), 2).algebra() == line());
}

TEST(Intervals, Construction) {
    EXPECT_EQ(iv("2/3/4/5").dims(), (Dims{0, 1, 1, 1, 1}));
    EXPECT_TRUE(iv("3") == simple(line(), 2));
    try {
        iv("1/2/3/4");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInterval);
    }
    EXPECT_THROW(iv("1/3"), Error);
    EXPECT_THROW(iv("9"), Error);
    EXPECT_EQ(loewy_label(from_interval(cyc(), "3/4/1")), "3/4/1");
    EXPECT_THROW(from_interval(cyc(), "3/4/1/2"), Error);
}

TEST(Representation, RejectsRelationViolation) {
    std::vector<Matrix<Rationals>> arrows;
    Rationals q;
    for (int a = 0; a < 4; ++a) arrows.push_back(Matrix<Rationals>::identity(q, 1));
    try {
        Representation<Rationals>(line(), Dims{1, 1, 1, 1, 1}, arrows);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RelationViolation);
    }
}

TEST(Hom, HandComputedValues) {
    EXPECT_EQ(hom_dim(iv("1/2/3"), simple(line(), 0)), 1u);
    EXPECT_EQ(hom_dim(simple(line(), 0), iv("1/2/3")), 0u);
    EXPECT_EQ(hom_dim(iv("2/3/4/5"), iv("3/4/5")), 0u);
    EXPECT_EQ(hom_dim(iv("3/4/5"), iv("2/3/4/5")), 1u);
    auto u2 = direct_sum(line(), {iv("5"), iv("4/5"), iv("2/3/4/5"), iv("1/2/3")});
    EXPECT_GT(hom_dim(u2, direct_sum(iv("4"), iv("1"))), 0u);
}

TEST(Hom, ProjectiveAndInjectiveYoga) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 25; ++trial) {
        const auto& alg = trial % 2 ? cyc() : line();
        auto m = support::random_module(alg, rng);
        for (std::size_t v = 0; v < 5; ++v) {
            EXPECT_EQ(hom_dim(projective(alg, v), m), m.dim(v));
            EXPECT_EQ(hom_dim(m, injective(alg, v)), m.dim(v));
        }
    }
}

TEST(Hom, MatchesEnumerationOverF2) {
    PrimeField f2(2);
    auto c = fixtures::line_with_zero_relation(f2);
    auto b = fixtures::with_cycle(f2);
    std::mt19937 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        const auto& alg = trial % 2 ? b : c;
        auto m = support::random_module(alg, rng, 1);
        auto n = support::random_module(alg, rng, 1);
        std::size_t unknowns = 0;
        for (std::size_t v = 0; v < 5; ++v) unknowns += m.dim(v) * n.dim(v);
        if (unknowns > 14) continue;
        EXPECT_EQ(hom_dim(m, n), support::brute_hom_dim(m, n));
        ++checked;
    }
    EXPECT_GE(checked, 20);
}

TEST(Factorization, Basics) {
    auto m = iv("2/3/4/5");
    auto id = map_factorization(identity_map(m));
    EXPECT_TRUE(id.kernel.module.is_zero());
    EXPECT_TRUE(id.cokernel.module.is_zero());
    auto z = map_factorization(zero_map(m, iv("3")));
    EXPECT_EQ(z.kernel.module.dims(), m.dims());
    EXPECT_TRUE(z.image.module.is_zero());

    auto p3 = projective(line(), 2);
    auto maps = hom_basis(p3, simple(line(), 2));
    ASSERT_EQ(maps.size(), 1u);
    auto fac = map_factorization(maps[0]);
    EXPECT_EQ(loewy_label(fac.kernel.module), "4/5");
    EXPECT_EQ(fac.kernel.module.total_dim() + fac.image.module.total_dim(), p3.total_dim());
}

TEST(Factorization, DimensionsAddUpOnRandomMaps) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto& alg = trial % 2 ? cyc() : line();
        auto m = support::random_module(alg, rng);
        auto n = support::random_module(alg, rng);
        auto basis = hom_basis(m, n);
        if (basis.empty()) continue;
        std::vector<mpq_class> c;
        for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(int(rng() % 5) - 2);
        auto f = linear_combination(basis, c, m, n);
        auto fac = map_factorization(f);
        EXPECT_EQ(fac.kernel.module.total_dim() + fac.image.module.total_dim(), m.total_dim());
        EXPECT_EQ(fac.cokernel.module.total_dim(), n.total_dim() - fac.image.module.total_dim());
        EXPECT_TRUE(compose(fac.kernel.inclusion, f).is_zero());
        EXPECT_TRUE(compose(f, fac.cokernel.projection).is_zero());
        EXPECT_FALSE(fac.cokernel.module.first_violated_relation().has_value());
        EXPECT_FALSE(fac.kernel.module.first_violated_relation().has_value());
    }
}

TEST(Sums, DirectSum) {
    auto m = iv("2/3/4");
    auto z = Representation<Rationals>::zero(line());
    EXPECT_TRUE(is_isomorphic(direct_sum(m, z), m));
    auto s = direct_sum(m, iv("3/4/5"));
    EXPECT_EQ(s.dims(), (Dims{0, 1, 2, 2, 1}));
    std::vector<Representation<Rationals>> parts{m, iv("3/4/5")};
    auto inc = sum_injection(s, parts, 1);
    auto pr = sum_projection(s, parts, 1);
    EXPECT_TRUE(compose(inc, pr).is_isomorphism());
    EXPECT_TRUE(compose(sum_injection(s, parts, 0), pr).is_zero());
}

TEST(Duality, Basics) {
    for (std::size_t v = 0; v < 5; ++v) {
        EXPECT_TRUE(dual(simple(line(), v)) == simple(line().opposite(), v));
        auto dp = dual(projective(line(), v));
        EXPECT_TRUE(is_isomorphic(dp, injective(line().opposite(), v)));
    }
    auto m = iv("2/3/4/5");
    EXPECT_EQ(dual(m).dims(), m.dims());
    EXPECT_TRUE(dual(dual(m)) == m);
}

TEST(TopRadicalSocle, Examples) {
    auto p3 = projective(line(), 2);
    auto trs = top_radical_socle(p3);
    EXPECT_TRUE(trs.top.module == simple(line(), 2));
    EXPECT_EQ(loewy_label(radical(iv("2/3/4/5")).module), "3/4/5");
    EXPECT_TRUE(socle(iv("1/2/3")).module == simple(line(), 2));
    EXPECT_EQ(loewy_label(from_interval(cyc(), "3/4") ), "3/4");
    EXPECT_EQ(loewy_label(direct_sum(iv("3/4"), iv("4/5"))), "3 4/4 5");
}

TEST(GenCogen, Examples) {
    auto m = iv("2/3/4/5");
    EXPECT_TRUE(gen_membership(m, m));
    EXPECT_TRUE(cogen_membership(m, m));
    EXPECT_FALSE(gen_membership(simple(line(), 4), projective(line(), 0)));
    EXPECT_TRUE(gen_membership(iv("2/3"), iv("2/3/4")));
    EXPECT_FALSE(gen_membership(iv("3/4"), iv("2/3/4")));
    EXPECT_TRUE(cogen_membership(iv("4"), iv("3/4")));
    EXPECT_FALSE(cogen_membership(iv("3/4"), iv("4")));
}

TEST(GenCogen, QuotientsOfGeneratedModulesStayGenerated) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        auto gen = support::random_module(line(), rng);
        auto x = support::random_module(line(), rng);
        if (!gen_membership(x, gen)) continue;
        auto rad = radical(x);
        auto quo = quotient(x, rad.inclusion.components());
        EXPECT_TRUE(gen_membership(quo.module, gen));
    }
}
