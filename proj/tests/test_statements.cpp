#include "fixture_algebras.hpp"
#include "rigid_search.hpp"

#include "tautilt/statements.hpp"

#include <gtest/gtest.h>

using namespace tautilt;
using Q = Rationals;

namespace {

struct Setting {
    SplitExtension<Q> split;
    Catalogue<Q> cat_c, cat_b;
};

const Setting& setting() {
    static const Setting s = [] {
        auto c = fixtures::line_with_zero_relation();
        auto b = fixtures::with_cycle();
        auto split = make_split_extension(b, c, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"5", "5"}},
                                          {{"alpha", "alpha"}, {"beta", "beta"}, {"gamma", "gamma"}, {"epsilon", "epsilon"}},
                                          {"delta"});
        return Setting{split, build_catalogue(c), build_catalogue(b)};
    }();
    return s;
}

Representation<Q> sum_of(std::initializer_list<const char*> intervals) {
    const auto& c = setting().split.small();
    std::vector<Representation<Q>> parts;
    for (auto s : intervals) parts.push_back(from_interval(c, s));
    return direct_sum(c, parts);
}

CheckReport run(const std::string& id, const Representation<Q>& m, std::optional<Representation<Q>> u = std::nullopt,
                std::optional<Representation<Q>> y = std::nullopt) {
    const auto& s = setting();
    return check_statement<Q>(id, s.split, {m, u, y}, s.cat_c, s.cat_b);
}

bool detail_value(const CheckReport& r, const std::string& name) {
    for (const auto& d : r.details)
        if (d.name == name) return d.value;
    ADD_FAILURE() << "no detail " << name;
    return false;
}

} // namespace

TEST(Statements, MainOnWorkedRigidModule) {
    auto r = run("THM-MAIN", sum_of({"2/3/4/5", "2/3/4", "3"}), sum_of({"1/2/3", "3/4"}));
    EXPECT_EQ(r.verdict, Verdict::Verified);
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_TRUE(r.left);
    EXPECT_TRUE(r.right);
}

TEST(Statements, WrongComplementIsAHypothesisFailure) {
    auto r = run("THM-MAIN", sum_of({"2/3/4/5", "2/3/4", "3"}), sum_of({"1/2/3"}));
    EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
}

TEST(Statements, ResultsOnThreeFourFive) {
    auto m = from_interval(setting().split.small(), "3/4/5");
    auto result = run("PROP-RESULT", m);
    EXPECT_EQ(result.verdict, Verdict::Verified);
    EXPECT_TRUE(result.left);
    EXPECT_TRUE(result.right);

    auto result2 = run("PROP-RESULT2", m);
    EXPECT_EQ(result2.verdict, Verdict::Verified);
    EXPECT_TRUE(result2.left);
    EXPECT_TRUE(result2.right);

    auto main3 = run("THM-MAIN3", m, sum_of({"5", "4/5", "2/3/4/5", "1/2/3"}));
    EXPECT_EQ(main3.verdict, Verdict::Verified);
    EXPECT_FALSE(main3.left);
    EXPECT_FALSE(main3.right);
    EXPECT_TRUE(detail_value(main3, "5 (x) B is a summand of Bongartz_B(M)"));
    EXPECT_TRUE(detail_value(main3, "2/3/4/5 (x) B is a summand of Bongartz_B(M)"));
    EXPECT_FALSE(detail_value(main3, "1/2/3 (x) B is a summand of Bongartz_B(M)"));
    EXPECT_FALSE(detail_value(main3, "Hom_C(1/2/3, (tau_B M)_C) = 0"));
}

TEST(Statements, CorollaryHypotheses) {
    auto proj = run("COR-2", from_interval(setting().split.small(), "3/4/5"));
    EXPECT_EQ(proj.verdict, Verdict::HypothesisFailed);
    auto cor3 = run("COR-3", from_interval(setting().split.small(), "1/2/3"));
    EXPECT_EQ(cor3.verdict, Verdict::Verified);
    EXPECT_TRUE(cor3.right);
    EXPECT_THROW(run("NO-SUCH", sum_of({"3"})), Error);
}

TEST(Statements, PartialTiltingOnWorkedModules) {
    auto m1 = run("THM-A", sum_of({"2/3/4/5", "2/3/4", "3"}));
    EXPECT_EQ(m1.verdict, Verdict::Verified);
    EXPECT_FALSE(m1.left);
    EXPECT_FALSE(detail_value(m1, "Hom_C(D(E), tau_C T) = 0"));
    auto m2 = run("THM-A", from_interval(setting().split.small(), "3/4/5"));
    EXPECT_EQ(m2.verdict, Verdict::Verified);
    EXPECT_TRUE(m2.left);
}

TEST(Statements, AdjunctionForAllPairs) {
    const auto& s = setting();
    for (const auto& m : s.cat_c.items())
        for (const auto& x : s.cat_b.items())
            ASSERT_EQ(adjunction_dim_check(s.split, m.module, x.module).verdict, Verdict::Verified) << m.label << " " << x.label;
}

TEST(Statements, ExhaustiveOverRigidModules) {
    const auto& s = setting();
    auto sets = search::rigid_sets(s.cat_c);
    std::size_t main_checked = 0, main3_checked = 0;
    for (const auto& set : sets) {
        auto m = s.cat_c.sum(set);
        for (const auto& id : statement_ids()) {
            if (id == "PROP-ALMOST") continue;
            auto r = run(id, m);
            ASSERT_NE(r.verdict, Verdict::CheckFailed) << id << " on " << decomposition_label(m);
            if (id == "THM-MAIN" && r.verdict == Verdict::Verified) ++main_checked;
            if (id == "THM-MAIN3" && r.verdict == Verdict::Verified) ++main3_checked;
        }
    }
    EXPECT_EQ(sets.size(), 259u);
    EXPECT_EQ(main_checked, 259u);
    EXPECT_EQ(main3_checked, 145u);
}

TEST(Statements, AlmostCompleteOverAllCompletions) {
    const auto& s = setting();
    auto sets = search::rigid_sets(s.cat_c);
    std::size_t checked = 0;
    for (const auto& set : sets) {
        if (set.size() != 4) continue;
        auto m = s.cat_c.sum(set);
        auto bongartz = bongartz_complement(m, s.cat_c);
        for (std::size_t k = 0; k < s.cat_c.size(); ++k) {
            if (std::find(set.begin(), set.end(), k) != set.end()) continue;
            if (bongartz.items == search::Items{k}) continue;
            auto t = set;
            t.push_back(k);
            std::sort(t.begin(), t.end());
            if (std::find(sets.begin(), sets.end(), t) == sets.end()) continue;
            auto r = run("PROP-ALMOST", m, std::nullopt, s.cat_c.module(k));
            ASSERT_NE(r.verdict, Verdict::CheckFailed) << decomposition_label(m) << " + " << s.cat_c.item(k).label;
            if (r.verdict == Verdict::Verified) ++checked;
        }
    }
    EXPECT_GT(checked, 0u);
}

TEST(Statements, ReportVerdictRules) {
    CheckReport r;
    r.hypotheses = {{"h", true}};
    r.left = true;
    r.right = false;
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::CheckFailed);
    r.kind = StatementKind::Implication;
    r.left = false;
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::Verified);
    r.sub_verdicts = {{"s", false}};
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::CheckFailed);
    r.hypotheses[0].value = false;
    r.settle();
    EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
}
