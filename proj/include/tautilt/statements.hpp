#pragma once

// Executable checks of the Bongartz-extension statements for a split
// extension. Each check computes its hypotheses, both sides and any
// per-summand sub-verdicts independently and reports them; nothing is assumed.

#include "tautilt/catalogue.hpp"
#include "tautilt/splitext.hpp"

namespace tautilt {

enum class Verdict { Verified, CheckFailed, HypothesisFailed };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::CheckFailed: return "CheckFailed";
    case Verdict::HypothesisFailed: return "HypothesisFailed";
    }
    return "Unknown";
}

enum class StatementKind { Equivalence, Implication };

struct Fact {
    std::string name;
    bool value = false;
};

struct CheckReport {
    std::string statement;
    StatementKind kind = StatementKind::Equivalence;
    std::vector<Fact> hypotheses;
    std::string left_name, right_name;
    bool left = false;
    bool right = false;
    std::vector<Fact> sub_verdicts;       // must all hold for Verified
    std::vector<Fact> details;            // informational
    std::vector<std::string> witnesses;   // dimension tables and the like
    Verdict verdict = Verdict::Verified;

    [[nodiscard]] bool hypotheses_hold() const {
        return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Fact& f) { return f.value; });
    }

    void settle() {
        if (!hypotheses_hold()) {
            verdict = Verdict::HypothesisFailed;
            return;
        }
        bool ok = kind == StatementKind::Equivalence ? left == right : (!left || right);
        for (const auto& s : sub_verdicts) ok = ok && s.value;
        verdict = ok ? Verdict::Verified : Verdict::CheckFailed;
    }
};

inline const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids{"THM-MAIN", "COR-1",        "COR-2",     "COR-3",     "PROP-ALMOST",
                                              "PROP-RESULT", "PROP-RESULT2", "THM-MAIN3", "PROP-BOTH", "THM-A"};
    return ids;
}

template <class F>
struct StatementInput {
    Representation<F> m;
    std::optional<Representation<F>> u;  // defaults to the Bongartz complement of M over C
    std::optional<Representation<F>> y;  // completion, for PROP-ALMOST
};

/// Searches Hom(A, B) for a monomorphism: basis elements, seeded random
/// combinations, then full enumeration over a small prime field.
template <class F>
std::optional<ModuleMap<F>> find_injective_map(const Representation<F>& a, const Representation<F>& b) {
    require_same_algebra(a, b);
    if (a.is_zero()) return zero_map(a, b);
    auto maps = hom_basis(a, b);
    for (const auto& f : maps)
        if (f.is_injective()) return f;
    if (maps.empty()) return std::nullopt;
    const F& fld = a.field();
    const std::uint64_t p = fld.characteristic();
    if (p != 0 && std::pow(double(p), double(maps.size())) <= double(1 << 18)) {
        std::vector<std::uint64_t> digits(maps.size(), 0);
        while (true) {
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
            if (k == digits.size()) return std::nullopt;
            std::vector<typename F::value_type> c;
            for (auto d : digits) c.push_back(fld.from_int(static_cast<long long>(d)));
            auto f = linear_combination(maps, c, a, b);
            if (f.is_injective()) return f;
        }
    }
    std::mt19937 rng(0xa2);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<typename F::value_type> c;
        for (std::size_t i = 0; i < maps.size(); ++i) c.push_back(fld.from_int(coeff(rng)));
        auto f = linear_combination(maps, c, a, b);
        if (f.is_injective()) return f;
    }
    return std::nullopt;
}

/// The three identities behind the adjunction, for M over C and X over B.
template <class F>
CheckReport adjunction_dim_check(const SplitExtension<F>& s, const Representation<F>& m, const Representation<F>& x) {
    CheckReport r;
    r.statement = "ADJUNCTION";
    auto ind = induce(s, m);
    auto tb_ind = tau(ind);
    auto tc = tau(m);
    auto xc = restrict_to_C(s, x);
    const auto l1 = hom_dim(x, tb_ind), r1 = hom_dim(xc, tc);
    const auto l2 = hom_dim(ind, x), r2 = hom_dim(m, xc);
    r.left_name = "dim Hom_B(X, tau_B(M(x)B)) = dim Hom_C(X_C, tau_C M)";
    r.right_name = "dim Hom_B(M(x)B, X) = dim Hom_C(M, X_C)";
    r.left = l1 == r1;
    r.right = l2 == r2;
    r.sub_verdicts.push_back({r.left_name, r.left});
    r.sub_verdicts.push_back({r.right_name, r.right});
    auto emb = find_injective_map(tb_ind, tau(view_as_B(s, m)));
    r.sub_verdicts.push_back({"tau_B(M(x)B) embeds in tau_B M", emb.has_value()});
    r.witnesses.push_back("Hom_B(X, tau_B(M(x)B)) = " + std::to_string(l1) + ", Hom_C(X_C, tau_C M) = " + std::to_string(r1));
    r.witnesses.push_back("Hom_B(M(x)B, X) = " + std::to_string(l2) + ", Hom_C(M, X_C) = " + std::to_string(r2));
    r.settle();
    return r;
}

namespace detail {

template <class F>
struct StatementContext {
    const SplitExtension<F>& split;
    const Catalogue<F>& cat_c;
    const Catalogue<F>& cat_b;
};

template <class F>
bool every_summand_in(const Representation<F>& x, const std::vector<std::size_t>& items, const Catalogue<F>& cat) {
    if (x.is_zero()) return true;
    auto mult = cat.multiplicities(x);
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0 && std::find(items.begin(), items.end(), i) == items.end()) return false;
    return true;
}

/// Bongartz complement over B of a B-module, or nullopt when it is not tau-rigid.
template <class F>
std::optional<BongartzResult<F>> bongartz_if_rigid(const Representation<F>& x, const Catalogue<F>& cat) {
    if (!is_tau_rigid(x)) return std::nullopt;
    return bongartz_complement(x, cat);
}

template <class F>
std::string dim_line(const std::string& what, std::size_t d) {
    return what + " = " + std::to_string(d);
}

/// Shared part of THM-MAIN and its corollaries: the Bongartz side and the Hom side.
template <class F>
void main_sides(CheckReport& r, const StatementContext<F>& ctx, const Representation<F>& m, const Representation<F>& u,
                bool require_rigid_induced) {
    const auto& s = ctx.split;
    auto tm = tau(m);
    auto ue = tensor_with_E(s, u).e_part;
    const auto h = hom_dim(ue, tm);
    r.right_name = "Hom_C(U(x)E, tau_C M) = 0";
    r.right = h == 0;
    r.witnesses.push_back(dim_line<F>("dim Hom_C(U(x)E, tau_C M)", h));
    r.witnesses.push_back("U(x)E = " + decomposition_label(ue));
    auto ind_m = induce(s, m);
    auto ind_u = induce(s, u);
    auto b = bongartz_if_rigid(ind_m, ctx.cat_b);
    const bool rigid = b.has_value();
    r.details.push_back({"M(x)B is tau_B-rigid", rigid});
    bool is_bongartz = false;
    if (b) {
        is_bongartz = is_isomorphic(ind_u, b->module);
        r.witnesses.push_back("Bongartz_B(M(x)B) = " + decomposition_label(b->module));
    }
    r.witnesses.push_back("U(x)B = " + decomposition_label(ind_u));
    if (require_rigid_induced) {
        r.left_name = "U(x)B is the Bongartz complement of M(x)B";
        r.left = is_bongartz;
    } else {
        r.left_name = "M(x)B is tau_B-rigid with Bongartz complement U(x)B";
        r.left = rigid && is_bongartz;
    }
}

template <class F>
Representation<F> resolve_u(CheckReport& r, const StatementContext<F>& ctx, const StatementInput<F>& in, bool rigid) {
    if (!rigid) return in.u ? *in.u : Representation<F>::zero(ctx.split.small());
    auto b = bongartz_complement(in.m, ctx.cat_c);
    if (!in.u) return b.module;
    r.hypotheses.push_back({"U is the Bongartz complement of M over C", is_isomorphic(*in.u, b.module)});
    return *in.u;
}

template <class F>
bool is_partial_tilting(const Representation<F>& t) {
    return is_tau_rigid(t) && proj_dim_le_one(t);
}

} // namespace detail

template <class F>
CheckReport check_statement(const std::string& id, const SplitExtension<F>& split, const StatementInput<F>& in,
                            const Catalogue<F>& cat_c, const Catalogue<F>& cat_b) {
    if (!(in.m.algebra() == split.small())) fail(ErrorKind::InvalidInput, "M must be a module over C");
    if (in.u && !(in.u->algebra() == split.small())) fail(ErrorKind::InvalidInput, "U must be a module over C");
    cat_c.require_algebra(in.m);
    if (!(cat_b.algebra() == split.big())) fail(ErrorKind::IncompleteCatalogue, "catalogue for B belongs to a different algebra");
    detail::StatementContext<F> ctx{split, cat_c, cat_b};
    const auto& m = in.m;
    CheckReport r;
    r.statement = id;
    const bool rigid_c = is_tau_rigid(m);

    if (id == "THM-MAIN" || id == "COR-1" || id == "COR-2") {
        r.hypotheses.push_back({"M is tau_C-rigid", rigid_c});
        auto u = detail::resolve_u(r, ctx, in, rigid_c);
        if (id == "THM-MAIN") {
            r.hypotheses.push_back({"M(x)B is tau_B-rigid", is_tau_rigid(induce(split, m))});
        } else if (id == "COR-1") {
            r.hypotheses.push_back({"M is in Gen U", gen_membership(m, u)});
        } else {
            r.hypotheses.push_back({"M is indecomposable", is_indecomposable(m)});
            r.hypotheses.push_back({"M is not projective", !is_projective(m)});
            r.details.push_back({"M is in Gen U", rigid_c && gen_membership(m, u)});
        }
        if (rigid_c) detail::main_sides(r, ctx, m, u, id == "THM-MAIN");
    } else if (id == "COR-3") {
        r.kind = StatementKind::Implication;
        auto e = e_as_right_module(split);
        r.hypotheses.push_back({"M is tau_C-rigid", rigid_c});
        const bool e_gen = gen_membership(e, m);
        r.hypotheses.push_back({"E is in Gen M", e_gen});
        r.witnesses.push_back("E_C = " + decomposition_label(e));
        auto u = detail::resolve_u(r, ctx, in, rigid_c);
        r.left_name = "E is in Gen M";
        r.left = e_gen;
        r.right_name = "M(x)B is tau_B-rigid with Bongartz complement U(x)B";
        if (rigid_c) {
            auto b = detail::bongartz_if_rigid(induce(split, m), cat_b);
            r.right = b && is_isomorphic(induce(split, u), b->module);
            if (b) r.witnesses.push_back("Bongartz_B(M(x)B) = " + decomposition_label(b->module));
        }
    } else if (id == "PROP-ALMOST") {
        if (!in.y) fail(ErrorKind::InvalidInput, "PROP-ALMOST needs the completion Y");
        const auto& y = *in.y;
        const auto n = split.small().vertex_count();
        r.hypotheses.push_back({"M is tau_C-rigid", rigid_c});
        r.hypotheses.push_back({"M is almost complete", basic_summand_count(m) + 1 == n});
        r.hypotheses.push_back({"Y is indecomposable", is_indecomposable(y)});
        const auto my = direct_sum(m, y);
        r.hypotheses.push_back({"M + Y is tau_C-tilting", is_tau_tilting(my)});
        bool y_not_bongartz = false;
        if (rigid_c) y_not_bongartz = !is_isomorphic(y, bongartz_complement(m, cat_c).module);
        r.hypotheses.push_back({"Y is not the Bongartz complement", y_not_bongartz});
        auto ind_m = induce(split, m);
        r.hypotheses.push_back({"M(x)B is tau_B-rigid", is_tau_rigid(ind_m)});
        auto ind_my = direct_sum(ind_m, induce(split, y));
        r.left_name = "(M(x)B) + (Y(x)B) is tau_B-tilting";
        r.left = is_tau_tilting(ind_my);
        auto me = tensor_with_E(split, m).e_part;
        const auto h = hom_dim(me, tau(y));
        r.right_name = "Hom_C(M(x)E, tau_C Y) = 0";
        r.right = h == 0;
        r.witnesses.push_back(detail::dim_line<F>("dim Hom_C(M(x)E, tau_C Y)", h));
        r.details.push_back({"Y is in Gen M", gen_membership(y, m)});
    } else if (id == "PROP-RESULT") {
        r.kind = StatementKind::Implication;
        r.hypotheses.push_back({"M is tau_C-rigid", rigid_c});
        auto me = tensor_with_E(split, m).e_part;
        bool orth = true;
        std::size_t members = 0;
        for (std::size_t i = 0; i < cat_c.size(); ++i) {
            if (!gen_membership(cat_c.module(i), m)) continue;
            ++members;
            if (hom_dim(me, cat_c.module(i)) != 0) {
                orth = false;
                r.witnesses.push_back("Hom_C(M(x)E, " + cat_c.item(i).label + ") != 0");
            }
        }
        r.witnesses.push_back("Gen M has " + std::to_string(members) + " indecomposables in the catalogue");
        r.witnesses.push_back("M(x)E = " + decomposition_label(me));
        r.left_name = "Hom_C(M(x)E, Gen M) = 0";
        r.left = orth;
        r.right_name = "M is tau_B-rigid";
        r.right = is_tau_rigid(view_as_B(split, m));
    } else if (id == "PROP-RESULT2") {
        auto mb = view_as_B(split, m);
        auto tb = tau(mb);
        r.hypotheses.push_back({"M is tau_B-rigid", hom_dim(mb, tb) == 0});
        auto ind = induce(split, m);
        r.left_name = "M(x)B is Ext-projective in the left perpendicular of tau_B M";
        r.left = hom_dim(ind, tb) == 0;
        if (r.left) {
            for (const auto& piece : decompose(ind))
                r.left = r.left && is_ext_projective_in_perp(piece.module, mb, cat_b);
        }
        auto tbc = restrict_to_C(split, tb);
        const auto h = hom_dim(m, tbc);
        r.right_name = "Hom_C(M, (tau_B M)_C) = 0";
        r.right = h == 0;
        r.witnesses.push_back("tau_B M = " + decomposition_label(tb) + ", (tau_B M)_C = " + decomposition_label(tbc));
        r.witnesses.push_back("M(x)B = " + decomposition_label(ind));
        r.witnesses.push_back(detail::dim_line<F>("dim Hom_C(M, (tau_B M)_C)", h));
    } else if (id == "THM-MAIN3") {
        r.hypotheses.push_back({"M is tau_C-rigid", rigid_c});
        auto u = detail::resolve_u(r, ctx, in, rigid_c);
        auto mb = view_as_B(split, m);
        auto tb = tau(mb);
        const bool rigid_b = hom_dim(mb, tb) == 0;
        r.hypotheses.push_back({"M is tau_B-rigid", rigid_b});
        auto tbc = restrict_to_C(split, tb);
        const auto h = hom_dim(u, tbc);
        r.right_name = "Hom_C(U, (tau_B M)_C) = 0";
        r.right = h == 0;
        r.witnesses.push_back("(tau_B M)_C = " + decomposition_label(tbc));
        r.witnesses.push_back(detail::dim_line<F>("dim Hom_C(U, (tau_B M)_C)", h));
        r.left_name = "U(x)B is the Bongartz complement of M over B";
        if (rigid_b) {
            auto b = bongartz_complement(mb, cat_b);
            auto ind_u = induce(split, u);
            r.left = is_isomorphic(ind_u, b.module);
            r.witnesses.push_back("Bongartz_B(M) = " + decomposition_label(b.module));
            r.witnesses.push_back("U(x)B = " + decomposition_label(ind_u));
            // Summand by summand: Hom_C(S, (tau_B M)_C) = 0 forces S(x)B into the complement.
            for (const auto& piece : decompose(u)) {
                const auto label = loewy_label(piece.module);
                const bool orth = hom_dim(piece.module, tbc) == 0;
                const bool inside = detail::every_summand_in(induce(split, piece.module), b.items, cat_b);
                r.details.push_back({"Hom_C(" + label + ", (tau_B M)_C) = 0", orth});
                r.details.push_back({label + " (x) B is a summand of Bongartz_B(M)", inside});
                r.sub_verdicts.push_back({"summand " + label + ": Hom condition implies Bongartz summand", !orth || inside});
            }
        }
    } else if (id == "PROP-BOTH") {
        r.hypotheses.push_back({"M is tau_C-rigid", rigid_c});
        auto u = detail::resolve_u(r, ctx, in, rigid_c);
        auto mu = direct_sum(m, u);
        const bool viewed = is_tau_tilting(view_as_B(split, mu));
        const bool induced = is_tau_tilting(induce(split, mu));
        r.details.push_back({"M + U is tau_B-tilting", viewed});
        r.details.push_back({"(M(x)B) + (U(x)B) is tau_B-tilting", induced});
        r.left_name = "M + U and (M(x)B) + (U(x)B) are both tau_B-tilting";
        r.left = viewed && induced;
        auto me = tensor_with_E(split, m).e_part;
        auto ue = tensor_with_E(split, u).e_part;
        r.right_name = "M(x)E = 0 and U(x)E = 0";
        r.right = me.is_zero() && ue.is_zero();
        r.witnesses.push_back("M(x)E = " + decomposition_label(me) + ", U(x)E = " + decomposition_label(ue));
    } else if (id == "THM-A") {
        const auto& t = m;
        auto tt = tau(t);
        auto te = tensor_with_E(split, t).e_part;
        auto de = dual_e_module(split);
        const bool partial = detail::is_partial_tilting(t);
        const bool e_orth = hom_dim(te, tt) == 0;
        const bool de_orth = hom_dim(de, tt) == 0;
        auto ind = induce(split, t);
        const bool ind_rigid = is_tau_rigid(ind);
        const bool ind_pd = proj_dim_le_one(ind);
        r.left_name = "T(x)B is partial tilting over B";
        r.left = ind_rigid && ind_pd;
        r.right_name = "T partial tilting, Hom_C(T(x)E, tau T) = 0 and Hom_C(D(E), tau T) = 0";
        r.right = partial && e_orth && de_orth;
        r.details.push_back({"T is partial tilting over C", partial});
        r.details.push_back({"Hom_C(T(x)E, tau_C T) = 0", e_orth});
        r.details.push_back({"Hom_C(D(E), tau_C T) = 0", de_orth});
        r.details.push_back({"T(x)B is tau_B-rigid", ind_rigid});
        r.details.push_back({"pd T(x)B <= 1", ind_pd});
        r.witnesses.push_back("D(E) = " + decomposition_label(de));
        // Weakened form: for tau_C-rigid T, the E condition alone gives tau_B-rigidity.
        const bool weak = !is_tau_rigid(t) || (e_orth == ind_rigid);
        r.sub_verdicts.push_back({"tau_C-rigid T: Hom_C(T(x)E, tau T) = 0 iff T(x)B is tau_B-rigid", weak});
    } else {
        fail(ErrorKind::InvalidInput, "unknown statement '" + id + "'");
    }
    r.settle();
    return r;
}

} // namespace tautilt
