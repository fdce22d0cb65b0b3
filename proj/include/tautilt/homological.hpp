#pragma once

// Projective covers, minimal presentations, the Auslander-Reiten translate
// computed as D Tr, Ext^1, and almost split sequences.

#include "tautilt/decompose.hpp"

namespace tautilt {

template <class F>
struct ProjectiveCover {
    std::vector<std::size_t> tops;  // vertex of each indecomposable projective summand
    ModuleMap<F> map;               // P0 -> M
};

/// Generators are lifts of the top basis, ordered by vertex.
template <class F>
ProjectiveCover<F> projective_cover(const Representation<F>& m) {
    const auto& alg = m.algebra();
    auto rad = radical(m);
    auto top = quotient(m, rad.inclusion.components());
    std::vector<std::size_t> tops;
    std::vector<Matrix<F>> images;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v)
        for (std::size_t k = 0; k < top.sections[v].rows(); ++k) {
            tops.push_back(v);
            images.push_back(top.sections[v].row(k));
        }
    return {tops, map_from_projective(alg, tops, m, images)};
}

/// Injective envelope X -> I0, dual to the projective cover of D X.
template <class F>
ModuleMap<F> injective_envelope(const Representation<F>& x) {
    auto c = projective_cover(dual(x));
    auto env = dual(c.map);
    // dual(dual(x)) is x itself: the opposite of the opposite is the same algebra.
    return ModuleMap<F>(x, env.target(), env.components(), false);
}

template <class F>
struct Presentation {
    std::vector<std::size_t> tops0, tops1;
    Representation<F> p0, p1;
    ModuleMap<F> cover;             // P0 -> M
    Submodule<F> syzygy;            // ker cover inside P0
    ModuleMap<F> syzygy_cover;      // P1 -> syzygy
    ModuleMap<F> d;                 // P1 -> P0
};

template <class F>
Presentation<F> min_presentation(const Representation<F>& m) {
    auto c0 = projective_cover(m);
    auto fac = map_factorization(c0.map);
    auto c1 = projective_cover(fac.kernel.module);
    auto d = compose(c1.map, fac.kernel.inclusion);
    return {c0.tops, c1.tops, c0.map.source(), c1.map.source(), c0.map, fac.kernel, c1.map, d};
}

template <class F>
bool is_projective(const Representation<F>& m) {
    return projective_cover(m).map.source().total_dim() == m.total_dim();
}

/// pd M <= 1: the first syzygy is projective.
template <class F>
bool proj_dim_le_one(const Representation<F>& m) {
    auto p = min_presentation(m);
    return p.p1.total_dim() == p.syzygy.module.total_dim();
}

namespace detail {

/// Position of basis element b inside the block paths_between(u, w).
template <class F>
std::size_t block_position(const Algebra<F>& alg, std::size_t u, std::size_t w, std::size_t b) {
    const auto& ps = alg.paths_between(u, w);
    return static_cast<std::size_t>(std::lower_bound(ps.begin(), ps.end(), b) - ps.begin());
}

/// Row offset of summand i inside (sum of P(tops))_w.
template <class F>
std::size_t block_offset(const Algebra<F>& alg, const std::vector<std::size_t>& tops, std::size_t i, std::size_t w) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < i; ++k) off += alg.paths_between(tops[k], w).size();
    return off;
}

} // namespace detail

/// Tr M over the opposite algebra: the cokernel of Hom(d, A).
template <class F>
Representation<F> transpose_module(const Representation<F>& m) {
    const auto& alg = m.algebra();
    auto op = alg.opposite();
    auto pres = min_presentation(m);
    const auto& u = pres.tops1;
    const auto& v = pres.tops0;
    auto target = projective_sum(op, u);
    // Generator j of the sum of P^op(v_j) goes to (D_ij)_i, where D_ij is the
    // block-j part of d applied to generator i. Op basis coordinates coincide.
    std::vector<Matrix<F>> images;
    for (std::size_t j = 0; j < v.size(); ++j) {
        Matrix<F> img(alg.field(), 1, target.dim(v[j]));
        std::size_t col = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const auto& d = pres.d.component(u[i]);
            auto row = detail::block_offset(alg, u, i, u[i]) +
                       detail::block_position(alg, u[i], u[i], alg.trivial_element(u[i]));
            auto c0 = detail::block_offset(alg, v, j, u[i]);
            const auto width = alg.paths_between(v[j], u[i]).size();
            for (std::size_t k = 0; k < width; ++k) img(0, col + k) = d(row, c0 + k);
            col += width;
        }
        images.push_back(std::move(img));
    }
    auto g = map_from_projective(op, v, target, images);
    return map_factorization(g).cokernel.module;
}

template <class F>
Representation<F> tau(const Representation<F>& m) {
    return dual(transpose_module(m));
}

template <class F>
Representation<F> tau_inv(const Representation<F>& m) {
    return dual(tau(dual(m)));
}

/// dim Ext^1(M, N) = dim Hom(Omega M, N) - dim of the restrictions of Hom(P0, N).
template <class F>
std::size_t ext1_dim(const Representation<F>& m, const Representation<F>& n) {
    require_same_algebra(m, n);
    auto pres = min_presentation(m);
    const auto& omega = pres.syzygy;
    if (omega.module.is_zero()) return 0;
    auto cocycles = hom_dim(omega.module, n);
    if (cocycles == 0) return 0;
    Matrix<F> rows(m.field(), 0, 0);
    bool first = true;
    for (const auto& g : hom_basis(pres.p0, n)) {
        auto r = flatten(compose(omega.inclusion, g));
        rows = first ? r : vstack(rows, r);
        first = false;
    }
    return cocycles - (first ? 0 : rank(rows));
}

template <class F>
bool is_tau_rigid(const Representation<F>& m) {
    return hom_dim(m, tau(m)) == 0;
}

// ---------------------------------------------------------------------------
// Almost split sequences

template <class F>
struct AlmostSplitSequence {
    Representation<F> left;    // tau M
    Representation<F> middle;
    Representation<F> right;   // M
    ModuleMap<F> inclusion;    // left -> middle
    ModuleMap<F> surjection;   // middle -> right
};

namespace detail {

/// Basis of rad End(M) for M with local endomorphism ring: f - lambda(f) 1.
template <class F>
std::vector<ModuleMap<F>> local_radical_basis(const Representation<F>& m) {
    const F& fld = m.field();
    std::vector<ModuleMap<F>> out;
    for (const auto& f : hom_basis(m, m)) {
        std::optional<typename F::value_type> lambda;
        for (std::size_t v = 0; v < m.dims().size() && !lambda; ++v) {
            auto d = m.dim(v);
            if (d == 0) continue;
            auto dd = fld.from_int(static_cast<long long>(d));
            if (!fld.is_zero(dd)) lambda = fld.div(trace(f.component(v)), dd);
        }
        if (!lambda) {
            const auto p = fld.characteristic();
            for (std::uint64_t c = 0; c < p && c < (1u << 16) && !lambda; ++c) {
                auto cand = fld.from_int(static_cast<long long>(c));
                if (endo_nilpotent(shift(f, cand))) lambda = cand;
            }
        }
        if (!lambda) fail(ErrorKind::Undecided, "no eigenvalue found for an endomorphism");
        auto j = shift(f, *lambda);
        if (!endo_nilpotent(j)) fail(ErrorKind::NotIndecomposable, "endomorphism ring is not local");
        if (!j.is_zero()) out.push_back(std::move(j));
    }
    return out;
}

/// Lift of an endomorphism j of M along the cover, restricted to the syzygy.
template <class F>
ModuleMap<F> restrict_lift_to_syzygy(const Presentation<F>& pres, const ModuleMap<F>& j) {
    const auto& alg = pres.p0.algebra();
    std::vector<Matrix<F>> images;
    for (std::size_t g = 0; g < pres.tops0.size(); ++g) {
        const auto v = pres.tops0[g];
        auto row = block_offset(alg, pres.tops0, g, v) + block_position(alg, v, v, alg.trivial_element(v));
        auto target = multiply(pres.cover.component(v).row(row), j.component(v));
        auto pre = solve_left(pres.cover.component(v), target);
        if (!pre) fail(ErrorKind::InternalInconsistency, "projective cover is not surjective");
        images.push_back(*pre);
    }
    auto j0 = map_from_projective(alg, pres.tops0, pres.p0, images);
    const auto& inc = pres.syzygy.inclusion;
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < inc.components().size(); ++v)
        comps.push_back(multiply(multiply(inc.component(v), j0.component(v)), right_inverse(inc.component(v))));
    return ModuleMap<F>(pres.syzygy.module, pres.syzygy.module, std::move(comps), false);
}

} // namespace detail

/// Realizes a nonzero element of the socle of Ext^1(M, tau M) over End(M) as a
/// pushout of the syzygy sequence.
template <class F>
AlmostSplitSequence<F> almost_split_sequence(const Representation<F>& m) {
    const F& fld = m.field();
    if (!is_indecomposable(m)) fail(ErrorKind::NotIndecomposable, "almost split sequences need an indecomposable module");
    auto pres = min_presentation(m);
    if (pres.p0.total_dim() == m.total_dim())
        fail(ErrorKind::IsProjective, "the module is projective");
    auto t = tau(m);
    const auto& omega = pres.syzygy;

    auto cocycles = hom_basis(omega.module, t);
    std::vector<Matrix<F>> boundary_rows;
    for (const auto& g : hom_basis(pres.p0, t)) boundary_rows.push_back(flatten(compose(omega.inclusion, g)));
    std::size_t width = 0;
    for (std::size_t v = 0; v < omega.module.dims().size(); ++v) width += omega.module.dim(v) * t.dim(v);
    Matrix<F> bmat(fld, 0, width);
    for (const auto& r : boundary_rows) bmat = vstack(bmat, r);
    // Columns of ann test membership in the coboundary span: x in span iff x * ann = 0.
    auto ann = transpose(nullspace_basis(bmat));

    auto radical_basis = detail::local_radical_basis(m);
    std::vector<ModuleMap<F>> pulls;
    for (const auto& j : radical_basis) pulls.push_back(detail::restrict_lift_to_syzygy(pres, j));

    Matrix<F> system(fld, cocycles.size(), 0);
    for (const auto& jo : pulls) {
        Matrix<F> block(fld, 0, ann.cols());
        for (const auto& z : cocycles) block = vstack(block, multiply(flatten(compose(jo, z)), ann));
        system = hstack(system, block);
    }
    auto solutions = left_kernel(system);
    std::optional<ModuleMap<F>> phi;
    for (std::size_t s = 0; s < solutions.rows() && !phi; ++s) {
        std::vector<typename F::value_type> c(solutions.row(s).entries());
        auto cand = linear_combination(cocycles, c, omega.module, t);
        if (!multiply(flatten(cand), ann).is_zero()) phi = cand;
    }
    if (!phi) fail(ErrorKind::InternalInconsistency, "Ext^1(M, tau M) has no socle element");

    // Pushout: (tau M + P0) / {(phi(k), -iota(k))}.
    std::vector<Representation<F>> parts{t, pres.p0};
    auto sum = direct_sum(m.algebra(), parts);
    std::vector<Matrix<F>> hc;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        hc.push_back(hstack(phi->component(v), scale(omega.inclusion.component(v), fld.neg(fld.one()))));
    ModuleMap<F> h(omega.module, sum, std::move(hc), false);
    auto fac = map_factorization(h);
    const auto& q = fac.cokernel;
    auto inclusion = compose(sum_injection(sum, parts, 0), q.projection);
    auto to_m = compose(sum_projection(sum, parts, 1), pres.cover);
    auto surjection = factor_through_quotient(q, to_m);
    return {t, q.module, m, inclusion, surjection};
}

} // namespace tautilt
