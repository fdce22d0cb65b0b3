#pragma once

// Split-by-nilpotent extensions B -> C with section C -> B given by an
// embedding of arrows; E is the ideal spanned by paths through the remaining
// (extension) arrows. Induction is computed on presentations: each P_C(v) is
// sent to P_B(v) and the presentation matrix is carried along the section.

#include "tautilt/homological.hpp"

namespace tautilt {

template <class F>
class SplitExtension {
public:
    SplitExtension(Algebra<F> b, Algebra<F> c, std::vector<std::size_t> vertex_map, std::vector<std::size_t> arrow_embed)
        : b_(std::move(b)), c_(std::move(c)), vmap_(std::move(vertex_map)), embed_(std::move(arrow_embed)) {
        if (!(b_.field() == c_.field())) fail(ErrorKind::InvalidInput, "B and C are over different fields");
        if (vmap_.size() != c_.vertex_count() || b_.vertex_count() != c_.vertex_count())
            fail(ErrorKind::InvalidInput, "the vertex map must be a bijection");
        std::vector<bool> hit(b_.vertex_count(), false);
        for (auto v : vmap_) {
            if (v >= hit.size() || hit[v]) fail(ErrorKind::InvalidInput, "the vertex map must be a bijection");
            hit[v] = true;
        }
        if (embed_.size() != c_.arrow_count()) fail(ErrorKind::InvalidInput, "every arrow of C needs an image");
        preimage_.assign(b_.arrow_count(), std::nullopt);
        for (std::size_t a = 0; a < embed_.size(); ++a) {
            auto x = embed_[a];
            if (x >= b_.arrow_count() || preimage_[x]) fail(ErrorKind::InvalidInput, "the arrow embedding must be injective");
            preimage_[x] = a;
            const auto& ca = c_.quiver().arrow(a);
            const auto& ba = b_.quiver().arrow(x);
            if (vmap_[ca.source] != ba.source || vmap_[ca.target] != ba.target)
                fail(ErrorKind::InvalidInput, "arrow '" + ca.name + "' is not sent to a parallel arrow");
        }
        vinv_.assign(vmap_.size(), 0);
        for (std::size_t v = 0; v < vmap_.size(); ++v) vinv_[vmap_[v]] = v;
        for (std::size_t x = 0; x < b_.arrow_count(); ++x)
            if (!preimage_[x]) ext_.push_back(x);
    }

    [[nodiscard]] const Algebra<F>& big() const { return b_; }
    [[nodiscard]] const Algebra<F>& small() const { return c_; }
    [[nodiscard]] const std::vector<std::size_t>& vertex_map() const { return vmap_; }
    [[nodiscard]] const std::vector<std::size_t>& arrow_embedding() const { return embed_; }
    [[nodiscard]] const std::vector<std::size_t>& extension_arrows() const { return ext_; }
    [[nodiscard]] std::size_t b_vertex(std::size_t c_vertex) const { return vmap_.at(c_vertex); }
    [[nodiscard]] std::size_t c_vertex(std::size_t b_vertex) const { return vinv_.at(b_vertex); }
    [[nodiscard]] std::optional<std::size_t> c_arrow(std::size_t b_arrow) const { return preimage_.at(b_arrow); }

    /// Section on a C path (arrow word starting at a C vertex), in B's basis.
    [[nodiscard]] SparseElement<F> section(std::size_t c_source, const std::vector<std::size_t>& word) const {
        std::vector<std::size_t> w;
        for (auto a : word) w.push_back(embed_[a]);
        return b_.reduce_path(vmap_[c_source], w);
    }

    /// Projection of a B path: zero if it uses an extension arrow.
    [[nodiscard]] SparseElement<F> projection(std::size_t b_source, const std::vector<std::size_t>& word) const {
        std::vector<std::size_t> w;
        for (auto x : word) {
            if (!preimage_[x]) return {};
            w.push_back(*preimage_[x]);
        }
        return c_.reduce_path(vinv_[b_source], w);
    }

    [[nodiscard]] SplitExtension opposite() const {
        return SplitExtension(b_.opposite(), c_.opposite(), vmap_, embed_);
    }

private:
    Algebra<F> b_, c_;
    std::vector<std::size_t> vmap_, vinv_, embed_, ext_;
    std::vector<std::optional<std::size_t>> preimage_;
};

/// Resolves names; the extension arrows listed must be exactly the arrows of B
/// outside the image of C.
template <class F>
SplitExtension<F> make_split_extension(const Algebra<F>& b, const Algebra<F>& c,
                                       const std::map<std::string, std::string>& vertex_map,
                                       const std::map<std::string, std::string>& arrow_embed,
                                       const std::vector<std::string>& extension_arrows) {
    std::vector<std::size_t> vm(c.vertex_count()), ae(c.arrow_count());
    std::vector<bool> seen_v(c.vertex_count(), false), seen_a(c.arrow_count(), false);
    for (const auto& [cv, bv] : vertex_map) {
        auto x = c.quiver().find_vertex(cv);
        auto y = b.quiver().find_vertex(bv);
        if (!x || !y) fail(ErrorKind::InvalidInput, "vertex map mentions an unknown vertex " + cv + " -> " + bv);
        vm[*x] = *y;
        seen_v[*x] = true;
    }
    for (const auto& [ca, ba] : arrow_embed) {
        auto x = c.quiver().find_arrow(ca);
        auto y = b.quiver().find_arrow(ba);
        if (!x || !y) fail(ErrorKind::InvalidInput, "arrow embedding mentions an unknown arrow " + ca + " -> " + ba);
        ae[*x] = *y;
        seen_a[*x] = true;
    }
    if (std::find(seen_v.begin(), seen_v.end(), false) != seen_v.end())
        fail(ErrorKind::InvalidInput, "vertex map does not cover every vertex of C");
    if (std::find(seen_a.begin(), seen_a.end(), false) != seen_a.end())
        fail(ErrorKind::InvalidInput, "arrow embedding does not cover every arrow of C");
    SplitExtension<F> s(b, c, vm, ae);
    std::vector<std::size_t> listed;
    for (const auto& name : extension_arrows) {
        auto x = b.quiver().find_arrow(name);
        if (!x) fail(ErrorKind::InvalidInput, "unknown extension arrow '" + name + "'");
        listed.push_back(*x);
    }
    std::sort(listed.begin(), listed.end());
    if (listed != s.extension_arrows())
        fail(ErrorKind::InvalidInput, "extension arrows must be exactly the arrows of B outside the image of C");
    return s;
}

namespace detail {

template <class F>
bool sparse_sum_is_zero(const F& f, std::vector<std::pair<typename F::value_type, SparseElement<F>>> terms) {
    std::map<std::size_t, typename F::value_type> acc;
    for (const auto& [c, e] : terms)
        for (const auto& [k, v] : e) {
            auto it = acc.emplace(k, f.zero()).first;
            f.add_in(it->second, f.mul(c, v));
        }
    return std::all_of(acc.begin(), acc.end(), [&](const auto& kv) { return f.is_zero(kv.second); });
}

} // namespace detail

/// Checks that the section and projection are algebra maps and that their
/// composite is the identity on C. Returns dim E.
template <class F>
std::size_t validate_split_extension(const SplitExtension<F>& s) {
    const auto& b = s.big();
    const auto& c = s.small();
    const F& f = b.field();
    for (std::size_t r = 0; r < c.relations().size(); ++r) {
        const auto& rel = c.relations()[r];
        auto src = c.quiver().arrow(rel.front().path.front()).source;
        std::vector<std::pair<typename F::value_type, SparseElement<F>>> terms;
        for (const auto& t : rel) terms.emplace_back(t.coeff, s.section(src, t.path));
        if (!detail::sparse_sum_is_zero(f, terms))
            fail(ErrorKind::NotAMorphism, "relation " + std::to_string(r) + " of C does not vanish in B");
    }
    for (std::size_t r = 0; r < b.relations().size(); ++r) {
        const auto& rel = b.relations()[r];
        auto src = b.quiver().arrow(rel.front().path.front()).source;
        std::vector<std::pair<typename F::value_type, SparseElement<F>>> terms;
        for (const auto& t : rel) terms.emplace_back(t.coeff, s.projection(src, t.path));
        if (!detail::sparse_sum_is_zero(f, terms))
            fail(ErrorKind::NotAMorphism, "relation " + std::to_string(r) + " of B does not map into the ideal of C");
    }
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        auto p = c.basis_path(i);
        auto up = s.section(p.source, p.arrows);
        std::vector<std::pair<typename F::value_type, SparseElement<F>>> terms;
        for (const auto& [k, v] : up) {
            auto q = b.basis_path(k);
            terms.emplace_back(v, s.projection(q.source, q.arrows));
        }
        terms.emplace_back(f.neg(f.one()), SparseElement<F>{{i, f.one()}});
        if (!detail::sparse_sum_is_zero(f, terms))
            fail(ErrorKind::NotSplit, "projection after section is not the identity on " + c.path_label(i));
    }
    if (b.dimension() < c.dimension()) fail(ErrorKind::NotSplit, "B is smaller than C");
    return b.dimension() - c.dimension();
}

/// M over C as a B-module: extension arrows act by zero.
template <class F>
Representation<F> view_as_B(const SplitExtension<F>& s, const Representation<F>& m) {
    if (!(m.algebra() == s.small())) fail(ErrorKind::InvalidInput, "module is not over C");
    const auto& b = s.big();
    std::vector<std::size_t> dims(b.vertex_count());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[s.b_vertex(v)] = m.dim(v);
    std::vector<Matrix<F>> arrows;
    for (std::size_t x = 0; x < b.arrow_count(); ++x) {
        const auto& ar = b.quiver().arrow(x);
        if (auto a = s.c_arrow(x)) arrows.push_back(m.arrow(*a));
        else arrows.emplace_back(b.field(), dims[ar.source], dims[ar.target]);
    }
    return Representation<F>(b, std::move(dims), std::move(arrows));
}

/// Restriction of scalars along the section.
template <class F>
Representation<F> restrict_to_C(const SplitExtension<F>& s, const Representation<F>& x) {
    if (!(x.algebra() == s.big())) fail(ErrorKind::InvalidInput, "module is not over B");
    const auto& c = s.small();
    std::vector<std::size_t> dims(c.vertex_count());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = x.dim(s.b_vertex(v));
    std::vector<Matrix<F>> arrows;
    for (std::size_t a = 0; a < c.arrow_count(); ++a) arrows.push_back(x.arrow(s.arrow_embedding()[a]));
    return Representation<F>(c, std::move(dims), std::move(arrows));
}

template <class F>
struct Induced {
    Representation<F> module;        // M tensored with B
    Representation<F> free_part;     // sum of P_B over the top of M
    QuotientModule<F> presentation;  // free_part -> module
    Presentation<F> c_presentation;
};

template <class F>
Induced<F> induce_with_presentation(const SplitExtension<F>& s, const Representation<F>& m) {
    if (!(m.algebra() == s.small())) fail(ErrorKind::InvalidInput, "module is not over C");
    const auto& b = s.big();
    const auto& c = s.small();
    auto pres = min_presentation(m);
    std::vector<std::size_t> b0, b1;
    for (auto v : pres.tops0) b0.push_back(s.b_vertex(v));
    for (auto u : pres.tops1) b1.push_back(s.b_vertex(u));
    auto p0 = projective_sum(b, b0);
    std::vector<Matrix<F>> images;
    for (std::size_t i = 0; i < pres.tops1.size(); ++i) {
        const auto u = pres.tops1[i];
        const auto bu = s.b_vertex(u);
        const auto& d = pres.d.component(u);
        auto row = detail::block_offset(c, pres.tops1, i, u) + detail::block_position(c, u, u, c.trivial_element(u));
        Matrix<F> img(b.field(), 1, p0.dim(bu));
        for (std::size_t j = 0; j < pres.tops0.size(); ++j) {
            const auto v = pres.tops0[j];
            const auto& cpaths = c.paths_between(v, u);
            auto c_off = detail::block_offset(c, pres.tops0, j, u);
            auto b_off = detail::block_offset(b, b0, j, bu);
            for (std::size_t k = 0; k < cpaths.size(); ++k) {
                const auto& coef = d(row, c_off + k);
                if (b.field().is_zero(coef)) continue;
                auto path = c.basis_path(cpaths[k]);
                for (const auto& [bk, bc] : s.section(path.source, path.arrows)) {
                    auto pos = b_off + detail::block_position(b, s.b_vertex(v), bu, bk);
                    b.field().add_in(img(0, pos), b.field().mul(coef, bc));
                }
            }
        }
        images.push_back(std::move(img));
    }
    auto g = map_from_projective(b, b1, p0, images);
    auto fac = map_factorization(g);
    return {fac.cokernel.module, p0, fac.cokernel, pres};
}

template <class F>
Representation<F> induce(const SplitExtension<F>& s, const Representation<F>& m) {
    return induce_with_presentation(s, m).module;
}

template <class F>
struct TensorE {
    Representation<F> e_part;     // M tensored with E, as a C-module
    Representation<F> kernel;     // the same as a B-module
    Representation<F> induced;
    ModuleMap<F> canonical;       // induced -> view_as_B(M)
    ModuleMap<F> kernel_inclusion;
};

/// The sequence 0 -> M(x)E -> M(x)B -> M -> 0.
template <class F>
TensorE<F> tensor_with_E(const SplitExtension<F>& s, const Representation<F>& m) {
    const auto& b = s.big();
    const auto& c = s.small();
    auto ind = induce_with_presentation(s, m);
    auto vm = view_as_B(s, m);
    const auto& pres = ind.c_presentation;
    std::vector<std::size_t> b0;
    std::vector<Matrix<F>> images;
    for (std::size_t j = 0; j < pres.tops0.size(); ++j) {
        const auto v = pres.tops0[j];
        b0.push_back(s.b_vertex(v));
        auto row = detail::block_offset(c, pres.tops0, j, v) + detail::block_position(c, v, v, c.trivial_element(v));
        images.push_back(pres.cover.component(v).row(row));
    }
    auto from_free = map_from_projective(b, b0, vm, images);
    auto canonical = factor_through_quotient(ind.presentation, from_free);
    auto fac = map_factorization(canonical);
    if (!canonical.is_surjective()) fail(ErrorKind::InternalInconsistency, "canonical map onto M is not surjective");
    return {restrict_to_C(s, fac.kernel.module), fac.kernel.module, ind.module, canonical, fac.kernel.inclusion};
}

/// D(B (x) D M), via induction over the opposite algebras.
template <class F>
Representation<F> coinduce(const SplitExtension<F>& s, const Representation<F>& m) {
    if (!(m.algebra() == s.small())) fail(ErrorKind::InvalidInput, "module is not over C");
    return dual(induce(s.opposite(), dual(m)));
}

/// D(E (x) D M) as a C-module: the cokernel term of the coinduction sequence.
template <class F>
Representation<F> cotensor_E(const SplitExtension<F>& s, const Representation<F>& m) {
    return dual(tensor_with_E(s.opposite(), dual(m)).e_part);
}

/// E as a right C-module: the sum over vertices of e_v E.
template <class F>
Representation<F> e_as_right_module(const SplitExtension<F>& s) {
    std::vector<Representation<F>> parts;
    for (std::size_t v = 0; v < s.small().vertex_count(); ++v)
        parts.push_back(tensor_with_E(s, projective(s.small(), v)).e_part);
    return direct_sum(s.small(), parts);
}

/// D(E) as a right C-module, from the left C-structure of E.
template <class F>
Representation<F> dual_e_module(const SplitExtension<F>& s) {
    auto op = s.opposite();
    std::vector<Representation<F>> parts;
    for (std::size_t v = 0; v < op.small().vertex_count(); ++v)
        parts.push_back(tensor_with_E(op, projective(op.small(), v)).e_part);
    return dual(direct_sum(op.small(), parts));
}

} // namespace tautilt
