#pragma once

// Right modules over a bound quiver algebra, realized as representations.
//
// Vertex v carries k^{dims[v]}; an arrow a: s -> t carries a dims[s] x dims[t]
// matrix and acts on row vectors, x |-> x * A_a. A path acts by the product of
// its arrow matrices in traversal order, matching left-to-right composition in
// the algebra. ModuleMap components act the same way: x |-> x * F_v.

#include "tautilt/algebra.hpp"

#include <sstream>

namespace tautilt {

enum class StandardKind { Simple, Projective, Injective };

template <class F>
class Representation {
public:
    using value_type = typename F::value_type;

    Representation() = default;

    /// Checked constructor: shapes and every relation are verified.
    Representation(Algebra<F> alg, std::vector<std::size_t> dims, std::vector<Matrix<F>> arrows)
        : d_(std::make_shared<Data>(Data{std::move(alg), std::move(dims), std::move(arrows)})) {
        check_shapes();
        if (auto bad = first_violated_relation())
            fail(ErrorKind::RelationViolation, "relation " + std::to_string(*bad) + " does not vanish on the module");
    }

    /// For modules built from algebra structure, where the relations hold by construction.
    static Representation trusted(Algebra<F> alg, std::vector<std::size_t> dims, std::vector<Matrix<F>> arrows) {
        Representation r;
        r.d_ = std::make_shared<Data>(Data{std::move(alg), std::move(dims), std::move(arrows)});
        r.check_shapes();
        return r;
    }

    static Representation zero(const Algebra<F>& alg) {
        std::vector<Matrix<F>> arrows;
        for (std::size_t a = 0; a < alg.arrow_count(); ++a) arrows.emplace_back(alg.field(), 0, 0);
        return trusted(alg, std::vector<std::size_t>(alg.vertex_count(), 0), std::move(arrows));
    }

    [[nodiscard]] bool valid() const { return d_ != nullptr; }
    [[nodiscard]] const Algebra<F>& algebra() const { return d_->algebra; }
    [[nodiscard]] const F& field() const { return d_->algebra.field(); }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return d_->dims; }
    [[nodiscard]] std::size_t dim(std::size_t v) const { return d_->dims.at(v); }
    [[nodiscard]] std::size_t total_dim() const {
        std::size_t s = 0;
        for (auto d : d_->dims) s += d;
        return s;
    }
    [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
    [[nodiscard]] const Matrix<F>& arrow(std::size_t a) const { return d_->arrows.at(a); }
    [[nodiscard]] const std::vector<Matrix<F>>& arrows() const { return d_->arrows; }

    /// Matrix of the action of a path starting at `source`.
    [[nodiscard]] Matrix<F> path_matrix(std::size_t source, const std::vector<std::size_t>& word) const {
        Matrix<F> m = Matrix<F>::identity(field(), dim(source));
        for (auto a : word) m = multiply(m, arrow(a));
        return m;
    }
    [[nodiscard]] Matrix<F> path_matrix(const Path& p) const { return path_matrix(p.source, p.arrows); }

    [[nodiscard]] std::optional<std::size_t> first_violated_relation() const {
        const auto& rels = algebra().relations();
        const auto& q = algebra().quiver();
        for (std::size_t r = 0; r < rels.size(); ++r) {
            const auto& rel = rels[r];
            auto s = q.arrow(rel.front().path.front()).source;
            auto t = q.arrow(rel.front().path.back()).target;
            Matrix<F> acc(field(), dim(s), dim(t));
            for (const auto& term : rel) acc = add(acc, scale(path_matrix(s, term.path), term.coeff));
            if (!acc.is_zero()) return r;
        }
        return std::nullopt;
    }

    bool operator==(const Representation& o) const {
        return algebra() == o.algebra() && dims() == o.dims() && arrows() == o.arrows();
    }

private:
    struct Data {
        Algebra<F> algebra;
        std::vector<std::size_t> dims;
        std::vector<Matrix<F>> arrows;
    };
    std::shared_ptr<const Data> d_;

    void check_shapes() const {
        const auto& alg = d_->algebra;
        if (d_->dims.size() != alg.vertex_count()) fail(ErrorKind::InvalidInput, "dimension vector has wrong length");
        if (d_->arrows.size() != alg.arrow_count()) fail(ErrorKind::InvalidInput, "wrong number of arrow matrices");
        for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
            const auto& ar = alg.quiver().arrow(a);
            const auto& m = d_->arrows[a];
            if (m.rows() != d_->dims[ar.source] || m.cols() != d_->dims[ar.target])
                fail(ErrorKind::InvalidInput, "matrix of arrow '" + ar.name + "' has the wrong shape");
            if (!(m.field() == alg.field())) fail(ErrorKind::InvalidInput, "matrix over a different field");
        }
    }
};

template <class F>
bool same_algebra(const Representation<F>& m, const Representation<F>& n) {
    return m.algebra() == n.algebra();
}

template <class F>
void require_same_algebra(const Representation<F>& m, const Representation<F>& n) {
    if (!same_algebra(m, n)) fail(ErrorKind::InvalidInput, "modules live over different algebras");
}

template <class F>
class ModuleMap {
public:
    ModuleMap(Representation<F> source, Representation<F> target, std::vector<Matrix<F>> components, bool check = true)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
        require_same_algebra(source_, target_);
        const auto& alg = source_.algebra();
        if (comps_.size() != alg.vertex_count()) fail(ErrorKind::InvalidInput, "map needs one component per vertex");
        for (std::size_t v = 0; v < comps_.size(); ++v)
            if (comps_[v].rows() != source_.dim(v) || comps_[v].cols() != target_.dim(v))
                fail(ErrorKind::InvalidInput, "map component has the wrong shape");
        if (check)
            for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
                const auto& ar = alg.quiver().arrow(a);
                if (!(multiply(comps_[ar.source], target_.arrow(a)) == multiply(source_.arrow(a), comps_[ar.target])))
                    fail(ErrorKind::InvalidInput, "map does not commute with arrow '" + ar.name + "'");
            }
    }

    [[nodiscard]] const Representation<F>& source() const { return source_; }
    [[nodiscard]] const Representation<F>& target() const { return target_; }
    [[nodiscard]] const Matrix<F>& component(std::size_t v) const { return comps_.at(v); }
    [[nodiscard]] const std::vector<Matrix<F>>& components() const { return comps_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const auto& c) { return c.is_zero(); });
    }
    [[nodiscard]] std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& c : comps_) r += tautilt::rank(c);
        return r;
    }
    [[nodiscard]] bool is_injective() const { return rank() == source_.total_dim(); }
    [[nodiscard]] bool is_surjective() const { return rank() == target_.total_dim(); }
    [[nodiscard]] bool is_isomorphism() const {
        return source_.dims() == target_.dims() && is_injective();
    }

private:
    Representation<F> source_, target_;
    std::vector<Matrix<F>> comps_;
};

template <class F>
ModuleMap<F> identity_map(const Representation<F>& m) {
    std::vector<Matrix<F>> c;
    for (auto d : m.dims()) c.push_back(Matrix<F>::identity(m.field(), d));
    return ModuleMap<F>(m, m, std::move(c), false);
}

template <class F>
ModuleMap<F> zero_map(const Representation<F>& m, const Representation<F>& n) {
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < m.dims().size(); ++v) c.emplace_back(m.field(), m.dim(v), n.dim(v));
    return ModuleMap<F>(m, n, std::move(c), false);
}

/// f then g.
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& f, const ModuleMap<F>& g) {
    if (!(f.target().dims() == g.source().dims())) fail(ErrorKind::InternalInconsistency, "composing incompatible maps");
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < f.components().size(); ++v) c.push_back(multiply(f.component(v), g.component(v)));
    return ModuleMap<F>(f.source(), g.target(), std::move(c), false);
}

template <class F>
ModuleMap<F> linear_combination(const std::vector<ModuleMap<F>>& maps, const std::vector<typename F::value_type>& coeffs,
                                const Representation<F>& source, const Representation<F>& target) {
    auto out = zero_map(source, target);
    std::vector<Matrix<F>> c = out.components();
    for (std::size_t k = 0; k < maps.size(); ++k)
        for (std::size_t v = 0; v < c.size(); ++v) c[v] = add(c[v], scale(maps[k].component(v), coeffs[k]));
    return ModuleMap<F>(source, target, std::move(c), false);
}

/// All component entries concatenated, as a 1 x N row.
template <class F>
Matrix<F> flatten(const ModuleMap<F>& f) {
    std::vector<typename F::value_type> e;
    for (const auto& c : f.components()) e.insert(e.end(), c.entries().begin(), c.entries().end());
    auto n = e.size();
    return Matrix<F>(f.source().field(), 1, n, std::move(e));
}

/// An endomorphism as one block-diagonal matrix on the total space.
template <class F>
Matrix<F> total_matrix(const ModuleMap<F>& f) {
    return block_diagonal(f.source().field(), f.components());
}

// ---------------------------------------------------------------------------
// Hom spaces

/// Basis of Hom(M, N): the solution space of the commuting-square system.
template <class F>
std::vector<ModuleMap<F>> hom_basis(const Representation<F>& m, const Representation<F>& n) {
    require_same_algebra(m, n);
    const auto& alg = m.algebra();
    const F& f = alg.field();
    const std::size_t nv = alg.vertex_count();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dim(v) * n.dim(v);
    const std::size_t unknowns = off[nv];
    if (unknowns == 0) return {};

    std::size_t eq_count = 0;
    for (const auto& ar : alg.quiver().arrows()) eq_count += m.dim(ar.source) * n.dim(ar.target);
    Matrix<F> sys(f, eq_count, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
        const auto& ar = alg.quiver().arrow(a);
        const auto s = ar.source, t = ar.target;
        const auto& na = n.arrow(a);
        const auto& ma = m.arrow(a);
        for (std::size_t i = 0; i < m.dim(s); ++i)
            for (std::size_t l = 0; l < n.dim(t); ++l, ++row) {
                for (std::size_t j = 0; j < n.dim(s); ++j)
                    if (!f.is_zero(na(j, l))) f.add_in(sys(row, off[s] + i * n.dim(s) + j), na(j, l));
                for (std::size_t k = 0; k < m.dim(t); ++k)
                    if (!f.is_zero(ma(i, k))) f.add_in(sys(row, off[t] + k * n.dim(t) + l), f.neg(ma(i, k)));
            }
    }
    auto basis = nullspace_basis(sys);
    std::vector<ModuleMap<F>> out;
    out.reserve(basis.rows());
    for (std::size_t b = 0; b < basis.rows(); ++b) {
        std::vector<Matrix<F>> comps;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix<F> c(f, m.dim(v), n.dim(v));
            for (std::size_t i = 0; i < m.dim(v); ++i)
                for (std::size_t j = 0; j < n.dim(v); ++j) c(i, j) = basis(b, off[v] + i * n.dim(v) + j);
            comps.push_back(std::move(c));
        }
        out.emplace_back(m, n, std::move(comps), false);
    }
    return out;
}

template <class F>
std::size_t hom_dim(const Representation<F>& m, const Representation<F>& n) {
    return hom_basis(m, n).size();
}

// ---------------------------------------------------------------------------
// Sums

template <class F>
Representation<F> direct_sum(const Algebra<F>& alg, const std::vector<Representation<F>>& parts) {
    std::vector<std::size_t> dims(alg.vertex_count(), 0);
    for (const auto& p : parts) {
        if (!(p.algebra() == alg)) fail(ErrorKind::InvalidInput, "direct sum of modules over different algebras");
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
    }
    std::vector<Matrix<F>> arrows;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
        std::vector<Matrix<F>> blocks;
        for (const auto& p : parts) blocks.push_back(p.arrow(a));
        arrows.push_back(block_diagonal(alg.field(), blocks));
    }
    return Representation<F>::trusted(alg, std::move(dims), std::move(arrows));
}

template <class F>
Representation<F> direct_sum(const std::vector<Representation<F>>& parts) {
    if (parts.empty()) fail(ErrorKind::InvalidInput, "direct sum of an empty list needs an algebra");
    return direct_sum(parts.front().algebra(), parts);
}

template <class F>
Representation<F> direct_sum(const Representation<F>& a, const Representation<F>& b) {
    return direct_sum(a.algebra(), std::vector<Representation<F>>{a, b});
}

/// Canonical inclusion of parts[k] into the sum.
template <class F>
ModuleMap<F> sum_injection(const Representation<F>& sum, const std::vector<Representation<F>>& parts, std::size_t k) {
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < sum.dims().size(); ++v) {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < k; ++i) offset += parts[i].dim(v);
        Matrix<F> m(sum.field(), parts[k].dim(v), sum.dim(v));
        for (std::size_t i = 0; i < parts[k].dim(v); ++i) m(i, offset + i) = sum.field().one();
        c.push_back(std::move(m));
    }
    return ModuleMap<F>(parts[k], sum, std::move(c), false);
}

template <class F>
ModuleMap<F> sum_projection(const Representation<F>& sum, const std::vector<Representation<F>>& parts, std::size_t k) {
    auto inj = sum_injection(sum, parts, k);
    std::vector<Matrix<F>> c;
    for (const auto& m : inj.components()) c.push_back(transpose(m));
    return ModuleMap<F>(sum, parts[k], std::move(c), false);
}

// ---------------------------------------------------------------------------
// Sub- and quotient modules

template <class F>
struct Submodule {
    Representation<F> module;
    ModuleMap<F> inclusion;
};

template <class F>
struct QuotientModule {
    Representation<F> module;
    ModuleMap<F> projection;
    std::vector<Matrix<F>> sections;  // S_v with S_v * P_v = I
};

/// `bases[v]` rows: a basis of an arrow-stable subspace of M_v.
template <class F>
Submodule<F> subrepresentation(const Representation<F>& m, const std::vector<Matrix<F>>& bases) {
    const auto& alg = m.algebra();
    std::vector<Matrix<F>> inverses;
    std::vector<std::size_t> dims;
    for (const auto& b : bases) {
        inverses.push_back(right_inverse(b));
        dims.push_back(b.rows());
    }
    std::vector<Matrix<F>> arrows;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
        const auto& ar = alg.quiver().arrow(a);
        auto image = multiply(bases[ar.source], m.arrow(a));
        auto x = multiply(image, inverses[ar.target]);
        if (!(multiply(x, bases[ar.target]) == image))
            fail(ErrorKind::InternalInconsistency, "subspace is not stable under arrow '" + ar.name + "'");
        arrows.push_back(std::move(x));
    }
    auto sub = Representation<F>::trusted(alg, std::move(dims), std::move(arrows));
    ModuleMap<F> inc(sub, m, bases, false);
    return {sub, inc};
}

template <class F>
QuotientModule<F> quotient(const Representation<F>& m, const std::vector<Matrix<F>>& bases) {
    const auto& alg = m.algebra();
    std::vector<Matrix<F>> proj, sect;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < bases.size(); ++v) {
        auto q = transpose(nullspace_basis(bases[v]));
        sect.push_back(left_inverse(q));
        dims.push_back(q.cols());
        proj.push_back(std::move(q));
    }
    std::vector<Matrix<F>> arrows;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
        const auto& ar = alg.quiver().arrow(a);
        if (!multiply(multiply(bases[ar.source], m.arrow(a)), proj[ar.target]).is_zero())
            fail(ErrorKind::InternalInconsistency, "quotient by a non-submodule at arrow '" + ar.name + "'");
        arrows.push_back(multiply(multiply(sect[ar.source], m.arrow(a)), proj[ar.target]));
    }
    auto quo = Representation<F>::trusted(alg, std::move(dims), std::move(arrows));
    ModuleMap<F> p(m, quo, proj, false);
    return {quo, p, sect};
}

template <class F>
struct Factorization {
    Submodule<F> kernel;
    Submodule<F> image;
    ModuleMap<F> onto_image;  // source -> image
    QuotientModule<F> cokernel;
};

template <class F>
Factorization<F> map_factorization(const ModuleMap<F>& f) {
    std::vector<Matrix<F>> ker, img;
    for (const auto& c : f.components()) {
        ker.push_back(left_kernel(c));
        img.push_back(row_space_basis(c));
    }
    auto k = subrepresentation(f.source(), ker);
    auto i = subrepresentation(f.target(), img);
    std::vector<Matrix<F>> onto;
    for (std::size_t v = 0; v < img.size(); ++v) onto.push_back(multiply(f.component(v), right_inverse(img[v])));
    ModuleMap<F> to_image(f.source(), i.module, std::move(onto), false);
    auto c = quotient(f.target(), img);
    return {k, i, to_image, c};
}

/// The unique h with q then h == g, where q is a quotient projection and g kills ker q.
template <class F>
ModuleMap<F> factor_through_quotient(const QuotientModule<F>& q, const ModuleMap<F>& g) {
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < q.sections.size(); ++v) c.push_back(multiply(q.sections[v], g.component(v)));
    ModuleMap<F> h(q.module, g.target(), std::move(c), false);
    for (std::size_t v = 0; v < q.sections.size(); ++v)
        if (!(multiply(q.projection.component(v), h.component(v)) == g.component(v)))
            fail(ErrorKind::InternalInconsistency, "map does not vanish on the kernel of the quotient");
    return h;
}

// ---------------------------------------------------------------------------
// Standard modules

/// Sum of P(tops[i]). At vertex w the block of P(v) has basis paths_between(v, w).
template <class F>
Representation<F> projective_sum(const Algebra<F>& alg, const std::vector<std::size_t>& tops) {
    const F& f = alg.field();
    const std::size_t nv = alg.vertex_count();
    std::vector<std::size_t> dims(nv, 0);
    for (auto v : tops)
        for (std::size_t w = 0; w < nv; ++w) dims[w] += alg.paths_between(v, w).size();
    std::vector<Matrix<F>> arrows;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
        const auto& ar = alg.quiver().arrow(a);
        Matrix<F> m(f, dims[ar.source], dims[ar.target]);
        std::size_t ro = 0, co = 0;
        const auto ae = alg.arrow_element(a);
        for (auto v : tops) {
            const auto& rows = alg.paths_between(v, ar.source);
            const auto& cols = alg.paths_between(v, ar.target);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (const auto& [k, c] : alg.basis_product(rows[i], ae)) {
                    auto it = std::lower_bound(cols.begin(), cols.end(), k);
                    m(ro + i, co + static_cast<std::size_t>(it - cols.begin())) = c;
                }
            ro += rows.size();
            co += cols.size();
        }
        arrows.push_back(std::move(m));
    }
    return Representation<F>::trusted(alg, std::move(dims), std::move(arrows));
}

template <class F>
Representation<F> projective(const Algebra<F>& alg, std::size_t v) {
    return projective_sum(alg, {v});
}

template <class F>
Representation<F> simple(const Algebra<F>& alg, std::size_t v) {
    std::vector<std::size_t> dims(alg.vertex_count(), 0);
    dims.at(v) = 1;
    std::vector<Matrix<F>> arrows;
    for (const auto& ar : alg.quiver().arrows()) arrows.emplace_back(alg.field(), dims[ar.source], dims[ar.target]);
    return Representation<F>::trusted(alg, std::move(dims), std::move(arrows));
}

/// D M as a module over the opposite algebra.
template <class F>
Representation<F> dual(const Representation<F>& m) {
    std::vector<Matrix<F>> arrows;
    for (const auto& a : m.arrows()) arrows.push_back(transpose(a));
    return Representation<F>::trusted(m.algebra().opposite(), m.dims(), std::move(arrows));
}

/// D f: D N -> D M for f: M -> N.
template <class F>
ModuleMap<F> dual(const ModuleMap<F>& f) {
    std::vector<Matrix<F>> c;
    for (const auto& m : f.components()) c.push_back(transpose(m));
    return ModuleMap<F>(dual(f.target()), dual(f.source()), std::move(c), false);
}

template <class F>
Representation<F> injective(const Algebra<F>& alg, std::size_t v) {
    return dual(projective(alg.opposite(), v));
}

template <class F>
Representation<F> standard_module(const Algebra<F>& alg, StandardKind kind, std::size_t v) {
    if (v >= alg.vertex_count()) fail(ErrorKind::InvalidInput, "vertex index out of range");
    switch (kind) {
    case StandardKind::Simple: return simple(alg, v);
    case StandardKind::Projective: return projective(alg, v);
    case StandardKind::Injective: return injective(alg, v);
    }
    fail(ErrorKind::InvalidInput, "unknown standard module kind");
}

/// Map out of a sum of projectives, fixed by where each top generator goes:
/// images[i] is a 1 x dim X_{tops[i]} row.
template <class F>
ModuleMap<F> map_from_projective(const Algebra<F>& alg, const std::vector<std::size_t>& tops,
                                 const Representation<F>& x, const std::vector<Matrix<F>>& images) {
    auto p = projective_sum(alg, tops);
    const std::size_t nv = alg.vertex_count();
    std::vector<Matrix<F>> comps;
    for (std::size_t w = 0; w < nv; ++w) {
        Matrix<F> c(alg.field(), p.dim(w), x.dim(w));
        std::size_t r = 0;
        for (std::size_t i = 0; i < tops.size(); ++i)
            for (auto b : alg.paths_between(tops[i], w)) {
                auto img = multiply(images[i], x.path_matrix(alg.basis_path(b)));
                for (std::size_t j = 0; j < x.dim(w); ++j) c(r, j) = img(0, j);
                ++r;
            }
        comps.push_back(std::move(c));
    }
    return ModuleMap<F>(p, x, std::move(comps), false);
}

/// The string module along a vertex word such as "2/3/4/5" (top first).
template <class F>
Representation<F> from_interval(const Algebra<F>& alg, const std::string& spec) {
    const auto& q = alg.quiver();
    std::vector<std::size_t> verts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, '/')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        auto v = q.find_vertex(tok);
        if (!v) fail(ErrorKind::InvalidInterval, "unknown vertex '" + tok + "' in '" + spec + "'");
        verts.push_back(*v);
    }
    if (verts.empty()) fail(ErrorKind::InvalidInterval, "empty interval");
    std::vector<std::size_t> word;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
        std::optional<std::size_t> found;
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            if (q.arrow(a).source == verts[k] && q.arrow(a).target == verts[k + 1]) {
                if (found) fail(ErrorKind::InvalidInterval, "several arrows join consecutive vertices in '" + spec + "'");
                found = a;
            }
        if (!found) fail(ErrorKind::InvalidInterval, "no arrow joins consecutive vertices in '" + spec + "'");
        word.push_back(*found);
    }
    if (alg.reduce_path(verts.front(), word).empty())
        fail(ErrorKind::InvalidInterval, "the connecting path of '" + spec + "' is zero in the algebra");

    // Position k of the string sits at verts[k]; local index within its vertex.
    std::vector<std::size_t> dims(alg.vertex_count(), 0), local(verts.size());
    for (std::size_t k = 0; k < verts.size(); ++k) local[k] = dims[verts[k]]++;
    std::vector<Matrix<F>> arrows;
    for (const auto& ar : q.arrows()) arrows.emplace_back(alg.field(), dims[ar.source], dims[ar.target]);
    for (std::size_t k = 0; k < word.size(); ++k) arrows[word[k]](local[k], local[k + 1]) = alg.field().one();
    try {
        return Representation<F>(alg, std::move(dims), std::move(arrows));
    } catch (const Error& e) {
        fail(ErrorKind::InvalidInterval, std::string("'") + spec + "' violates the relations: " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Radical, top, socle

template <class F>
Submodule<F> radical(const Representation<F>& m) {
    const auto& alg = m.algebra();
    std::vector<Matrix<F>> bases;
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
        Matrix<F> stacked(m.field(), 0, m.dim(w));
        for (std::size_t a = 0; a < alg.arrow_count(); ++a)
            if (alg.quiver().arrow(a).target == w) stacked = vstack(stacked, m.arrow(a));
        bases.push_back(row_space_basis(stacked));
    }
    return subrepresentation(m, bases);
}

template <class F>
Submodule<F> socle(const Representation<F>& m) {
    const auto& alg = m.algebra();
    std::vector<Matrix<F>> bases;
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
        Matrix<F> joined(m.field(), m.dim(w), 0);
        for (std::size_t a = 0; a < alg.arrow_count(); ++a)
            if (alg.quiver().arrow(a).source == w) joined = hstack(joined, m.arrow(a));
        bases.push_back(left_kernel(joined));
    }
    return subrepresentation(m, bases);
}

template <class F>
struct TopRadicalSocle {
    QuotientModule<F> top;
    Submodule<F> radical;
    Submodule<F> socle;
};

template <class F>
TopRadicalSocle<F> top_radical_socle(const Representation<F>& m) {
    auto rad = radical(m);
    auto top = quotient(m, rad.inclusion.components());
    return {top, rad, socle(m)};
}

/// Dimension vectors of the radical layers rad^i M / rad^{i+1} M.
template <class F>
std::vector<std::vector<std::size_t>> loewy_layers(const Representation<F>& m) {
    std::vector<std::vector<std::size_t>> layers;
    Representation<F> cur = m;
    while (!cur.is_zero()) {
        auto r = radical(cur).module;
        std::vector<std::size_t> layer(cur.dims().size());
        for (std::size_t v = 0; v < layer.size(); ++v) layer[v] = cur.dim(v) - r.dim(v);
        layers.push_back(std::move(layer));
        cur = r;
    }
    return layers;
}

/// Stacked notation: radical layers top first, e.g. "3/4 4/1 5".
template <class F>
std::string loewy_label(const Representation<F>& m) {
    if (m.is_zero()) return "0";
    const auto& q = m.algebra().quiver();
    std::string out;
    for (const auto& layer : loewy_layers(m)) {
        std::string part;
        for (std::size_t v = 0; v < layer.size(); ++v)
            for (std::size_t k = 0; k < layer[v]; ++k) part += (part.empty() ? "" : " ") + q.vertex(v);
        out += (out.empty() ? "" : "/") + part;
    }
    return out;
}

template <class F>
std::string dim_vector_string(const Representation<F>& m) {
    std::string s = "(";
    for (std::size_t v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
    return s + ")";
}

// ---------------------------------------------------------------------------
// Gen / Cogen

/// Sum of the images of all maps M -> X, as a subspace basis per vertex.
template <class F>
std::vector<Matrix<F>> trace_bases(const Representation<F>& x, const Representation<F>& m) {
    auto maps = hom_basis(m, x);
    std::vector<Matrix<F>> bases;
    for (std::size_t w = 0; w < x.dims().size(); ++w) {
        Matrix<F> stacked(x.field(), 0, x.dim(w));
        for (const auto& f : maps) stacked = vstack(stacked, f.component(w));
        bases.push_back(row_space_basis(stacked));
    }
    return bases;
}

/// X in Gen M: the trace of M in X is all of X.
template <class F>
bool gen_membership(const Representation<F>& x, const Representation<F>& m) {
    require_same_algebra(x, m);
    auto bases = trace_bases(x, m);
    for (std::size_t w = 0; w < bases.size(); ++w)
        if (bases[w].rows() != x.dim(w)) return false;
    return true;
}

/// X in Cogen M: the maps X -> M have no common kernel.
template <class F>
bool cogen_membership(const Representation<F>& x, const Representation<F>& m) {
    require_same_algebra(x, m);
    auto maps = hom_basis(x, m);
    for (std::size_t w = 0; w < x.dims().size(); ++w) {
        if (x.dim(w) == 0) continue;
        Matrix<F> joined(x.field(), x.dim(w), 0);
        for (const auto& f : maps) joined = hstack(joined, f.component(w));
        if (rank(joined) != x.dim(w)) return false;
    }
    return true;
}

} // namespace tautilt
