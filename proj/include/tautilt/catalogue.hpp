#pragma once

// Catalogues of indecomposables built by knitting, and the tau-tilting
// queries that run over them: torsion classes, Ext-projectives, Bongartz
// complements.

#include "tautilt/homological.hpp"

#include <deque>
#include <map>

namespace tautilt {

struct CatalogueLimits {
    std::size_t max_dim = 40;
    std::size_t max_count = 2000;
};

template <class F>
struct CatalogueItem {
    Representation<F> module;
    std::string label;
    bool projective = false;
    bool injective = false;
    std::optional<std::size_t> tau;
    std::optional<std::size_t> tau_inv;
};

struct Mesh {
    std::size_t end = 0;
    std::size_t start = 0;
    std::vector<std::pair<std::size_t, std::size_t>> middle;  // (item, multiplicity)
};

struct IrreducibleArrow {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t multiplicity = 1;
    bool operator<(const IrreducibleArrow& o) const { return std::tie(from, to) < std::tie(o.from, o.to); }
};

template <class F>
class Catalogue {
public:
    Catalogue(Algebra<F> alg, std::vector<CatalogueItem<F>> items, std::vector<Mesh> meshes,
              std::vector<IrreducibleArrow> arrows)
        : alg_(std::move(alg)), items_(std::move(items)), meshes_(std::move(meshes)), arrows_(std::move(arrows)) {
        const auto n = items_.size();
        hom_.assign(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) hom_[i][j] = hom_dim(items_[i].module, items_[j].module);
    }

    [[nodiscard]] const Algebra<F>& algebra() const { return alg_; }
    [[nodiscard]] std::size_t size() const { return items_.size(); }
    [[nodiscard]] const CatalogueItem<F>& item(std::size_t i) const { return items_.at(i); }
    [[nodiscard]] const std::vector<CatalogueItem<F>>& items() const { return items_; }
    [[nodiscard]] const std::vector<Mesh>& meshes() const { return meshes_; }
    [[nodiscard]] const std::vector<IrreducibleArrow>& irreducible_arrows() const { return arrows_; }
    [[nodiscard]] const Representation<F>& module(std::size_t i) const { return items_.at(i).module; }

    /// dim Hom(item i, item j).
    [[nodiscard]] std::size_t hom(std::size_t i, std::size_t j) const { return hom_.at(i).at(j); }

    /// tau of item i as a module (zero for projectives).
    [[nodiscard]] Representation<F> tau_module(std::size_t i) const {
        const auto& it = items_.at(i);
        return it.tau ? items_[*it.tau].module : Representation<F>::zero(alg_);
    }

    /// dim Hom(item i, tau item j) from the table.
    [[nodiscard]] std::size_t hom_to_tau(std::size_t i, std::size_t j) const {
        const auto& t = items_.at(j).tau;
        return t ? hom_[i][*t] : 0;
    }

    [[nodiscard]] std::optional<std::size_t> find(const Representation<F>& m) const {
        for (std::size_t i = 0; i < items_.size(); ++i)
            if (items_[i].module.dims() == m.dims() && indecomposables_isomorphic(items_[i].module, m)) return i;
        return std::nullopt;
    }

    /// Multiplicity of each item as a summand of M.
    [[nodiscard]] std::vector<std::size_t> multiplicities(const Representation<F>& m) const {
        require_algebra(m);
        std::vector<std::size_t> mult(items_.size(), 0);
        for (const auto& piece : decompose(m)) {
            auto i = find(piece.module);
            if (!i) fail(ErrorKind::IncompleteCatalogue, "summand " + loewy_label(piece.module) + " is not in the catalogue");
            mult[*i] += piece.multiplicity;
        }
        return mult;
    }

    [[nodiscard]] Representation<F> sum(const std::vector<std::size_t>& indices) const {
        std::vector<Representation<F>> parts;
        for (auto i : indices) parts.push_back(items_.at(i).module);
        return direct_sum(alg_, parts);
    }

    void require_algebra(const Representation<F>& m) const {
        if (!(m.algebra() == alg_)) fail(ErrorKind::IncompleteCatalogue, "catalogue belongs to a different algebra");
    }

private:
    Algebra<F> alg_;
    std::vector<CatalogueItem<F>> items_;
    std::vector<Mesh> meshes_;
    std::vector<IrreducibleArrow> arrows_;
    std::vector<std::vector<std::size_t>> hom_;
};

namespace detail {

template <class F>
class Knitter {
public:
    Knitter(const Algebra<F>& alg, CatalogueLimits limits) : alg_(alg), limits_(limits) {}

    Catalogue<F> run() {
        for (std::size_t v = 0; v < alg_.vertex_count(); ++v) insert(projective(alg_, v));
        for (std::size_t v = 0; v < alg_.vertex_count(); ++v) insert(injective(alg_, v));
        while (!queue_.empty()) {
            auto i = queue_.front();
            queue_.pop_front();
            process(i);
        }
        return finish();
    }

private:
    struct Raw {
        Representation<F> module;
        bool projective = false;
        bool injective = false;
        std::optional<std::size_t> tau, tau_inv;
    };
    struct RawMesh {
        std::size_t end, start;
        std::vector<std::pair<std::size_t, std::size_t>> middle;
    };

    Algebra<F> alg_;
    CatalogueLimits limits_;
    std::vector<Raw> raw_;
    std::deque<std::size_t> queue_;
    std::vector<RawMesh> meshes_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows_;

    std::size_t insert(const Representation<F>& m) {
        for (std::size_t i = 0; i < raw_.size(); ++i)
            if (raw_[i].module.dims() == m.dims() && indecomposables_isomorphic(raw_[i].module, m)) return i;
        if (m.total_dim() > limits_.max_dim)
            fail(ErrorKind::LimitExceeded, "an indecomposable of dimension " + std::to_string(m.total_dim()) +
                                               " exceeds max-dim " + std::to_string(limits_.max_dim));
        if (raw_.size() >= limits_.max_count)
            fail(ErrorKind::LimitExceeded, "more than " + std::to_string(limits_.max_count) + " indecomposables");
        Raw r{m, is_projective(m), is_projective(dual(m)), std::nullopt, std::nullopt};
        raw_.push_back(std::move(r));
        queue_.push_back(raw_.size() - 1);
        return raw_.size() - 1;
    }

    void add_arrow(std::size_t from, std::size_t to, std::size_t mult) {
        auto& m = arrows_[{from, to}];
        m = std::max(m, mult);
    }

    void process(std::size_t i) {
        const auto m = raw_[i].module;
        if (!raw_[i].projective) {
            auto seq = almost_split_sequence(m);
            auto t = insert(seq.left);
            raw_[i].tau = t;
            raw_[t].tau_inv = i;
            RawMesh mesh{i, t, {}};
            for (const auto& piece : decompose(seq.middle)) {
                auto k = insert(piece.module);
                mesh.middle.emplace_back(k, piece.multiplicity);
                add_arrow(t, k, piece.multiplicity);
                add_arrow(k, i, piece.multiplicity);
            }
            meshes_.push_back(std::move(mesh));
        } else {
            auto rad = radical(m).module;
            for (const auto& piece : decompose(rad)) add_arrow(insert(piece.module), i, piece.multiplicity);
        }
        if (!raw_[i].injective) {
            auto ti = tau_inv(m);
            auto k = insert(ti);
            raw_[i].tau_inv = k;
            raw_[k].tau = i;
        } else {
            auto soc = socle(m);
            auto quo = quotient(m, soc.inclusion.components()).module;
            for (const auto& piece : decompose(quo)) add_arrow(i, insert(piece.module), piece.multiplicity);
        }
    }

    Catalogue<F> finish() {
        const auto n = raw_.size();
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& ma = raw_[a].module;
            const auto& mb = raw_[b].module;
            if (ma.total_dim() != mb.total_dim()) return ma.total_dim() < mb.total_dim();
            return ma.dims() < mb.dims();
        });
        std::vector<std::size_t> pos(n);
        for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
        auto remap = [&](std::optional<std::size_t> x) -> std::optional<std::size_t> {
            if (!x) return std::nullopt;
            return pos[*x];
        };
        std::vector<CatalogueItem<F>> items;
        for (auto i : order) {
            const auto& r = raw_[i];
            items.push_back({r.module, loewy_label(r.module), r.projective, r.injective, remap(r.tau), remap(r.tau_inv)});
        }
        std::vector<Mesh> meshes;
        for (const auto& m : meshes_) {
            Mesh out{pos[m.end], pos[m.start], {}};
            for (auto [k, mult] : m.middle) out.middle.emplace_back(pos[k], mult);
            std::sort(out.middle.begin(), out.middle.end());
            meshes.push_back(std::move(out));
        }
        std::sort(meshes.begin(), meshes.end(), [](const Mesh& a, const Mesh& b) { return a.end < b.end; });
        std::vector<IrreducibleArrow> arrows;
        for (const auto& [key, mult] : arrows_) arrows.push_back({pos[key.first], pos[key.second], mult});
        std::sort(arrows.begin(), arrows.end());
        return Catalogue<F>(alg_, std::move(items), std::move(meshes), std::move(arrows));
    }
};

} // namespace detail

/// Knits the Auslander-Reiten quiver from the projectives and injectives.
/// Complete for representation-finite connected algebras.
template <class F>
Catalogue<F> build_catalogue(const Algebra<F>& alg, CatalogueLimits limits = {}) {
    return detail::Knitter<F>(alg, limits).run();
}

// ---------------------------------------------------------------------------
// Torsion classes

template <class F>
struct TorsionView {
    Representation<F> module;
    Representation<F> tau_module;
    std::vector<bool> torsion;      // item in the left perpendicular of tau M
    std::vector<bool> torsionfree;  // item in Cogen(tau M)
    bool sincere = false;
};

/// Flags T = {X : Hom(X, tau M) = 0} and F = Cogen(tau M), then checks the
/// torsion pair axioms over the catalogue.
template <class F>
TorsionView<F> torsion_view(const Representation<F>& m, const Catalogue<F>& cat) {
    cat.require_algebra(m);
    const auto n = cat.size();
    TorsionView<F> view{m, tau(m), std::vector<bool>(n), std::vector<bool>(n), false};
    for (std::size_t i = 0; i < n; ++i) {
        view.torsion[i] = hom_dim(cat.module(i), view.tau_module) == 0;
        view.torsionfree[i] = cogen_membership(cat.module(i), view.tau_module);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (view.torsion[i] && view.torsionfree[i])
            fail(ErrorKind::InternalInconsistency, "item " + cat.item(i).label + " is both torsion and torsionfree");
        bool orth_to_f = true, orth_from_t = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (view.torsionfree[j] && cat.hom(i, j) != 0) orth_to_f = false;
            if (view.torsion[j] && cat.hom(j, i) != 0) orth_from_t = false;
        }
        if (view.torsion[i] != orth_to_f)
            fail(ErrorKind::InternalInconsistency, "torsion class is not the left perpendicular of the torsionfree class at " +
                                                       cat.item(i).label);
        if (view.torsionfree[i] != orth_from_t)
            fail(ErrorKind::InternalInconsistency, "torsionfree class is not the right perpendicular of the torsion class at " +
                                                       cat.item(i).label);
    }
    std::vector<bool> support(cat.algebra().vertex_count(), false);
    for (std::size_t i = 0; i < n; ++i)
        if (view.torsion[i])
            for (std::size_t v = 0; v < support.size(); ++v) support[v] = support[v] || cat.module(i).dim(v) > 0;
    view.sincere = std::all_of(support.begin(), support.end(), [](bool b) { return b; });
    return view;
}

/// X in the left perpendicular of tau M is Ext-projective there iff tau X lies in Cogen(tau M).
template <class F>
bool is_ext_projective_in_perp(const Representation<F>& x, const Representation<F>& m, const Catalogue<F>& cat) {
    cat.require_algebra(m);
    auto tm = tau(m);
    if (hom_dim(x, tm) != 0) fail(ErrorKind::NotInTorsionClass, "module is not in the left perpendicular of tau M");
    const bool by_cogen = cogen_membership(tau(x), tm);
    bool by_ext = true;
    for (std::size_t i = 0; i < cat.size() && by_ext; ++i)
        if (hom_dim(cat.module(i), tm) == 0 && ext1_dim(x, cat.module(i)) != 0) by_ext = false;
    if (by_cogen != by_ext)
        fail(ErrorKind::InternalInconsistency, "Ext-projectivity disagrees with the cogeneration criterion");
    return by_cogen;
}

template <class F>
struct BongartzResult {
    Representation<F> module;
    std::vector<std::size_t> items;  // catalogue indices of the summands
};

/// Ext-projectives of the left perpendicular of tau M that are not in add M.
template <class F>
BongartzResult<F> bongartz_complement(const Representation<F>& m, const Catalogue<F>& cat) {
    cat.require_algebra(m);
    auto tm = tau(m);
    if (hom_dim(m, tm) != 0) fail(ErrorKind::NotTauRigid, "module is not tau-rigid");
    auto in_m = cat.multiplicities(m);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        if (in_m[i] > 0) continue;
        if (hom_dim(cat.module(i), tm) != 0) continue;
        if (!cogen_membership(cat.tau_module(i), tm)) continue;
        chosen.push_back(i);
    }
    auto u = cat.sum(chosen);
    std::size_t basic = chosen.size();
    for (auto k : in_m) basic += k > 0;
    auto mu = direct_sum(m, u);
    if (basic != cat.algebra().vertex_count() || hom_dim(mu, tau(mu)) != 0)
        fail(ErrorKind::InternalInconsistency, "Bongartz completion is not tau-tilting");
    return {u, chosen};
}

template <class F>
bool is_tau_tilting(const Representation<F>& m) {
    return is_tau_rigid(m) && basic_summand_count(m) == m.algebra().vertex_count();
}

/// With a catalogue: also checks that the left perpendicular of tau M equals Gen M exactly when M is tau-tilting.
template <class F>
bool is_tau_tilting(const Representation<F>& m, const Catalogue<F>& cat) {
    cat.require_algebra(m);
    auto tm = tau(m);
    if (hom_dim(m, tm) != 0) return false;
    const bool counted = basic_summand_count(m) == m.algebra().vertex_count();
    bool perp_is_gen = true;
    for (std::size_t i = 0; i < cat.size() && perp_is_gen; ++i)
        perp_is_gen = (hom_dim(cat.module(i), tm) == 0) == gen_membership(cat.module(i), m);
    if (counted != perp_is_gen)
        fail(ErrorKind::InternalInconsistency, "summand count and torsion class disagree on tau-tilting");
    return counted;
}

struct ExactlyOneReport {
    bool containment = false;  // perp(tau U) inside perp(tau X)
    bool generated = false;    // X in Gen U
};

/// For X + U basic tau-tilting with X indecomposable: exactly one alternative holds.
template <class F>
ExactlyOneReport exactly_one_alternative(const Representation<F>& x, const Representation<F>& u, const Catalogue<F>& cat) {
    cat.require_algebra(x);
    auto xu = direct_sum(x, u);
    auto xi = cat.find(x);
    if (!xi || !is_indecomposable(x)) fail(ErrorKind::PreconditionFailed, "X must be an indecomposable catalogue module");
    if (cat.multiplicities(u)[*xi] > 0) fail(ErrorKind::PreconditionFailed, "X is already a summand of U");
    auto mult = cat.multiplicities(xu);
    for (auto k : mult)
        if (k > 1) fail(ErrorKind::PreconditionFailed, "X + U is not basic");
    if (!is_tau_tilting(xu)) fail(ErrorKind::PreconditionFailed, "X + U is not tau-tilting");
    auto tu = tau(u), tx = tau(x);
    ExactlyOneReport r;
    r.containment = true;
    for (std::size_t i = 0; i < cat.size() && r.containment; ++i)
        if (hom_dim(cat.module(i), tu) == 0 && hom_dim(cat.module(i), tx) != 0) r.containment = false;
    r.generated = gen_membership(x, u);
    if (r.containment == r.generated)
        fail(ErrorKind::InternalInconsistency, r.containment ? "both alternatives hold" : "neither alternative holds");
    return r;
}

} // namespace tautilt
