#pragma once

// Bound quiver algebras kQ/I with a normal-form path basis.
//
// Paths compose left to right: the path "a b" means a first, then b. The
// relation ideal is closed degree by degree (relations must be homogeneous in
// path length), and the quotient basis in each degree is the set of paths not
// chosen as pivots when the ideal is row reduced with lexicographically larger
// paths taking priority. Basis order: length, then arrow-name sequence.
//
// An Algebra is a cheap handle onto shared immutable data. The opposite
// algebra shares that data and simply reads it backwards, so
// a.opposite().opposite() == a holds literally and basis element i of the
// opposite is the reversal of basis element i.

#include "tautilt/exactlin.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace tautilt {

struct ArrowSpec {
    std::string name;
    std::string from;
    std::string to;
};

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows) : vertices_(std::move(vertices)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].empty()) fail(ErrorKind::InvalidInput, "empty vertex id");
            if (!vertex_index_.emplace(vertices_[i], i).second)
                fail(ErrorKind::InvalidInput, "duplicate vertex id '" + vertices_[i] + "'");
        }
        for (const auto& a : arrows) {
            auto s = find_vertex(a.from), t = find_vertex(a.to);
            if (!s || !t) fail(ErrorKind::InvalidInput, "arrow '" + a.name + "' has an unknown endpoint");
            if (a.name.empty()) fail(ErrorKind::InvalidInput, "empty arrow name");
            if (!arrow_index_.emplace(a.name, arrows_.size()).second)
                fail(ErrorKind::InvalidInput, "duplicate arrow name '" + a.name + "'");
            arrows_.push_back(Arrow{a.name, *s, *t});
        }
    }

    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
    [[nodiscard]] const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
    [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
    [[nodiscard]] const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }

    [[nodiscard]] std::optional<std::size_t> find_vertex(const std::string& id) const {
        auto it = vertex_index_.find(id);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::optional<std::size_t> find_arrow(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] Quiver reversed() const {
        Quiver q = *this;
        for (auto& a : q.arrows_) std::swap(a.source, a.target);
        return q;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> arrow_index_;
};

/// A path: its endpoints plus the arrow indices traversed (empty for e_v).
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    [[nodiscard]] std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

template <class F>
struct RelationTerm {
    typename F::value_type coeff;
    std::vector<std::size_t> path;  // arrow indices
};

template <class F>
using Relation = std::vector<RelationTerm<F>>;

template <class F>
struct RelationTermSpec {
    std::string coeff;
    std::vector<std::string> path;
};

template <class F>
using RelationSpec = std::vector<RelationTermSpec<F>>;

/// Sparse algebra element: (basis index, coefficient) pairs sorted by index.
template <class F>
using SparseElement = std::vector<std::pair<std::size_t, typename F::value_type>>;

namespace detail {

template <class F>
struct DegreeData {
    std::vector<std::vector<std::size_t>> paths;  // all composable arrow words of this length
    std::map<std::vector<std::size_t>, std::size_t> index;
    Matrix<F> ideal;  // rref of I_n; column j <-> paths[paths.size() - 1 - j]
    std::vector<std::size_t> pivots;
    std::vector<std::optional<std::size_t>> basis_of_path;  // surviving path -> basis index

    explicit DegreeData(const F& f) : ideal(f, 0, 0) {}
};

template <class F>
struct AlgebraCore {
    F field;
    Quiver quiver;
    Quiver reversed_quiver;
    std::vector<Relation<F>> relations;
    std::vector<Relation<F>> reversed_relations;
    std::size_t nilpotency_bound = 0;
    std::vector<Path> basis;
    std::vector<DegreeData<F>> degrees;  // lengths 1 .. nilpotency_bound - 1 (index 0 unused)
    std::vector<std::size_t> trivial_index;
    std::vector<std::size_t> arrow_index;
    std::vector<std::vector<SparseElement<F>>> mult;
    std::vector<std::vector<std::vector<std::size_t>>> between;  // [u][v] -> basis indices, ascending

    explicit AlgebraCore(F f) : field(std::move(f)) {}

    /// Reduces a forward arrow word of length >= 1 to normal form.
    [[nodiscard]] SparseElement<F> reduce_word(const std::vector<std::size_t>& word) const {
        SparseElement<F> out;
        if (word.size() >= nilpotency_bound) return out;
        const auto& deg = degrees[word.size()];
        auto it = deg.index.find(word);
        if (it == deg.index.end()) return out;  // not composable
        const std::size_t n = deg.paths.size();
        std::vector<typename F::value_type> v(n, field.zero());
        v[n - 1 - it->second] = field.one();
        for (std::size_t k = 0; k < deg.pivots.size(); ++k) {
            auto c = deg.pivots[k];
            if (field.is_zero(v[c])) continue;
            auto coef = v[c];
            for (std::size_t j = 0; j < n; ++j)
                if (!field.is_zero(deg.ideal(k, j))) field.sub_mul_in(v[j], coef, deg.ideal(k, j));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (field.is_zero(v[j])) continue;
            auto b = deg.basis_of_path[n - 1 - j];
            if (!b) fail(ErrorKind::InternalInconsistency, "normal form left a pivot path");
            out.emplace_back(*b, v[j]);
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }
};

} // namespace detail

template <class F>
class Algebra {
public:
    using value_type = typename F::value_type;
    using Element = std::vector<value_type>;

    Algebra() = default;
    Algebra(std::shared_ptr<const detail::AlgebraCore<F>> core, bool reversed) : core_(std::move(core)), reversed_(reversed) {}

    [[nodiscard]] bool valid() const { return core_ != nullptr; }
    [[nodiscard]] const F& field() const { return core_->field; }
    [[nodiscard]] const Quiver& quiver() const { return reversed_ ? core_->reversed_quiver : core_->quiver; }
    [[nodiscard]] std::size_t vertex_count() const { return core_->quiver.vertex_count(); }
    [[nodiscard]] std::size_t arrow_count() const { return core_->quiver.arrow_count(); }
    [[nodiscard]] std::size_t dimension() const { return core_->basis.size(); }
    [[nodiscard]] std::size_t nilpotency_bound() const { return core_->nilpotency_bound; }
    [[nodiscard]] bool is_opposite() const { return reversed_; }
    [[nodiscard]] const std::vector<Relation<F>>& relations() const {
        return reversed_ ? core_->reversed_relations : core_->relations;
    }

    [[nodiscard]] Path basis_path(std::size_t i) const {
        Path p = core_->basis.at(i);
        if (reversed_) {
            std::swap(p.source, p.target);
            std::reverse(p.arrows.begin(), p.arrows.end());
        }
        return p;
    }
    [[nodiscard]] std::size_t source(std::size_t i) const {
        return reversed_ ? core_->basis[i].target : core_->basis[i].source;
    }
    [[nodiscard]] std::size_t target(std::size_t i) const {
        return reversed_ ? core_->basis[i].source : core_->basis[i].target;
    }

    /// Basis elements that are paths from u to v, ascending by index.
    [[nodiscard]] const std::vector<std::size_t>& paths_between(std::size_t u, std::size_t v) const {
        return reversed_ ? core_->between[v][u] : core_->between[u][v];
    }
    [[nodiscard]] std::size_t trivial_element(std::size_t v) const { return core_->trivial_index.at(v); }
    [[nodiscard]] std::size_t arrow_element(std::size_t a) const { return core_->arrow_index.at(a); }

    [[nodiscard]] const SparseElement<F>& basis_product(std::size_t i, std::size_t j) const {
        return reversed_ ? core_->mult[j][i] : core_->mult[i][j];
    }

    /// Normal form of the path given by an arrow word in this orientation.
    [[nodiscard]] SparseElement<F> reduce_path(std::size_t source, const std::vector<std::size_t>& word) const {
        if (word.empty()) return {{trivial_element(source), field().one()}};
        const auto& q = quiver();
        if (q.arrow(word.front()).source != source) return {};
        for (std::size_t k = 0; k + 1 < word.size(); ++k)
            if (q.arrow(word[k]).target != q.arrow(word[k + 1]).source) return {};
        if (!reversed_) return core_->reduce_word(word);
        std::vector<std::size_t> fwd(word.rbegin(), word.rend());
        return core_->reduce_word(fwd);
    }

    [[nodiscard]] Element zero_element() const { return Element(dimension(), field().zero()); }

    [[nodiscard]] Element to_dense(const SparseElement<F>& s) const {
        Element e = zero_element();
        for (const auto& [i, c] : s) field().add_in(e[i], c);
        return e;
    }

    [[nodiscard]] Element multiply(const Element& x, const Element& y) const {
        const F& f = field();
        if (x.size() != dimension() || y.size() != dimension())
            fail(ErrorKind::InvalidInput, "algebra element has wrong coordinate count");
        Element out = zero_element();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (f.is_zero(x[i])) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (f.is_zero(y[j])) continue;
                auto c = f.mul(x[i], y[j]);
                for (const auto& [k, v] : basis_product(i, j)) f.add_in(out[k], f.mul(c, v));
            }
        }
        return out;
    }

    [[nodiscard]] Algebra opposite() const { return Algebra(core_, !reversed_); }

    /// Arrow names of basis element i joined by spaces, or "e_<vertex>".
    [[nodiscard]] std::string path_label(std::size_t i) const {
        Path p = basis_path(i);
        if (p.arrows.empty()) return "e_" + quiver().vertex(p.source);
        std::string s;
        for (auto a : p.arrows) s += (s.empty() ? "" : " ") + quiver().arrow(a).name;
        return s;
    }

    bool operator==(const Algebra& o) const { return core_ == o.core_ && reversed_ == o.reversed_; }
    [[nodiscard]] const void* identity() const { return core_.get(); }

private:
    std::shared_ptr<const detail::AlgebraCore<F>> core_;
    bool reversed_ = false;
};

namespace detail {

inline bool word_less(const Quiver& q, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](std::size_t x, std::size_t y) {
        return q.arrow(x).name < q.arrow(y).name;
    });
}

} // namespace detail

/// Converts name-based relation specs to arrow-index relations, validating shape.
template <class F>
std::vector<Relation<F>> resolve_relations(const Quiver& q, const F& field, const std::vector<RelationSpec<F>>& specs) {
    std::vector<Relation<F>> out;
    for (std::size_t r = 0; r < specs.size(); ++r) {
        Relation<F> rel;
        for (const auto& t : specs[r]) {
            RelationTerm<F> term{field.parse(t.coeff), {}};
            for (const auto& name : t.path) {
                auto a = q.find_arrow(name);
                if (!a) fail(ErrorKind::MalformedRelation, "relation " + std::to_string(r) + " uses unknown arrow '" + name + "'");
                term.path.push_back(*a);
            }
            rel.push_back(std::move(term));
        }
        out.push_back(std::move(rel));
    }
    return out;
}

/// Builds kQ/I. Fails with NotAdmissible when paths of length max_len survive.
template <class F>
Algebra<F> build_algebra(Quiver quiver, std::vector<Relation<F>> relations, F field, std::size_t max_len = 20) {
    auto core = std::make_shared<detail::AlgebraCore<F>>(field);
    const Quiver& q = quiver;
    const std::size_t nv = q.vertex_count();

    // Validate relations: nonempty, composable, parallel, length >= 2, homogeneous.
    std::vector<Relation<F>> cleaned;
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        const std::string tag = "relation " + std::to_string(r);
        if (rel.empty()) fail(ErrorKind::MalformedRelation, tag + " is empty");
        std::optional<std::size_t> s, t, len;
        Relation<F> kept;
        for (const auto& term : rel) {
            if (term.path.size() < 2) fail(ErrorKind::MalformedRelation, tag + " has a path of length < 2");
            for (auto a : term.path)
                if (a >= q.arrow_count()) fail(ErrorKind::MalformedRelation, tag + " uses an unknown arrow");
            for (std::size_t k = 0; k + 1 < term.path.size(); ++k)
                if (q.arrow(term.path[k]).target != q.arrow(term.path[k + 1]).source)
                    fail(ErrorKind::MalformedRelation, tag + " contains a non-composable path");
            auto ts = q.arrow(term.path.front()).source, tt = q.arrow(term.path.back()).target;
            if (s && (*s != ts || *t != tt)) fail(ErrorKind::MalformedRelation, tag + " has non-parallel paths");
            if (len && *len != term.path.size())
                fail(ErrorKind::MalformedRelation, tag + " mixes path lengths (only length-homogeneous relations are supported)");
            s = ts;
            t = tt;
            len = term.path.size();
            if (!field.is_zero(term.coeff)) kept.push_back(term);
        }
        if (!kept.empty()) cleaned.push_back(std::move(kept));
    }

    // Degree-by-degree closure of the ideal.
    std::vector<std::vector<std::vector<std::size_t>>> words(1);  // words[n]: composable words of length n
    std::vector<Matrix<F>> ideal_rows(1, Matrix<F>(field, 0, 0));  // natural column order
    std::optional<std::size_t> bound;
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<std::vector<std::size_t>> cur;
        if (n == 1) {
            for (std::size_t a = 0; a < q.arrow_count(); ++a) cur.push_back({a});
        } else {
            for (const auto& w : words[n - 1])
                for (std::size_t a = 0; a < q.arrow_count(); ++a)
                    if (q.arrow(w.back()).target == q.arrow(a).source) {
                        auto x = w;
                        x.push_back(a);
                        cur.push_back(std::move(x));
                    }
        }
        std::sort(cur.begin(), cur.end(), [&](const auto& a, const auto& b) { return detail::word_less(q, a, b); });
        std::map<std::vector<std::size_t>, std::size_t> idx;
        for (std::size_t i = 0; i < cur.size(); ++i) idx[cur[i]] = i;

        std::vector<std::vector<typename F::value_type>> gens;
        auto add_gen = [&](std::vector<typename F::value_type> v) {
            bool nz = std::any_of(v.begin(), v.end(), [&](const auto& x) { return !field.is_zero(x); });
            if (nz) gens.push_back(std::move(v));
        };
        for (const auto& rel : cleaned) {
            if (rel.front().path.size() != n) continue;
            std::vector<typename F::value_type> v(cur.size(), field.zero());
            for (const auto& term : rel) field.add_in(v[idx.at(term.path)], term.coeff);
            add_gen(std::move(v));
        }
        if (n >= 2) {
            const auto& prev = ideal_rows[n - 1];
            const auto& pw = words[n - 1];
            for (std::size_t r = 0; r < prev.rows(); ++r)
                for (std::size_t a = 0; a < q.arrow_count(); ++a) {
                    std::vector<typename F::value_type> right(cur.size(), field.zero()), left(cur.size(), field.zero());
                    bool any_r = false, any_l = false;
                    for (std::size_t j = 0; j < pw.size(); ++j) {
                        if (field.is_zero(prev(r, j))) continue;
                        const auto& w = pw[j];
                        if (q.arrow(w.back()).target == q.arrow(a).source) {
                            auto x = w;
                            x.push_back(a);
                            field.add_in(right[idx.at(x)], prev(r, j));
                            any_r = true;
                        }
                        if (q.arrow(a).target == q.arrow(w.front()).source) {
                            std::vector<std::size_t> x{a};
                            x.insert(x.end(), w.begin(), w.end());
                            field.add_in(left[idx.at(x)], prev(r, j));
                            any_l = true;
                        }
                    }
                    if (any_r) add_gen(std::move(right));
                    if (any_l) add_gen(std::move(left));
                }
        }
        Matrix<F> gen_mat(field, gens.size(), cur.size());
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t j = 0; j < cur.size(); ++j) gen_mat(r, j) = gens[r][j];
        auto basis_rows = row_space_basis(gen_mat);
        words.push_back(cur);
        ideal_rows.push_back(basis_rows);
        if (basis_rows.rows() == cur.size()) {
            bound = n;
            break;
        }
    }
    if (!bound)
        fail(ErrorKind::NotAdmissible, "paths of length " + std::to_string(max_len) + " survive the relations");

    core->nilpotency_bound = *bound;
    core->quiver = quiver;
    core->reversed_quiver = quiver.reversed();
    core->relations = cleaned;
    for (auto rel : cleaned) {
        for (auto& t : rel) std::reverse(t.path.begin(), t.path.end());
        core->reversed_relations.push_back(std::move(rel));
    }

    // Basis: trivial paths, then surviving paths of each length.
    core->trivial_index.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        core->trivial_index[v] = core->basis.size();
        core->basis.push_back(Path{v, v, {}});
    }
    core->degrees.assign(*bound, detail::DegreeData<F>(field));
    for (std::size_t n = 1; n < *bound; ++n) {
        auto& deg = core->degrees[n];
        deg.paths = words[n];
        for (std::size_t i = 0; i < deg.paths.size(); ++i) deg.index[deg.paths[i]] = i;
        const std::size_t cnt = deg.paths.size();
        // Reverse columns so lexicographically larger paths become pivots.
        std::vector<std::size_t> rev(cnt);
        for (std::size_t j = 0; j < cnt; ++j) rev[j] = cnt - 1 - j;
        auto res = rref(select_cols(ideal_rows[n], rev));
        std::vector<std::size_t> keep(res.rank);
        for (std::size_t i = 0; i < res.rank; ++i) keep[i] = i;
        deg.ideal = select_rows(res.reduced, keep);
        deg.pivots = res.pivots;
        std::vector<bool> pivot_path(cnt, false);
        for (auto c : deg.pivots) pivot_path[cnt - 1 - c] = true;
        deg.basis_of_path.assign(cnt, std::nullopt);
        for (std::size_t i = 0; i < cnt; ++i) {
            if (pivot_path[i]) continue;
            deg.basis_of_path[i] = core->basis.size();
            const auto& w = deg.paths[i];
            core->basis.push_back(Path{q.arrow(w.front()).source, q.arrow(w.back()).target, w});
        }
    }
    core->arrow_index.resize(q.arrow_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        auto e = core->reduce_word({a});
        if (e.size() != 1 || !field.is_one(e[0].second))
            fail(ErrorKind::InternalInconsistency, "arrow did not survive as a basis path");
        core->arrow_index[a] = e[0].first;
    }

    const std::size_t dim = core->basis.size();
    core->between.assign(nv, std::vector<std::vector<std::size_t>>(nv));
    for (std::size_t i = 0; i < dim; ++i) core->between[core->basis[i].source][core->basis[i].target].push_back(i);

    core->mult.assign(dim, std::vector<SparseElement<F>>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& p = core->basis[i];
            const auto& r = core->basis[j];
            if (p.target != r.source) continue;
            if (p.arrows.empty()) {
                core->mult[i][j] = {{j, field.one()}};
                continue;
            }
            if (r.arrows.empty()) {
                core->mult[i][j] = {{i, field.one()}};
                continue;
            }
            auto w = p.arrows;
            w.insert(w.end(), r.arrows.begin(), r.arrows.end());
            core->mult[i][j] = core->reduce_word(w);
        }
    return Algebra<F>(core, false);
}

template <class F>
Algebra<F> build_algebra(const std::vector<std::string>& vertices, const std::vector<ArrowSpec>& arrows,
                         const std::vector<RelationSpec<F>>& relations, F field, std::size_t max_len = 20) {
    Quiver q(vertices, arrows);
    auto rels = resolve_relations(q, field, relations);
    return build_algebra(std::move(q), std::move(rels), std::move(field), max_len);
}

/// Monomial relation helper: the path given by arrow names with coefficient 1.
template <class F>
RelationSpec<F> zero_relation(std::vector<std::string> arrows) {
    return RelationSpec<F>{RelationTermSpec<F>{"1", std::move(arrows)}};
}

} // namespace tautilt
