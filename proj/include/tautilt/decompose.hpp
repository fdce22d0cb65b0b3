#pragma once

// Krull-Schmidt decomposition by Fitting's lemma, and isomorphism testing.
//
// An endomorphism f that is neither nilpotent nor invertible splits
// M = ker f^N + im f^N. When no such f turns up among the candidates tried,
// locality of End(M) is certified instead: by the trace form (the radical of a
// faithfully represented algebra in characteristic 0 or p > dim M is the
// kernel of (x, y) |-> tr(xy)), or by exhausting End(M) over a small field.

#include "tautilt/repmod.hpp"

#include <cmath>
#include <random>

namespace tautilt {

template <class F>
struct Summand {
    Representation<F> module;
    ModuleMap<F> inclusion;  // into the module that was decomposed
};

template <class F>
struct DecomposedPiece {
    Representation<F> module;
    std::size_t multiplicity = 1;
};

namespace detail {

template <class F>
bool endo_nilpotent(const ModuleMap<F>& f) {
    return std::all_of(f.components().begin(), f.components().end(), [](const auto& c) { return is_nilpotent(c); });
}

template <class F>
bool endo_invertible(const ModuleMap<F>& f) {
    return std::all_of(f.components().begin(), f.components().end(), [](const auto& c) { return is_invertible(c); });
}

template <class F>
bool splits(const ModuleMap<F>& f) {
    return !endo_nilpotent(f) && !endo_invertible(f);
}

template <class F>
typename F::value_type endo_trace(const ModuleMap<F>& f) {
    const F& fld = f.source().field();
    auto t = fld.zero();
    for (const auto& c : f.components()) fld.add_in(t, trace(c));
    return t;
}

template <class F>
ModuleMap<F> combine(const ModuleMap<F>& a, const ModuleMap<F>& b, const typename F::value_type& s) {
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < a.components().size(); ++v) c.push_back(add(a.component(v), scale(b.component(v), s)));
    return ModuleMap<F>(a.source(), a.target(), std::move(c), false);
}

template <class F>
ModuleMap<F> shift(const ModuleMap<F>& a, const typename F::value_type& lambda) {
    return combine(a, identity_map(a.source()), a.source().field().neg(lambda));
}

enum class SearchOutcome { Split, Local, Undecided };

template <class F>
struct SplitSearch {
    SearchOutcome outcome = SearchOutcome::Undecided;
    std::optional<ModuleMap<F>> splitter;
};

template <class F>
SplitSearch<F> split_found(ModuleMap<F> f) {
    return {SearchOutcome::Split, std::move(f)};
}

/// Exhausts End(M) over a small prime field; returns a splitter or certifies locality.
template <class F>
SplitSearch<F> exhaust_small_field(const std::vector<ModuleMap<F>>& basis, const Representation<F>& m) {
    const F& fld = m.field();
    const std::uint64_t p = fld.characteristic();
    std::vector<std::uint64_t> digits(basis.size(), 0);
    while (true) {
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
        if (k == digits.size()) break;
        std::vector<typename F::value_type> coeffs;
        for (auto d : digits) coeffs.push_back(fld.from_int(static_cast<long long>(d)));
        auto f = linear_combination(basis, coeffs, m, m);
        if (splits(f)) return split_found(f);
    }
    return {SearchOutcome::Local, std::nullopt};
}

template <class F>
SplitSearch<F> find_splitting_endomorphism(const Representation<F>& m) {
    const F& fld = m.field();
    auto basis = hom_basis(m, m);
    const std::size_t n = basis.size();
    if (n <= 1) return {SearchOutcome::Local, std::nullopt};

    for (const auto& f : basis)
        if (splits(f)) return split_found(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (long long s : {1LL, -1LL}) {
                auto f = combine(basis[i], basis[j], fld.from_int(s));
                if (splits(f)) return split_found(f);
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto f = compose(basis[i], basis[j]);
            if (splits(f)) return split_found(f);
        }

    const std::uint64_t p = fld.characteristic();
    if (p != 0 && p <= m.total_dim()) {
        double size = std::pow(static_cast<double>(p), static_cast<double>(n));
        if (size <= double(1 << 20)) return exhaust_small_field(basis, m);
        return {SearchOutcome::Undecided, std::nullopt};
    }

    // Trace form: J = rad End(M) is its kernel.
    Matrix<F> form(fld, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form(i, j) = endo_trace(compose(basis[i], basis[j]));
    const std::size_t codim = rank(form);
    if (codim <= 1) return {SearchOutcome::Local, std::nullopt};

    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::size_t> partner;
        for (std::size_t j = 0; j < n && !partner; ++j)
            if (!fld.is_zero(form(i, j))) partner = j;
        if (!partner) continue;  // basis[i] lies in J
        const auto& x = basis[i];
        if (!endo_invertible(x)) {
            // x singular and tr(x y) != 0: x y is singular and not nilpotent.
            return split_found(compose(x, basis[*partner]));
        }
        // x invertible: try x - lambda for likely eigenvalues.
        std::vector<typename F::value_type> candidates;
        for (const auto& c : x.components())
            for (std::size_t d = 0; d < c.rows(); ++d) candidates.push_back(c(d, d));
        for (long long s = -3; s <= 3; ++s) candidates.push_back(fld.from_int(s));
        for (const auto& lambda : candidates) {
            auto y = shift(x, lambda);
            if (splits(y)) return split_found(y);
        }
    }
    return {SearchOutcome::Undecided, std::nullopt};
}

template <class F>
void split_recursively(const Representation<F>& m, const ModuleMap<F>& into_root, std::vector<Summand<F>>& out) {
    if (m.is_zero()) return;
    auto search = find_splitting_endomorphism(m);
    if (search.outcome == SearchOutcome::Undecided)
        fail(ErrorKind::Undecided, "could not decide whether a module of dimension " + std::to_string(m.total_dim()) +
                                       " is indecomposable over " + m.field().name());
    if (search.outcome == SearchOutcome::Local) {
        out.push_back({m, into_root});
        return;
    }
    const auto& f = *search.splitter;
    std::size_t big = 0;
    for (auto d : m.dims()) big = std::max(big, d);
    std::vector<Matrix<F>> ker, img;
    for (const auto& c : f.components()) {
        auto g = power(c, big);
        ker.push_back(left_kernel(g));
        img.push_back(row_space_basis(g));
    }
    for (const auto& bases : {ker, img}) {
        auto sub = subrepresentation(m, bases);
        split_recursively(sub.module, compose(sub.inclusion, into_root), out);
    }
}

template <class F>
bool same_dims(const Representation<F>& a, const Representation<F>& b) {
    return a.dims() == b.dims();
}

} // namespace detail

/// Indecomposable summands with their inclusions; their sum is M.
template <class F>
std::vector<Summand<F>> indecomposable_summands(const Representation<F>& m) {
    std::vector<Summand<F>> out;
    detail::split_recursively(m, identity_map(m), out);
    return out;
}

template <class F>
bool is_indecomposable(const Representation<F>& m) {
    if (m.is_zero()) return false;
    auto s = detail::find_splitting_endomorphism(m);
    if (s.outcome == detail::SearchOutcome::Undecided)
        fail(ErrorKind::Undecided, "could not decide indecomposability over " + m.field().name());
    return s.outcome == detail::SearchOutcome::Local;
}

/// Exact test for indecomposable X, Y: some composite X -> Y -> X lies outside rad End(X).
template <class F>
bool indecomposables_isomorphic(const Representation<F>& x, const Representation<F>& y) {
    require_same_algebra(x, y);
    if (!detail::same_dims(x, y)) return false;
    auto there = hom_basis(x, y);
    if (there.empty()) return false;
    for (const auto& f : there)
        if (f.is_isomorphism()) return true;
    auto back = hom_basis(y, x);
    for (const auto& f : there)
        for (const auto& g : back)
            if (!detail::endo_nilpotent(compose(f, g))) return true;
    return false;
}

/// Groups summands up to isomorphism. Pieces are ordered by total dimension
/// (largest first), then dimension vector, then discovery order.
template <class F>
std::vector<DecomposedPiece<F>> decompose(const Representation<F>& m) {
    std::vector<DecomposedPiece<F>> pieces;
    for (auto& s : indecomposable_summands(m)) {
        bool matched = false;
        for (auto& p : pieces)
            if (indecomposables_isomorphic(p.module, s.module)) {
                ++p.multiplicity;
                matched = true;
                break;
            }
        if (!matched) pieces.push_back({s.module, 1});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
        if (a.module.total_dim() != b.module.total_dim()) return a.module.total_dim() > b.module.total_dim();
        return a.module.dims() < b.module.dims();
    });
    return pieces;
}

/// Number of pairwise non-isomorphic indecomposable summands.
template <class F>
std::size_t basic_summand_count(const Representation<F>& m) {
    return decompose(m).size();
}

template <class F>
bool is_isomorphic(const Representation<F>& m, const Representation<F>& n) {
    require_same_algebra(m, n);
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    auto maps = hom_basis(m, n);
    if (maps.empty()) return false;
    const F& f = m.field();
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (std::size_t attempt = 0; attempt <= maps.size(); ++attempt) {
        std::vector<typename F::value_type> c;
        for (std::size_t i = 0; i < maps.size(); ++i) c.push_back(f.from_int(coeff(rng)));
        if (linear_combination(maps, c, m, n).is_isomorphism()) return true;
    }
    // Exact fallback: compare decompositions.
    auto a = decompose(m), b = decompose(n);
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& pa : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && pa.multiplicity == b[j].multiplicity && indecomposables_isomorphic(pa.module, b[j].module)) {
                used[j] = true;
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

/// Multiplicity of each candidate indecomposable as a summand of M.
template <class F>
std::vector<std::size_t> summand_matching(const Representation<F>& m, const std::vector<Representation<F>>& candidates) {
    std::vector<std::size_t> mult(candidates.size(), 0);
    for (const auto& piece : decompose(m)) {
        bool found = false;
        for (std::size_t i = 0; i < candidates.size() && !found; ++i)
            if (indecomposables_isomorphic(piece.module, candidates[i])) {
                mult[i] += piece.multiplicity;
                found = true;
            }
        if (!found) fail(ErrorKind::IncompleteCatalogue, "summand " + loewy_label(piece.module) + " matches no candidate");
    }
    return mult;
}

/// "3/4/5 ⊕ 4", with X^2 for repeated summands and "0" for the zero module.
template <class F>
std::string decomposition_label(const std::vector<DecomposedPiece<F>>& pieces) {
    if (pieces.empty()) return "0";
    std::vector<std::pair<std::size_t, std::string>> parts;
    for (const auto& p : pieces) {
        auto l = loewy_label(p.module);
        if (p.multiplicity > 1) {
            if (l.find_first_of("/ ") != std::string::npos) l = "(" + l + ")";
            l += "^" + std::to_string(p.multiplicity);
        }
        parts.emplace_back(p.module.total_dim(), l);
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::string out;
    for (const auto& [d, l] : parts) out += (out.empty() ? "" : " ⊕ ") + l;
    return out;
}

template <class F>
std::string decomposition_label(const Representation<F>& m) {
    return decomposition_label(decompose(m));
}

} // namespace tautilt
