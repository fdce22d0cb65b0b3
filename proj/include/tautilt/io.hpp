#pragma once

// JSON and DOT input/output: algebras, modules, split extensions, scenarios,
// catalogues (also the on-disk cache format) and check reports.

#include "tautilt/statements.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace tautilt::io {

using nlohmann::json;
namespace fs = std::filesystem;

inline json load_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidInput, path.string() + ": " + e.what());
    }
}

inline void write_text_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path.string());
    out << text;
}

namespace detail {

inline const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, where + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) fail(ErrorKind::InvalidInput, where + ": expected a string");
    return j.get<std::string>();
}

inline std::size_t as_count(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(ErrorKind::InvalidInput, where + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

template <class F>
typename F::value_type scalar(const F& f, const json& j, const std::string& where) {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    fail(ErrorKind::InvalidInput, where + ": scalars are integers or strings such as \"-3/4\"");
}

/// Resolves a value that is either inline JSON or a path relative to base.
inline json inline_or_file(const json& j, const fs::path& base) {
    if (j.is_string()) return load_json_file(base / j.get<std::string>());
    return j;
}

} // namespace detail

struct FieldSpec {
    bool prime = false;
    std::uint64_t p = 0;
};

inline FieldSpec field_spec_from_json(const json& j) {
    if (!j.contains("field")) return {};
    const auto& f = j.at("field");
    auto kind = detail::as_string(detail::require(f, "kind", "field"), "field.kind");
    if (kind == "rationals") return {};
    if (kind == "prime") {
        auto p = detail::as_count(detail::require(f, "p", "field"), "field.p");
        return {true, p};
    }
    fail(ErrorKind::InvalidInput, "field.kind must be \"rationals\" or \"prime\"");
}

/// "rationals", "prime:7" or "7".
inline FieldSpec parse_field_flag(const std::string& text) {
    if (text == "rationals" || text == "Q") return {};
    auto digits = text.rfind("prime:", 0) == 0 ? text.substr(6) : text;
    try {
        std::size_t used = 0;
        auto p = std::stoul(digits, &used);
        if (used == digits.size()) return {true, p};
    } catch (const std::exception&) {
    }
    fail(ErrorKind::InvalidInput, "--field must be \"rationals\" or \"prime:<p>\"");
}

template <class F>
Algebra<F> algebra_from_json(const json& j, F field) {
    const std::string where = "algebra";
    std::vector<std::string> vertices;
    for (const auto& v : detail::require(j, "vertices", where)) vertices.push_back(detail::as_string(v, "vertices"));
    std::vector<ArrowSpec> arrows;
    for (const auto& a : detail::require(j, "arrows", where))
        arrows.push_back({detail::as_string(detail::require(a, "name", "arrow"), "arrow.name"),
                          detail::as_string(detail::require(a, "from", "arrow"), "arrow.from"),
                          detail::as_string(detail::require(a, "to", "arrow"), "arrow.to")});
    std::vector<RelationSpec<F>> rels;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            RelationSpec<F> spec;
            for (const auto& t : r) {
                RelationTermSpec<F> term;
                const auto& c = detail::require(t, "coeff", "relation term");
                term.coeff = c.is_string() ? c.get<std::string>() : c.dump();
                for (const auto& a : detail::require(t, "path", "relation term")) term.path.push_back(detail::as_string(a, "path"));
                spec.push_back(std::move(term));
            }
            rels.push_back(std::move(spec));
        }
    return build_algebra<F>(vertices, arrows, rels, std::move(field));
}

template <class F>
json field_to_json(const F& f) {
    if (f.characteristic() == 0) return {{"kind", "rationals"}};
    return {{"kind", "prime"}, {"p", f.characteristic()}};
}

template <class F>
json algebra_to_json(const Algebra<F>& alg) {
    const auto& q = alg.quiver();
    json j;
    j["field"] = field_to_json(alg.field());
    j["vertices"] = json::array();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) j["vertices"].push_back(q.vertex(v));
    j["arrows"] = json::array();
    for (const auto& a : q.arrows()) j["arrows"].push_back({{"name", a.name}, {"from", q.vertex(a.source)}, {"to", q.vertex(a.target)}});
    j["relations"] = json::array();
    for (const auto& r : alg.relations()) {
        json rel = json::array();
        for (const auto& t : r) {
            json path = json::array();
            for (auto a : t.path) path.push_back(q.arrow(a).name);
            rel.push_back({{"coeff", alg.field().format(t.coeff)}, {"path", path}});
        }
        j["relations"].push_back(rel);
    }
    return j;
}

/// FNV-1a over the canonical JSON of the algebra.
template <class F>
std::string algebra_hash(const Algebra<F>& alg) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : algebra_to_json(alg).dump()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template <class F>
Representation<F> module_from_json(const json& j, const Algebra<F>& alg) {
    const auto& q = alg.quiver();
    if (!j.is_object()) fail(ErrorKind::InvalidInput, "module: expected an object");
    if (j.contains("interval")) return from_interval(alg, detail::as_string(j.at("interval"), "interval"));
    if (j.contains("standard")) {
        const auto& s = j.at("standard");
        auto kind = detail::as_string(detail::require(s, "kind", "standard"), "standard.kind");
        auto vname = detail::as_string(detail::require(s, "vertex", "standard"), "standard.vertex");
        auto v = q.find_vertex(vname);
        if (!v) fail(ErrorKind::InvalidInput, "standard: unknown vertex '" + vname + "'");
        if (kind == "projective") return standard_module(alg, StandardKind::Projective, *v);
        if (kind == "injective") return standard_module(alg, StandardKind::Injective, *v);
        if (kind == "simple") return standard_module(alg, StandardKind::Simple, *v);
        fail(ErrorKind::InvalidInput, "standard.kind must be projective, injective or simple");
    }
    if (j.contains("sum")) {
        std::vector<Representation<F>> parts;
        for (const auto& p : j.at("sum")) parts.push_back(module_from_json(p, alg));
        return direct_sum(alg, parts);
    }
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    for (const auto& [name, d] : detail::require(j, "dims", "module").items()) {
        auto v = q.find_vertex(name);
        if (!v) fail(ErrorKind::InvalidInput, "dims: unknown vertex '" + name + "'");
        dims[*v] = detail::as_count(d, "dims." + name);
    }
    std::vector<Matrix<F>> arrows;
    for (const auto& a : q.arrows()) arrows.emplace_back(alg.field(), dims[a.source], dims[a.target]);
    if (j.contains("matrices"))
        for (const auto& [name, rows] : j.at("matrices").items()) {
            auto a = q.find_arrow(name);
            if (!a) fail(ErrorKind::InvalidInput, "matrices: unknown arrow '" + name + "'");
            auto& m = arrows[*a];
            if (!rows.is_array() || rows.size() != m.rows())
                fail(ErrorKind::InvalidInput, "matrices." + name + ": expected " + std::to_string(m.rows()) + " rows");
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (!rows[r].is_array() || rows[r].size() != m.cols())
                    fail(ErrorKind::InvalidInput, "matrices." + name + ": expected " + std::to_string(m.cols()) + " columns");
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = detail::scalar(alg.field(), rows[r][c], "matrices." + name);
            }
        }
    return Representation<F>(alg, std::move(dims), std::move(arrows));
}

template <class F>
json module_to_json(const Representation<F>& m) {
    const auto& q = m.algebra().quiver();
    const auto& f = m.field();
    json j;
    j["dims"] = json::object();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) j["dims"][q.vertex(v)] = m.dim(v);
    j["matrices"] = json::object();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& mat = m.arrow(a);
        json rows = json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(f.format(mat(r, c)));
            rows.push_back(row);
        }
        j["matrices"][q.arrow(a).name] = rows;
    }
    return j;
}

template <class F>
SplitExtension<F> split_from_json(const json& j, const fs::path& base, const F& field) {
    auto b = algebra_from_json(detail::inline_or_file(detail::require(j, "B", "split"), base), field);
    auto c = algebra_from_json(detail::inline_or_file(detail::require(j, "C", "split"), base), field);
    std::map<std::string, std::string> vmap, amap;
    for (const auto& [k, v] : detail::require(j, "vertexMap", "split").items()) vmap[k] = detail::as_string(v, "vertexMap");
    for (const auto& [k, v] : detail::require(j, "arrowEmbed", "split").items()) amap[k] = detail::as_string(v, "arrowEmbed");
    std::vector<std::string> ext;
    for (const auto& a : detail::require(j, "extensionArrows", "split")) ext.push_back(detail::as_string(a, "extensionArrows"));
    auto s = make_split_extension(b, c, vmap, amap, ext);
    validate_split_extension(s);
    return s;
}

/// Field of a split-extension file, read from its C algebra.
inline FieldSpec split_field_spec(const json& j, const fs::path& base) {
    return field_spec_from_json(detail::inline_or_file(detail::require(j, "C", "split"), base));
}

struct Scenario {
    fs::path split_path;
    std::string statement;
    json m, u, y;  // u is "auto" or a module spec; y is null unless given
    CatalogueLimits limits;
};

inline Scenario scenario_from_json(const json& j, const fs::path& base) {
    Scenario s;
    s.split_path = base / detail::as_string(detail::require(j, "split", "scenario"), "scenario.split");
    s.statement = detail::as_string(detail::require(j, "statement", "scenario"), "scenario.statement");
    const auto& ids = statement_ids();
    if (std::find(ids.begin(), ids.end(), s.statement) == ids.end())
        fail(ErrorKind::InvalidInput, "unknown statement '" + s.statement + "'");
    s.m = detail::require(j, "M", "scenario");
    s.u = j.value("U", json("auto"));
    s.y = j.value("Y", json());
    if (j.contains("catalogue")) {
        const auto& c = j.at("catalogue");
        if (c.contains("maxDim")) s.limits.max_dim = detail::as_count(c.at("maxDim"), "catalogue.maxDim");
        if (c.contains("maxCount")) s.limits.max_count = detail::as_count(c.at("maxCount"), "catalogue.maxCount");
    }
    return s;
}

template <class F>
json catalogue_to_json(const Catalogue<F>& cat) {
    json j;
    j["algebraHash"] = algebra_hash(cat.algebra());
    j["items"] = json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& it = cat.item(i);
        json x;
        x["index"] = i;
        x["label"] = it.label;
        x["dimVector"] = it.module.dims();
        x["projective"] = it.projective;
        x["injective"] = it.injective;
        x["tau"] = it.tau ? json(*it.tau) : json();
        x["tauInverse"] = it.tau_inv ? json(*it.tau_inv) : json();
        x["module"] = module_to_json(it.module);
        j["items"].push_back(x);
    }
    j["meshes"] = json::array();
    for (const auto& m : cat.meshes()) {
        json mid = json::array();
        for (const auto& [k, mult] : m.middle) mid.push_back({{"item", k}, {"multiplicity", mult}});
        j["meshes"].push_back({{"start", m.start}, {"end", m.end}, {"middle", mid}});
    }
    j["irreducibleArrows"] = json::array();
    for (const auto& a : cat.irreducible_arrows())
        j["irreducibleArrows"].push_back({{"from", a.from}, {"to", a.to}, {"multiplicity", a.multiplicity}});
    return j;
}

/// Rebuilds a catalogue from its export; the algebra hash must match.
template <class F>
Catalogue<F> catalogue_from_json(const json& j, const Algebra<F>& alg) {
    if (detail::as_string(detail::require(j, "algebraHash", "catalogue"), "algebraHash") != algebra_hash(alg))
        fail(ErrorKind::InvalidInput, "catalogue was exported for a different algebra");
    auto opt = [](const json& x) -> std::optional<std::size_t> {
        if (x.is_null()) return std::nullopt;
        return x.get<std::size_t>();
    };
    std::vector<CatalogueItem<F>> items;
    for (const auto& x : detail::require(j, "items", "catalogue")) {
        CatalogueItem<F> it{module_from_json(x.at("module"), alg), x.at("label").get<std::string>(), x.at("projective").get<bool>(),
                            x.at("injective").get<bool>(), opt(x.at("tau")), opt(x.at("tauInverse"))};
        items.push_back(std::move(it));
    }
    std::vector<Mesh> meshes;
    for (const auto& m : j.at("meshes")) {
        Mesh mesh{m.at("end").get<std::size_t>(), m.at("start").get<std::size_t>(), {}};
        for (const auto& x : m.at("middle")) mesh.middle.emplace_back(x.at("item").get<std::size_t>(), x.at("multiplicity").get<std::size_t>());
        meshes.push_back(std::move(mesh));
    }
    std::vector<IrreducibleArrow> arrows;
    for (const auto& a : j.at("irreducibleArrows"))
        arrows.push_back({a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(), a.at("multiplicity").get<std::size_t>()});
    for (const auto& it : items)
        for (auto link : {it.tau, it.tau_inv})
            if (link && *link >= items.size()) fail(ErrorKind::InvalidInput, "catalogue tau link out of range");
    return Catalogue<F>(alg, std::move(items), std::move(meshes), std::move(arrows));
}

/// Builds the catalogue, or reuses an export in cache_dir keyed by the algebra hash.
template <class F>
Catalogue<F> cached_catalogue(const Algebra<F>& alg, CatalogueLimits limits, const std::optional<fs::path>& cache_dir) {
    if (!cache_dir) return build_catalogue(alg, limits);
    auto path = *cache_dir / ("catalogue-" + algebra_hash(alg) + ".json");
    if (fs::exists(path)) {
        try {
            return catalogue_from_json(load_json_file(path), alg);
        } catch (const Error&) {
            // stale or damaged cache entry: rebuild below
        }
    }
    auto cat = build_catalogue(alg, limits);
    write_text_file(path, catalogue_to_json(cat).dump(1) + "\n");
    return cat;
}

/// Nodes labeled by dimension vectors; solid edges are irreducible maps, dashed edges tau.
template <class F>
std::string catalogue_to_dot(const Catalogue<F>& cat, const std::string& name = "ar_quiver") {
    std::string out = "digraph " + name + " {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& it = cat.item(i);
        out += "  n" + std::to_string(i) + " [label=\"" + dim_vector_string(it.module) + "\\n" + it.label + "\"";
        if (it.projective) out += ", peripheries=2";
        out += "];\n";
    }
    for (const auto& a : cat.irreducible_arrows()) {
        out += "  n" + std::to_string(a.from) + " -> n" + std::to_string(a.to);
        if (a.multiplicity > 1) out += " [label=\"" + std::to_string(a.multiplicity) + "\"]";
        out += ";\n";
    }
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (auto t = cat.item(i).tau)
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(*t) + " [style=dashed, constraint=false];\n";
    out += "}\n";
    return out;
}

inline json facts_to_json(const std::vector<Fact>& facts) {
    json j = json::array();
    for (const auto& f : facts) j.push_back({{"name", f.name}, {"value", f.value}});
    return j;
}

inline json report_to_json(const CheckReport& r) {
    return {{"statement", r.statement},
            {"kind", r.kind == StatementKind::Equivalence ? "equivalence" : "implication"},
            {"hypotheses", facts_to_json(r.hypotheses)},
            {"left", {{"name", r.left_name}, {"value", r.left}}},
            {"right", {{"name", r.right_name}, {"value", r.right}}},
            {"subVerdicts", facts_to_json(r.sub_verdicts)},
            {"details", facts_to_json(r.details)},
            {"witnesses", r.witnesses},
            {"verdict", to_string(r.verdict)}};
}

inline std::string report_to_text(const CheckReport& r) {
    auto yes = [](bool b) { return b ? "true" : "false"; };
    std::string out = r.statement + ": " + to_string(r.verdict) + "\n";
    for (const auto& h : r.hypotheses) out += "  hypothesis  " + h.name + ": " + yes(h.value) + "\n";
    out += "  left   " + r.left_name + ": " + yes(r.left) + "\n";
    out += "  right  " + r.right_name + ": " + yes(r.right) + "\n";
    for (const auto& s : r.sub_verdicts) out += "  check  " + s.name + ": " + yes(s.value) + "\n";
    for (const auto& d : r.details) out += "  detail " + d.name + ": " + yes(d.value) + "\n";
    for (const auto& w : r.witnesses) out += "  " + w + "\n";
    return out;
}

} // namespace tautilt::io
