// taucli: command-line frontend over the tautilt headers.
//
// Exit codes: 0 ok, 1 check failed, 2 hypothesis failed, 3 input error,
// 4 limit exceeded.

#include "tautilt/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace tautilt;
using io::json;
namespace fs = std::filesystem;

namespace {

enum Exit { Ok = 0, Failed = 1, Hypothesis = 2, Input = 3, Limit = 4 };

struct Options {
    std::string algebra, module, other, split, scenario, field, out, cache_dir, statement, complement, extra;
    std::size_t max_dim = CatalogueLimits{}.max_dim;
    std::size_t max_count = CatalogueLimits{}.max_count;
    bool max_dim_given = false, max_count_given = false;
    bool json = false;
};

struct Output {
    std::string text;
    json data;
    int code = Ok;
};

int exit_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::LimitExceeded:
    case ErrorKind::IncompleteCatalogue: return Limit;
    case ErrorKind::HypothesisFailed: return Hypothesis;
    case ErrorKind::CheckFailed:
    case ErrorKind::InternalInconsistency:
    case ErrorKind::Undecided: return Failed;
    default: return Input;
    }
}

int exit_for(Verdict v) {
    switch (v) {
    case Verdict::Verified: return Ok;
    case Verdict::CheckFailed: return Failed;
    case Verdict::HypothesisFailed: return Hypothesis;
    }
    return Failed;
}

const std::string& need(const std::string& value, const char* flag) {
    if (value.empty()) fail(ErrorKind::InvalidInput, std::string("missing ") + flag);
    return value;
}

fs::path parent_of(const std::string& path) { return fs::path(path).parent_path(); }

template <class F>
class Runner {
public:
    Runner(F field, const Options& opt) : field_(std::move(field)), opt_(opt) {}

    Output run(const std::vector<std::string>& cmd) {
        const auto& top = cmd.at(0);
        const std::string sub = cmd.size() > 1 ? cmd[1] : "";
        if (top == "algebra") return algebra_cmd(sub);
        if (top == "module") return module_cmd(sub);
        if (top == "catalogue") return catalogue_cmd(sub);
        if (top == "bongartz") return bongartz_cmd();
        if (top == "split") return split_cmd(sub);
        if (top == "scenario") return scenario_cmd(true);
        fail(ErrorKind::InvalidInput, "unknown command " + top);
    }

private:
    F field_;
    const Options& opt_;

    CatalogueLimits limits() const { return {opt_.max_dim, opt_.max_count}; }

    std::optional<fs::path> cache() const {
        if (opt_.cache_dir.empty()) return std::nullopt;
        return fs::path(opt_.cache_dir);
    }

    Algebra<F> load_algebra() const { return io::algebra_from_json(io::load_json_file(need(opt_.algebra, "--algebra")), field_); }

    Representation<F> load_module(const Algebra<F>& alg, const std::string& path, const char* flag) const {
        return io::module_from_json(io::load_json_file(need(path, flag)), alg);
    }

    SplitExtension<F> load_split(const std::string& path) const {
        return io::split_from_json(io::load_json_file(path), parent_of(path), field_);
    }

    static json module_summary(const Representation<F>& m) {
        return {{"label", decomposition_label(m)}, {"dimVector", m.dims()}, {"module", io::module_to_json(m)}};
    }

    static std::string module_line(const std::string& what, const Representation<F>& m) {
        return what + " = " + decomposition_label(m) + "  " + dim_vector_string(m) + "\n";
    }

    Output algebra_cmd(const std::string& sub) {
        auto alg = load_algebra();
        Output o;
        if (sub == "info") {
            o.data = io::algebra_to_json(alg);
            o.data["dimension"] = alg.dimension();
            o.data["nilpotencyBound"] = alg.nilpotency_bound();
            o.data["hash"] = io::algebra_hash(alg);
            o.text = "field " + alg.field().name() + "\nvertices " + std::to_string(alg.vertex_count()) + "\narrows " +
                     std::to_string(alg.arrow_count()) + "\nrelations " + std::to_string(alg.relations().size()) +
                     "\ndimension " + std::to_string(alg.dimension()) + "\n";
            return o;
        }
        o.data = json::array();
        for (std::size_t i = 0; i < alg.dimension(); ++i) {
            auto p = alg.basis_path(i);
            o.data.push_back({{"index", i}, {"path", alg.path_label(i)}, {"from", alg.quiver().vertex(p.source)},
                              {"to", alg.quiver().vertex(p.target)}});
            o.text += std::to_string(i) + "  " + alg.path_label(i) + "\n";
        }
        return o;
    }

    Output module_cmd(const std::string& sub) {
        auto alg = load_algebra();
        auto m = load_module(alg, opt_.module, "--module");
        Output o;
        if (sub == "tau" || sub == "tauinv") {
            auto t = sub == "tau" ? tau(m) : tau_inv(m);
            o.data = module_summary(t);
            o.text = module_line(sub == "tau" ? "tau M" : "tau^-1 M", t);
        } else if (sub == "hom" || sub == "ext") {
            auto n = load_module(alg, opt_.other, "--other");
            auto d = sub == "hom" ? hom_dim(m, n) : ext1_dim(m, n);
            o.data = {{sub, d}};
            o.text = std::string(sub == "hom" ? "dim Hom(M, N) = " : "dim Ext^1(M, N) = ") + std::to_string(d) + "\n";
        } else if (sub == "decompose") {
            o.data = json::array();
            for (const auto& p : decompose(m)) {
                o.data.push_back({{"label", decomposition_label(p.module)}, {"multiplicity", p.multiplicity},
                                  {"dimVector", p.module.dims()}});
                o.text += decomposition_label(p.module) + "  x" + std::to_string(p.multiplicity) + "  " +
                          dim_vector_string(p.module) + "\n";
            }
        } else {
            bool rigid = is_tau_rigid(m);
            bool tilting = rigid && is_tau_tilting(m);
            o.data = {{"tauRigid", rigid}, {"tauTilting", tilting}};
            o.text = std::string("tau-rigid ") + (rigid ? "yes" : "no") + "\ntau-tilting " + (tilting ? "yes" : "no") + "\n";
        }
        return o;
    }

    Output catalogue_cmd(const std::string& sub) {
        auto alg = load_algebra();
        auto cat = io::cached_catalogue(alg, limits(), cache());
        Output o;
        if (sub == "export-dot") {
            o.text = io::catalogue_to_dot(cat);
            o.data = o.text;
            return o;
        }
        o.data = io::catalogue_to_json(cat);
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const auto& it = cat.item(i);
            o.text += std::to_string(i) + "  " + it.label + "  " + dim_vector_string(it.module);
            if (it.projective) o.text += "  P";
            if (it.injective) o.text += "  I";
            if (it.tau) o.text += "  tau=" + std::to_string(*it.tau);
            o.text += "\n";
        }
        o.text += std::to_string(cat.size()) + " indecomposables\n";
        return o;
    }

    Output bongartz_cmd() {
        auto alg = load_algebra();
        auto m = load_module(alg, opt_.module, "--module");
        auto cat = io::cached_catalogue(alg, limits(), cache());
        auto b = bongartz_complement(m, cat);
        Output o;
        o.data = module_summary(b.module);
        o.text = decomposition_label(b.module) + "\n";
        return o;
    }

    Output split_cmd(const std::string& sub) {
        if (sub == "check") return scenario_cmd(false);
        auto s = load_split(need(opt_.split, "--split"));
        Output o;
        if (sub == "validate") {
            auto e = validate_split_extension(s);
            json ext = json::array();
            for (auto a : s.extension_arrows()) ext.push_back(s.big().quiver().arrow(a).name);
            o.data = {{"dimB", s.big().dimension()}, {"dimC", s.small().dimension()}, {"dimE", e}, {"extensionArrows", ext}};
            o.text = "dim B = " + std::to_string(s.big().dimension()) + "\ndim C = " + std::to_string(s.small().dimension()) +
                     "\ndim E = " + std::to_string(e) + "\n";
            return o;
        }
        if (sub == "restrict") {
            auto x = load_module(s.big(), opt_.module, "--module");
            auto r = restrict_to_C(s, x);
            o.data = module_summary(r);
            o.text = module_line("X_C", r);
            return o;
        }
        auto m = load_module(s.small(), opt_.module, "--module");
        if (sub == "induce") {
            auto r = induce(s, m);
            o.data = module_summary(r);
            o.text = module_line("M (x) B", r);
        } else {
            auto r = tensor_with_E(s, m).e_part;
            o.data = module_summary(r);
            o.text = module_line("M (x) E", r);
        }
        return o;
    }

    struct ScenarioRun {
        CheckReport report;
        std::optional<Catalogue<F>> cat_c, cat_b;
    };

    // Scenario from a file, or assembled from --split/--statement/--module.
    ScenarioRun run_scenario() {
        io::Scenario sc;
        fs::path base;
        if (!opt_.scenario.empty()) {
            base = parent_of(opt_.scenario);
            sc = io::scenario_from_json(io::load_json_file(opt_.scenario), base);
        } else {
            json j = {{"split", fs::absolute(need(opt_.split, "--split or --scenario")).string()},
                      {"statement", need(opt_.statement, "--statement")},
                      {"M", io::load_json_file(need(opt_.module, "--module"))}};
            if (!opt_.complement.empty()) j["U"] = io::load_json_file(opt_.complement);
            if (!opt_.extra.empty()) j["Y"] = io::load_json_file(opt_.extra);
            sc = io::scenario_from_json(j, base);
        }
        if (opt_.max_dim_given) sc.limits.max_dim = opt_.max_dim;
        if (opt_.max_count_given) sc.limits.max_count = opt_.max_count;
        auto s = load_split(sc.split_path.string());
        StatementInput<F> in{io::module_from_json(sc.m, s.small()), std::nullopt, std::nullopt};
        if (!(sc.u.is_string() && sc.u.get<std::string>() == "auto")) in.u = io::module_from_json(sc.u, s.small());
        if (!sc.y.is_null()) in.y = io::module_from_json(sc.y, s.small());
        ScenarioRun r;
        r.cat_c.emplace(io::cached_catalogue(s.small(), sc.limits, cache()));
        r.cat_b.emplace(io::cached_catalogue(s.big(), sc.limits, cache()));
        r.report = check_statement(sc.statement, s, in, *r.cat_c, *r.cat_b);
        return r;
    }

    Output scenario_cmd(bool artifacts) {
        auto r = run_scenario();
        Output o;
        o.data = io::report_to_json(r.report);
        o.text = io::report_to_text(r.report);
        o.code = exit_for(r.report.verdict);
        if (artifacts && !opt_.out.empty()) {
            fs::path dir(opt_.out);
            io::write_text_file(dir / "report.json", o.data.dump(2) + "\n");
            io::write_text_file(dir / "C.dot", io::catalogue_to_dot(*r.cat_c, "C"));
            io::write_text_file(dir / "B.dot", io::catalogue_to_dot(*r.cat_b, "B"));
        }
        return o;
    }
};

// Field from --field, else from the first JSON input that names one.
io::FieldSpec pick_field(const Options& opt) {
    if (!opt.field.empty()) return io::parse_field_flag(opt.field);
    if (!opt.algebra.empty()) return io::field_spec_from_json(io::load_json_file(opt.algebra));
    auto from_split = [](const std::string& path) {
        return io::split_field_spec(io::load_json_file(path), parent_of(path));
    };
    if (!opt.split.empty()) return from_split(opt.split);
    if (!opt.scenario.empty()) {
        auto j = io::load_json_file(opt.scenario);
        if (j.contains("split") && j.at("split").is_string())
            return from_split((parent_of(opt.scenario) / j.at("split").get<std::string>()).string());
    }
    return {};
}

void add_flags(CLI::App* app, Options& opt) {
    app->add_option("--algebra", opt.algebra, "algebra JSON");
    app->add_option("--module", opt.module, "module JSON");
    app->add_option("--other", opt.other, "second module for hom/ext");
    app->add_option("--split", opt.split, "split extension JSON");
    app->add_option("--scenario", opt.scenario, "scenario JSON");
    app->add_option("--statement", opt.statement, "statement id when no scenario file is given");
    app->add_option("--complement", opt.complement, "U module JSON (default: Bongartz complement)");
    app->add_option("--completion", opt.extra, "Y module JSON for PROP-ALMOST");
    app->add_option("--field", opt.field, "rationals or prime:<p>");
    app->add_option("--max-dim", opt.max_dim, "catalogue module dimension limit");
    app->add_option("--max-count", opt.max_count, "catalogue size limit");
    app->add_option("--cache-dir", opt.cache_dir, "directory for cached catalogues");
    app->add_option("--out", opt.out, "output file (artifact directory for scenario run)");
    app->add_flag("--json", opt.json, "machine-readable output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-tilting and split-extension toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::vector<std::string> cmd;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::vector<std::string> path) {
        auto* sub = parent->add_subcommand(name, help);
        add_flags(sub, opt);
        sub->callback([&cmd, path] { cmd = path; });
        return sub;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };

    auto* alg = group("algebra", "inspect an algebra");
    leaf(alg, "info", "summary and dimension", {"algebra", "info"});
    leaf(alg, "basis", "list the path basis", {"algebra", "basis"});
    auto* mod = group("module", "homological operations on one module");
    for (const char* s : {"tau", "tauinv", "hom", "ext", "decompose", "check-rigid"}) leaf(mod, s, s, {"module", s});
    auto* cat = group("catalogue", "indecomposables by knitting");
    leaf(cat, "build", "list or export the catalogue", {"catalogue", "build"});
    leaf(cat, "export-dot", "AR quiver as DOT", {"catalogue", "export-dot"});
    leaf(&app, "bongartz", "Bongartz complement of a tau-rigid module", {"bongartz"});
    auto* split = group("split", "split extensions B -> C");
    for (const char* s : {"validate", "induce", "restrict", "tensor-e", "check"}) leaf(split, s, s, {"split", s});
    auto* scen = group("scenario", "scenario files");
    leaf(scen, "run", "run a scenario and write artifacts", {"scenario", "run"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Input;
    }

    for (auto* s : app.get_subcommands())
        for (auto* leafcmd : s->get_subcommands()) {
            opt.max_dim_given = leafcmd->count("--max-dim") > 0;
            opt.max_count_given = leafcmd->count("--max-count") > 0;
        }
    for (auto* s : app.get_subcommands())
        if (s->get_name() == "bongartz") {
            opt.max_dim_given = s->count("--max-dim") > 0;
            opt.max_count_given = s->count("--max-count") > 0;
        }

    try {
        auto spec = pick_field(opt);
        Output out = spec.prime ? Runner<PrimeField>(PrimeField(spec.p), opt).run(cmd) : Runner<Rationals>(Rationals{}, opt).run(cmd);
        std::string text = opt.json ? out.data.dump(2) + "\n" : out.text;
        // for scenario run, --out is the artifact directory and the report still goes to stdout
        if (!opt.out.empty() && cmd.front() != "scenario")
            io::write_text_file(opt.out, text);
        else
            std::cout << text;
        return out.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Input;
    }
}
