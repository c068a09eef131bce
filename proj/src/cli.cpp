#include "tropical/cli.hpp"

#include <glob.h>

#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include <CLI11.hpp>

#include "tropical/error.hpp"
#include "tropical/generators.hpp"
#include "tropical/report.hpp"
#include "tropical/xi.hpp"

namespace trop::cli {

namespace {

using report::ojson;
using json = nlohmann::json;

struct Options {
    std::string command;
    std::vector<std::string> args;
    std::string format = "text";
    std::string input;
    std::string glob;
    std::string method = "chain";
    std::string config;
    std::string laurent;
    std::string model;
    std::string t0 = "1/1000000";
    bool basis = false;
    std::uint64_t seed = 1;
    int cases = 50;
};

struct Outcome {
    std::string input;
    std::string digest;
    ojson result = ojson::object();
    std::string text;
    std::vector<std::string> warnings;
    int code = 0;
    std::string error_kind, error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {
        throw ValidationError("'" + path + "' is not valid JSON: " + ex.what());
    }
}

int max_dim(std::vector<std::string>& warnings) {
    const char* env = std::getenv("TROPCTL_MAX_DIM");
    if (!env) return 16;
    try {
        int v = std::stoi(env);
        if (v > 0) return v;
    } catch (const std::exception&) {
    }
    warnings.push_back(std::string("ignoring TROPCTL_MAX_DIM='") + env + "', using 16");
    return 16;
}

void check_dim(int n, std::vector<std::string>& warnings) {
    int cap = max_dim(warnings);
    if (n > cap)
        throw ValidationError("ambient dimension " + std::to_string(n) + " exceeds TROPCTL_MAX_DIM=" + std::to_string(cap));
}

// Collects the bytes of every file an invocation reads, for the digest.
struct Inputs {
    std::string bytes;
    std::string read(const std::string& path) {
        std::string s = read_file(path);
        bytes += s;
        bytes.push_back('\0');
        return s;
    }
};

TropicalCurve load_curve(Inputs& in, const std::string& path, Outcome& out) {
    if (path.empty()) throw ValidationError("a curve file is required");
    TropicalCurve c = parse_curve(parse_json(in.read(path), path));
    check_dim(c.dim(), out.warnings);
    return c;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---- subcommands ---------------------------------------------------------

void cmd_validate(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    const auto& g = c.graph();
    out.result = {{"valid", true},
                  {"ambient_dim", c.dim()},
                  {"vertices", g.num_vertices()},
                  {"edges", g.num_edges()},
                  {"immersive", is_immersive(c)},
                  {"embedded", is_embedded(c)}};
    out.text = "valid: " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
               " edges in dimension " + std::to_string(c.dim()) + "\n";
}

void cmd_info(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    const auto& g = c.graph();
    EulerCounts ec = euler_counts(g);
    DegreeMap deg = degree(c);
    AssumptionReport a = check_assumption_a(c);
    ojson degree_list = ojson::array();
    std::string degree_text;
    for (const auto& [w, m] : deg.multiplicity) {
        degree_list.push_back({{"vector", w}, {"multiplicity", m}});
        degree_text += " " + report::vec_text(w) + (m > 1 ? "x" + std::to_string(m) : "");
    }
    out.result["genus"] = genus(g);
    out.result["vertices"] = ec.V;
    out.result["bounded_edges"] = ec.e_inn;
    out.result["e"] = deg.e;
    out.result["degree"] = degree_list;
    out.result["expected_dim"] = expected_dim(c);
    out.result["immersive"] = is_immersive(c);
    out.result["embedded"] = is_embedded(c);
    out.result["trivalent"] = g.is_trivalent();
    out.result["deformable"] = {{"verdict", to_string(a.deformable)}, {"reason", a.reason}};
    std::ostringstream s;
    s << "genus: " << genus(g) << "\n"
      << "vertices: " << ec.V << "\n"
      << "bounded edges: " << ec.e_inn << "\n"
      << "e: " << deg.e << "\n"
      << "degree:" << degree_text << "\n"
      << "expected dim: " << expected_dim(c) << "\n"
      << "immersive: " << yes(is_immersive(c)) << "\n"
      << "embedded: " << yes(is_embedded(c)) << "\n"
      << "3-valent: " << yes(g.is_trivalent()) << "\n"
      << "deformable: " << to_string(a.deformable) << " (" << a.reason << ")\n";
    out.text = s.str();
}

// chain method on the type of c; marks the report when c is not immersive
ObstructionReport chain_report(const TropicalCurve& c, Outcome& out) {
    ObstructionReport r = dual_obstruction_chain(combinatorial_type(c));
    if (!is_immersive(c)) {
        r.typeLevel = true;
        out.warnings.push_back("input is not immersive; H is computed for its combinatorial type");
    }
    return r;
}

void cmd_obstruction(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    if (o.method == "chain") {
        if (!o.config.empty()) out.warnings.push_back("--config is ignored by the chain method");
        ObstructionReport r = chain_report(c, out);
        out.result = report::obstruction_json(r, c.graph(), c.dim(), true);
        out.text = report::obstruction_text(r, c.graph(), c.dim(), o.basis);
        return;
    }
    Configuration cfg;
    if (!o.config.empty()) cfg = parse_configuration(parse_json(in.read(o.config), o.config));
    ObstructionReport r = xi_map(c, cfg);
    ImageGraph img = contract_image(c);
    if (r.typeLevel) out.warnings.push_back("input is not immersive; H is computed on its image");
    out.result = report::obstruction_json(r, img.curve.graph(), c.dim(), true);
    out.text = report::obstruction_text(r, img.curve.graph(), c.dim(), o.basis);
}

void cmd_classify(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    ObstructionReport r = chain_report(c, out);
    out.result["dimH"] = r.dimH;
    out.result["def1"] = r.superabundantDef1;
    std::string verdict = r.superabundantDef1 ? "superabundant" : "regular";
    if (is_embedded(c)) {
        AbundancyResult a = reduced_abundancy_map(c);
        bool def2 = !a.surjective;
        out.result["def2"] = def2;
        out.result["agree"] = def2 == r.superabundantDef1;
        verdict += def2 == r.superabundantDef1 ? " (def-1 and def-2 agree)" : " (def-1 and def-2 disagree)";
    } else {
        out.result["def2"] = nullptr;
        out.warnings.push_back("def-2 needs an embedded curve; only def-1 was decided");
        verdict += " (def-1 only)";
    }
    out.result["verdict"] = verdict;
    out.text = verdict + "\n";
}

ojson abundancy_json(const AbundancyResult& a) {
    return {{"rank", a.rank},
            {"target_dim", a.target_dim},
            {"surjective", a.surjective},
            {"domain_edges", a.domain_edges},
            {"cut_edges", a.cut_edges}};
}

void cmd_abundancy(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    AbundancyResult full = abundancy_map(c), red = reduced_abundancy_map(c);
    long long g = genus(c.graph());
    out.result["genus"] = g;
    out.result["full"] = abundancy_json(full);
    out.result["reduced"] = abundancy_json(red);
    out.result["rank_identity"] = full.rank == red.rank + static_cast<std::size_t>(g);
    std::ostringstream s;
    s << "full map: rank " << full.rank << " of " << full.target_dim << (full.surjective ? ", surjective" : "") << "\n"
      << "reduced map: rank " << red.rank << " of " << red.target_dim << (red.surjective ? ", surjective" : "") << "\n"
      << "cut edges:";
    for (const auto& e : red.cut_edges) s << " " << e;
    s << "\n";
    out.text = s.str();
}

void cmd_phylo(const Options& o, Inputs& in, Outcome& out) {
    if (o.laurent.empty()) throw ValidationError("phylo needs --laurent FILE");
    json doc = parse_json(in.read(o.laurent), o.laurent);
    if (doc.is_object() && doc.contains("series")) {
        LaurentData d = parse_laurent_data(json{{"vertices", {{"list", doc}}}});
        std::vector<LaurentSeries> p;
        for (const auto& s : d["list"].series) {
            if (!s) throw ValidationError("a plain series list cannot contain infinity");
            p.push_back(*s);
        }
        PhyloTree t = phylo_tree(p);
        out.result["tree"] = report::tree_json(t);
        out.text = "tree: " + report::tree_text(t) + "\n";
        return;
    }
    TropicalCurve c = load_curve(in, o.input, out);
    ImageGraph img = contract_image(c);
    LaurentData data;
    for (const auto& [key, vs] : parse_laurent_data(doc)) {
        auto v = c.graph().find_vertex(key);
        if (!v) throw ValidationError("Laurent data for unknown vertex '" + key + "'");
        data[img.curve.graph().vertex_id(img.image_of[*v])] = vs;
    }
    ojson vs = ojson::object();
    for (const auto& [vid, ch] : phylo_choices(img.curve, data)) {
        vs[vid] = {{"root_edge", ch.root_edge}, {"leaf_edges", ch.leaf_edges}, {"tree", report::tree_json(ch.tree)}};
        out.text += vid + ": root " + ch.root_edge + ", tree " + report::tree_text(ch.tree) + " over";
        for (const auto& e : ch.leaf_edges) out.text += " " + e;
        out.text += "\n";
    }
    out.result["vertices"] = vs;
}

LocalVertexModel parse_model(const json& doc) {
    try {
        LocalVertexModel m;
        m.r = doc.at("r").get<int>();
        m.n = doc.at("n").get<int>();
        for (const auto& t : doc.at("theta")) m.theta.push_back({t.value("weight", 1LL), t.at("direction").get<IntVec>()});
        m.bounded = doc.at("bounded").get<std::vector<bool>>();
        for (const auto& x : doc.at("coords"))
            m.coords.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
        m.validate();
        return m;
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("schema violation: ") + ex.what());
    }
}

void cmd_local_model(const Options& o, Inputs& in, Outcome& out) {
    if (o.model.empty()) throw ValidationError("local-model needs --model FILE");
    LocalVertexModel m = parse_model(parse_json(in.read(o.model), o.model));
    check_dim(m.n, out.warnings);
    int s = 0;
    for (bool b : m.bounded) s += b;
    LocalSystem sys = a_system(m);
    long long formula = local_dimension_formula(m.r, m.n, s);
    out.result = {{"r", m.r}, {"n", m.n}, {"s", s}, {"dim", sys.space.dim()}, {"formula", formula},
                  {"matches", static_cast<long long>(sys.space.dim()) == formula}};
    out.text = "residue space: dim " + std::to_string(sys.space.dim()) + " (formula " + std::to_string(formula) +
               ", r = " + std::to_string(m.r) + ", n = " + std::to_string(m.n) + ", s = " + std::to_string(s) + ")\n";
}

void cmd_genus1(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    Genus1Verdict v = genus1_loop_criterion(c);
    out.result = {{"spans", v.spans}, {"spanDim", v.spanDim}, {"guaranteedDimH", v.guaranteedDimH}, {"verdict", v.verdict}};
    out.text = "spans: " + yes(v.spans) + "\nspan dim: " + std::to_string(v.spanDim) +
               "\nguaranteed dimH: " + std::to_string(v.guaranteedDimH) + "\n" + v.verdict + "\n";
}

void cmd_compare(const Options& o, Inputs& in, Outcome& out) {
    TropicalCurve c = load_curve(in, o.input, out);
    if (o.laurent.empty()) throw ValidationError("compare needs --laurent FILE");
    LaurentData data = parse_laurent_data(parse_json(in.read(o.laurent), o.laurent));
    DegenerationReport r = degeneration_compare(c, data, parse_rational(o.t0));
    ojson hist = ojson::array();
    for (const auto& [t, d] : r.history) hist.push_back({{"t", to_string(t)}, {"d", d}});
    ojson vs = ojson::array();
    for (const auto& v : r.vertices)
        vs.push_back({{"vertex", v.vertex}, {"tree", report::tree_json(v.tree)}, {"leaf_edges", v.leaf_edges},
                      {"root_edge", v.root_edge}, {"aDim", v.aDim}, {"treeDim", v.treeDim}});
    out.result = {{"d", r.d}, {"d0", r.d0}, {"semicontinuous", r.semicontinuous}, {"stable", r.stable},
                  {"t", to_string(r.t)}, {"history", hist}, {"vertices", vs}};
    if (!r.stable) out.warnings.push_back("d did not stabilize within the t0 shrink budget");
    std::ostringstream s;
    s << "d: " << r.d << "\nd0: " << r.d0 << "\nd <= d0: " << yes(r.semicontinuous) << "\nstable: " << yes(r.stable)
      << " (last t = " << to_string(r.t) << ")\n";
    for (const auto& v : r.vertices)
        s << v.vertex << ": tree " << report::tree_text(v.tree) << ", local dims " << v.aDim << " vs " << v.treeDim << "\n";
    out.text = s.str();
}

// Quick randomized property checks, reproducible from the seed.
void cmd_selftest(const Options& o, Outcome& out) {
    Rng rng(o.seed);
    std::map<std::string, std::pair<int, int>> tally;  // name -> (passed, run)
    auto record = [&](const std::string& name, bool ok) {
        auto& t = tally[name];
        t.first += ok;
        t.second += 1;
    };
    for (int k = 0; k < o.cases; ++k) {
        CurveOptions opt;
        opt.n = 3 + k % 2;
        opt.genus = k % 3;
        TropicalCurve c = random_curve(rng, opt);
        ObstructionReport chain = dual_obstruction_chain(combinatorial_type(c));
        ObstructionReport xi = xi_map(c, {});
        record("xi equals chain", chain.space == xi.space);
        AbundancyResult full = abundancy_map(c), red = reduced_abundancy_map(c);
        long long g = genus(c.graph());
        record("abundancy identity", chain.dimH == (c.dim() - 1) * g - static_cast<long long>(red.rank) &&
                                         full.rank == red.rank + static_cast<std::size_t>(g));
        auto p = random_laurent_tuple(rng, 3 + k % 4);
        auto base = phylo_tree(p).clusters();
        bool inv = true;
        for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
            auto rb = rebase(p, i);
            std::vector<LaurentSeries> vals;
            for (const auto& x : rb) vals.push_back(x.value);
            auto cl = phylo_tree(vals).clusters();
            for (auto& cluster : cl) {
                for (auto& label : cluster) label = rb[label - 1].index;
                std::sort(cluster.begin(), cluster.end());
            }
            std::sort(cl.begin(), cl.end());
            inv = inv && cl == base;
        }
        record("rebase invariance", inv);
    }
    bool all = true;
    ojson checks = ojson::array();
    for (const auto& [name, t] : tally) {
        checks.push_back({{"check", name}, {"passed", t.first}, {"run", t.second}});
        out.text += name + ": " + std::to_string(t.first) + "/" + std::to_string(t.second) + "\n";
        all = all && t.first == t.second;
    }
    out.result = {{"seed", o.seed}, {"cases", o.cases}, {"checks", checks}, {"passed", all}};
    if (!all) out.code = 1;
}

Outcome execute(const Options& o, const std::string& input) {
    Outcome out;
    out.input = input;
    Options local = o;
    local.input = input;
    Inputs in;
    try {
        const std::string& c = o.command;
        if (c == "validate") cmd_validate(local, in, out);
        else if (c == "info") cmd_info(local, in, out);
        else if (c == "obstruction") cmd_obstruction(local, in, out);
        else if (c == "classify") cmd_classify(local, in, out);
        else if (c == "abundancy") cmd_abundancy(local, in, out);
        else if (c == "phylo") cmd_phylo(local, in, out);
        else if (c == "local-model") cmd_local_model(local, in, out);
        else if (c == "genus1-check") cmd_genus1(local, in, out);
        else if (c == "compare") cmd_compare(local, in, out);
        else if (c == "selftest") cmd_selftest(local, out);
    } catch (const ValidationError& ex) {
        out.code = 2, out.error_kind = "validation", out.error = ex.what();
    } catch (const PreconditionError& ex) {
        out.code = 3, out.error_kind = "precondition", out.error = ex.what();
    }
    out.digest = report::sha256_hex(in.bytes);
    return out;
}

ojson to_json(const Options& o, const Outcome& out) {
    ojson j;
    j["schema"] = report::kSchema;
    j["command"] = o.args;
    j["input"] = out.input.empty() ? ojson(nullptr) : ojson(out.input);
    j["input_digest"] = "sha256:" + out.digest;
    if (out.code == 2 || out.code == 3) j["error"] = {{"kind", out.error_kind}, {"message", out.error}};
    else j["result"] = out.result;
    j["warnings"] = out.warnings;
    return j;
}

std::vector<std::string> expand_glob(const std::string& pattern) {
    glob_t g{};
    int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
    std::vector<std::string> paths;
    if (rc == 0)
        for (std::size_t i = 0; i < g.gl_pathc; ++i) paths.emplace_back(g.gl_pathv[i]);
    globfree(&g);
    return paths;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    o.args = args;
    CLI::App app{"tropctl: superabundancy and dual obstruction spaces of tropical curves"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* s, bool curve) {
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        if (curve) {
            s->add_option("curve", o.input, "curve file (JSON)");
            s->add_option("--glob", o.glob, "process every file matching the pattern");
        }
        return s;
    };
    common(app.add_subcommand("validate", "check a curve file"), true);
    common(app.add_subcommand("info", "genus, degree, e and expected dimension"), true);
    auto* ob = common(app.add_subcommand("obstruction", "dual obstruction space H"), true);
    ob->add_option("--method", o.method)->check(CLI::IsMember({"chain", "xi"}));
    ob->add_option("--config", o.config, "marked-point coordinates for higher-valent vertices");
    ob->add_flag("--basis", o.basis, "print the basis in text mode");
    common(app.add_subcommand("classify", "superabundancy under both definitions"), true);
    common(app.add_subcommand("abundancy", "rank of the abundancy maps"), true);
    auto* ph = common(app.add_subcommand("phylo", "tree from ordered Laurent data"), true);
    ph->add_option("--laurent", o.laurent)->required();
    auto* lm = common(app.add_subcommand("local-model", "residue space of one higher-valent vertex"), false);
    lm->add_option("--model", o.model)->required();
    common(app.add_subcommand("genus1-check", "loop-direction criterion for genus one"), true);
    auto* cmp = common(app.add_subcommand("compare", "compare a degeneration with its resolved type"), true);
    cmp->add_option("--laurent", o.laurent)->required();
    cmp->add_option("--t0", o.t0, "starting t, a rational in (0,1)");
    auto* st = common(app.add_subcommand("selftest", "randomized property checks"), false);
    st->add_option("--seed", o.seed);
    st->add_option("--cases", o.cases)->check(CLI::PositiveNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "tropctl: " << ex.what() << "\n\n" << app.help();
        return 64;
    }
    o.command = app.get_subcommands().front()->get_name();

    std::vector<std::string> inputs;
    if (!o.glob.empty()) {
        inputs = expand_glob(o.glob);
        if (inputs.empty()) {
            err << "tropctl: no file matches '" << o.glob << "'\n";
            return 2;
        }
    } else {
        inputs.push_back(o.input);
    }

    std::vector<std::future<Outcome>> jobs;
    for (const auto& path : inputs) jobs.push_back(std::async(std::launch::async, execute, std::cref(o), path));
    std::vector<Outcome> results;
    for (auto& j : jobs) results.push_back(j.get());

    int code = 0;
    for (const auto& r : results) code = std::max(code, r.code);
    if (o.format == "json") {
        if (o.glob.empty()) {
            out << to_json(o, results[0]).dump(2) << "\n";
        } else {
            ojson all = ojson::array();
            for (const auto& r : results) all.push_back(to_json(o, r));
            out << all.dump(2) << "\n";
        }
        for (const auto& r : results)
            if (!r.error.empty()) err << "tropctl: " << r.error << "\n";
        return code;
    }
    for (const auto& r : results) {
        if (!o.glob.empty()) out << "== " << r.input << " ==\n";
        if (!r.error.empty()) err << "tropctl: " << (r.input.empty() ? "" : r.input + ": ") << r.error << "\n";
        else out << r.text;
        for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    }
    return code;
}

}  // namespace trop::cli
