#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "blockerlab/blockerlab.hpp"

using namespace blockerlab;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;

struct Options {
    int threads = 1;
    std::uint64_t seed = 0;
    std::string graph_path;
    std::string instance_path;
    std::string report_path;
    std::string kind = "alpha";
    std::string cls = "auto";
    std::string op = "contract";
    std::string param = "alpha";
    std::string mode = "deficiency";
    std::string reduction;
    std::string out_path;
    std::string out_dir;
    int k = 0;
    int d = 1;
    int h = 2;
    int n = 5;
    int count = 0;
    int max_edges = -1;
    bool json_out = false;
};

std::uint64_t oracle_budget() {
    const char* env = std::getenv("BLOCKERLAB_BUDGET");
    if (!env || !*env) return 10'000'000;
    try {
        std::size_t used = 0;
        auto v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0) throw std::invalid_argument("budget");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput(std::string("BLOCKERLAB_BUDGET must be a positive integer, got '") + env + "'");
    }
}

Graph read_input_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    return load_graph(path);
}

class Stopwatch {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const RunReport& r) { std::cout << r.to_json().dump(2) << "\n"; }

int run_param(const Options& o) {
    Stopwatch clock;
    Graph g = read_input_graph(o.graph_path);
    auto kind = parse_param(o.kind);
    GraphClass used = GraphClass::general;
    auto value = compute_parameter(g, kind, parse_graph_class(o.cls), &used);
    RunReport r;
    r.subcommand = "param";
    r.input_digest = graph_digest(g);
    r.answer = "value";
    r.witness = parameter_witness(value);
    r.details = {{"kind", to_string(kind)}, {"class", to_string(used)}, {"value", value.value}};
    r.wall_time_ms = clock.ms();
    emit(r);
    return kExitYes;
}

int run_cotree(const Options& o) {
    Stopwatch clock;
    Graph g = read_input_graph(o.graph_path);
    auto t = build_cotree(g);
    if (!o.json_out) {
        std::cout << cotree_sexpr(t) << "\n";
        return kExitYes;
    }
    auto stats = node_stats(t);
    RunReport r;
    r.subcommand = "cotree";
    r.input_digest = graph_digest(g);
    r.answer = "value";
    r.details = {{"cotree", cotree_sexpr(t)}, {"chi", stats.chi[static_cast<std::size_t>(t.root)]}};
    r.wall_time_ms = clock.ms();
    emit(r);
    return kExitYes;
}

RunReport blocker_report(const std::string& sub, const Graph& g, Operation op, Param p, int k, int d) {
    RunReport r;
    r.subcommand = sub;
    r.input_digest = graph_digest(g);
    r.details = {{"operation", to_string(op)}, {"parameter", to_string(p)}, {"k", k}, {"d", d}};
    return r;
}

void fill_answer(RunReport& r, Param p, bool yes, const EdgeSet& edges, const VertexSet& vertices, bool edge_op, int before,
                 std::optional<int> after) {
    r.answer = yes ? "yes" : "no";
    r.before = before;
    if (after) r.after = *after;
    r.details[to_string(p) + "_before"] = before;
    r.details[to_string(p) + "_after"] = after ? json(*after) : json(nullptr);
    if (yes) {
        if (edge_op) {
            r.witness["edges"] = edges_to_json(edges);
            r.details["witness_edges"] = edges_to_json(edges);
        } else {
            r.witness["vertices"] = vertices;
            r.details["witness_vertices"] = vertices;
        }
    }
}

int run_blocker(const Options& o, const std::string& sub) {
    Stopwatch clock;
    Graph g = read_input_graph(o.graph_path);
    auto op = parse_operation(o.op);
    auto p = parse_param(o.param);
    require_blocker_param(p);
    if (o.k < 0) throw InvalidInput("k must be non-negative");
    if (o.d < 1) throw InvalidInput("d must be at least 1");
    RunReport r = blocker_report(sub, g, op, p, o.k, o.d);
    auto cls = sub == "oracle" ? GraphClass::general : parse_graph_class(o.cls);

    auto detect = [&](GraphClass want) {
        if (cls == want) return true;
        if (cls != GraphClass::automatic) return false;
        return want == GraphClass::bipartite ? as_bipartite(g).has_value() && is_connected(g) && g.order() > 0
                                             : g.order() > 0 && in_class(recognize_cograph(g));
    };
    const bool bipartite_route = op == Operation::contract && p == Param::alpha && detect(GraphClass::bipartite);
    const bool cograph_route = op == Operation::delete_edges && p == Param::chi && detect(GraphClass::cograph);
    if (cls == GraphClass::bipartite && !bipartite_route) throw InvalidInput("the bipartite algorithm handles contraction with alpha only");
    if (cls == GraphClass::cograph && !cograph_route) throw InvalidInput("the cograph algorithm handles edge deletion with chi only");
    if (cls == GraphClass::chordal) throw InvalidInput("no chordal blocker algorithm; use --class general");

    if (bipartite_route) {
        auto res = solve_bipartite_contraction_blocker(g, o.k, o.d, o.threads, oracle_budget());
        r.details["method"] = "bipartite";
        r.details["route"] = to_string(res.route);
        std::optional<int> after;
        if (res.yes) after = res.witness.claimed_alpha_after;
        fill_answer(r, p, res.yes, res.witness.edges, {}, true, res.alpha_before, after);
    } else if (cograph_route) {
        auto t = build_cotree(g);
        const int chi = node_stats(t).chi[static_cast<std::size_t>(t.root)];
        r.details["method"] = "cograph-colouring";
        if (o.d >= chi) {
            fill_answer(r, p, false, {}, {}, true, chi, std::nullopt);
        } else {
            auto sol = min_mono_edges_deficiency(t, o.d);
            const bool yes = sol.count <= o.k;
            auto edges = monochromatic_edges(g, sol.colouring);
            std::optional<int> after;
            if (yes) {
                try {
                    after = parameter_value(delete_edges(g, edges), Param::chi);
                } catch (const CapacityExceeded&) {
                    r.details["chi_after_upper_bound"] = chi - o.d;
                }
            }
            r.details["min_mono_edges"] = sol.count;
            fill_answer(r, p, yes, edges, {}, true, chi, after);
        }
    } else {
        auto ans = brute_blocker({g, op, p, o.k, o.d}, oracle_budget(), o.threads);
        r.details["method"] = "exhaustive";
        r.details["minimal"] = ans.minimal;
        std::optional<int> after;
        if (ans.yes) after = ans.after;
        fill_answer(r, p, ans.yes, ans.edges, ans.vertices, acts_on_edges(op), ans.before, after);
    }
    r.wall_time_ms = clock.ms();
    emit(r);
    return r.answer == "yes" ? kExitYes : kExitNo;
}

int run_mono(const Options& o) {
    Stopwatch clock;
    Graph g = read_input_graph(o.graph_path);
    auto t = build_cotree(g);
    const int chi = node_stats(t).chi[static_cast<std::size_t>(t.root)];
    MonoSolution sol;
    int colours = 0;
    if (o.mode == "fixed-h") {
        colours = o.h;
        sol = min_mono_edges_fixed_h(t, o.h);
    } else if (o.mode == "deficiency") {
        colours = chi - o.d;
        sol = min_mono_edges_deficiency(t, o.d);
    } else {
        throw InvalidInput("mode must be fixed-h or deficiency");
    }
    RunReport r;
    r.subcommand = "mono";
    r.input_digest = graph_digest(g);
    r.witness["colouring"] = sol.colouring.colour;
    r.details = {{"mode", o.mode},
                 {"colours", colours},
                 {"chi", chi},
                 {"min_mono_edges", sol.count},
                 {"colouring", sol.colouring.colour},
                 {"deleted_edges", edges_to_json(monochromatic_edges(g, sol.colouring))}};
    if (o.mode == "deficiency") r.details["d"] = o.d;
    r.before = chi;
    r.after = std::min(chi, colours);
    int code = kExitYes;
    if (o.max_edges >= 0) {
        r.answer = sol.count <= o.max_edges ? "yes" : "no";
        r.details["max_edges"] = o.max_edges;
        code = sol.count <= o.max_edges ? kExitYes : kExitNo;
    } else {
        r.answer = "value";
    }
    r.wall_time_ms = clock.ms();
    emit(r);
    return code;
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << format_graph(g);
}

int run_reduce(const Options& o) {
    Stopwatch clock;
    json j;
    j["schema"] = kReportSchema;
    j["subcommand"] = "reduce";
    j["reduction"] = o.reduction;
    Graph out;
    if (o.reduction == "vc2cb") {
        Graph g = read_input_graph(o.instance_path);
        auto gm = build_vc_gadget(g);
        out = gm.graph;
        j["input_digest"] = graph_digest(g);
        j["gadget"] = {{"w", gm.w}, {"original_order", gm.original_order}};
        j["blocker"] = {{"operation", "contract"}, {"parameter", "omega"}, {"k", o.k}, {"d", 1}};
    } else if (o.reduction == "sat2chordal") {
        auto sat = load_sat(o.instance_path);
        auto gm = build_chordal_gadget(sat);
        out = gm.graph;
        j["input_digest"] = text_digest(format_sat(gm.sat));
        json vars = json::array();
        for (int x = 0; x < gm.sat.variables; ++x)
            vars.push_back({{"v_x", gm.v_x[static_cast<std::size_t>(x)]}, {"K_x", gm.k_x[static_cast<std::size_t>(x)]}});
        j["gadget"] = {{"variables", vars}, {"clause_vertices", gm.v_c}, {"K_C", gm.v_c}};
        j["blocker"] = {{"operation", "contract or delete-vertices"}, {"parameter", "alpha"}, {"k", gm.sat.k}, {"d", 1}};
    } else if (o.reduction == "mss2mono") {
        auto mss = load_mss(o.instance_path);
        auto gm = build_mss_gadget(mss);
        out = gm.graph;
        j["input_digest"] = text_digest(format_mss(mss));
        j["gadget"] = {{"parts", gm.parts}};
        j["mono"] = {{"colours", mss.h},
                     {"twice_target", gm.twice_target},
                     {"target", std::to_string(gm.twice_target) + "/2"},
                     {"max_edges", gm.budget}};
    } else {
        throw InvalidInput("reduction must be vc2cb, sat2chordal or mss2mono");
    }
    j["answer"] = "value";
    j["witness"] = json::object();
    j["before"] = nullptr;
    j["after"] = nullptr;
    j["graph_digest"] = graph_digest(out);
    j["graph"] = format_graph(out);
    if (!o.out_path.empty()) write_graph_file(o.out_path, out);
    j["wall_time_ms"] = clock.ms();
    std::cout << j.dump(2) << "\n";
    return kExitYes;
}

int run_catalogue(const Options& o) {
    auto cls = parse_catalogue_class(o.cls == "auto" ? "all" : o.cls);
    std::vector<Graph> graphs;
    if (o.count > 0)
        graphs = random_catalogue(cls, o.n, o.count, o.seed);
    else
        graphs = graph_catalogue(cls, o.n);
    if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (o.out_dir.empty()) {
            std::cout << "# graph " << i << "\n" << format_graph(graphs[i]);
        } else {
            std::ostringstream name;
            name << to_string(cls) << "_n" << graphs[i].order() << "_" << i << ".graph";
            write_graph_file((std::filesystem::path(o.out_dir) / name.str()).string(), graphs[i]);
        }
    }
    std::cerr << graphs.size() << " graphs\n";
    return kExitYes;
}

int run_verify(const Options& o) {
    std::ifstream in(o.report_path);
    if (!in) throw InvalidInput("cannot open " + o.report_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("report is not valid JSON: ") + e.what());
    }
    Graph g = read_input_graph(o.graph_path);
    auto res = verify_report(j, g);
    json out = {{"verified", res.ok}, {"problems", res.problems}};
    std::cout << out.dump(2) << "\n";
    return res.ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blocker problems: exact solvers, oracles and reduction gadgets"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for subset enumeration")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "Seed for random generation");

    auto* param = app.add_subcommand("param", "Compute alpha, omega, chi, mu or tau with a witness");
    param->add_option("--kind", o.kind, "alpha|omega|chi|mu|tau");
    param->add_option("--class", o.cls, "auto|general|bipartite|chordal|cograph");
    param->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();

    auto* cotree = app.add_subcommand("cotree", "Print the cotree of a cograph");
    cotree->add_flag("--json", o.json_out, "Emit a JSON report instead of the s-expression");
    cotree->add_option("graph", o.graph_path, "Graph file")->required();

    auto add_blocker_options = [&](CLI::App* sub, bool with_class) {
        sub->add_option("--op", o.op, "contract|delete-vertices|delete-edges");
        sub->add_option("--param", o.param, "alpha|omega|chi");
        if (with_class) sub->add_option("--class", o.cls, "auto|general|bipartite|cograph");
        sub->add_option("-k", o.k, "Budget of operations")->required();
        sub->add_option("-d", o.d, "Required decrease")->required();
        sub->add_option("graph", o.graph_path, "Graph file")->required();
    };
    auto* blocker = app.add_subcommand("blocker", "Decide a blocker problem with the best available algorithm");
    add_blocker_options(blocker, true);
    auto* oracle = app.add_subcommand("oracle", "Decide a blocker problem by exhaustive search");
    add_blocker_options(oracle, false);

    auto* mono = app.add_subcommand("mono", "Fewest monochromatic edges of a cograph colouring");
    mono->add_option("--mode", o.mode, "fixed-h|deficiency");
    mono->add_option("-h", o.h, "Number of colours (fixed-h)");
    mono->add_option("-d", o.d, "Colours below chi (deficiency)");
    mono->add_option("-m,--max-edges", o.max_edges, "Decide whether at most this many edges suffice");
    mono->add_option("graph", o.graph_path, "Graph file")->required();

    auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget");
    reduce->add_option("reduction", o.reduction, "vc2cb|sat2chordal|mss2mono")->required();
    reduce->add_option("instance", o.instance_path, "Instance file (a graph for vc2cb)")->required();
    reduce->add_option("-k", o.k, "Vertex cover budget (vc2cb)");
    reduce->add_option("-o,--output", o.out_path, "Also write the gadget graph to this file");

    auto* catalogue = app.add_subcommand("catalogue", "Emit connected graphs of a class");
    catalogue->add_option("--class", o.cls, "all|bipartite|chordal|cograph|complete-multipartite|c3-free");
    catalogue->add_option("--n", o.n, "Largest order (exhaustive) or the order (random)");
    catalogue->add_option("--count", o.count, "Sample this many random graphs instead of listing all");
    catalogue->add_option("--out-dir", o.out_dir, "Write one file per graph");

    auto* verify = app.add_subcommand("verify", "Re-check a report against its graph");
    verify->add_option("report", o.report_path, "Report JSON file")->required();
    verify->add_option("graph", o.graph_path, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*param) return run_param(o);
        if (*cotree) return run_cotree(o);
        if (*blocker) return run_blocker(o, "blocker");
        if (*oracle) return run_blocker(o, "oracle");
        if (*mono) return run_mono(o);
        if (*reduce) return run_reduce(o);
        if (*catalogue) return run_catalogue(o);
        if (*verify) return run_verify(o);
    } catch (const CapacityExceeded& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const NotInClass& e) {
        std::cerr << "error: " << e.what() << " (witness:";
        for (Vertex v : e.witness()) std::cerr << " " << v;
        std::cerr << ")\n";
        return kExitBadInput;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
