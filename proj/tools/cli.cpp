#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "thinkit/errors.hpp"
#include "thinkit/families.hpp"
#include "thinkit/io.hpp"
#include "thinkit/problems.hpp"
#include "thinkit/proper_dp.hpp"
#include "thinkit/representations.hpp"
#include "thinkit/thin_dp.hpp"
#include "thinkit/widths.hpp"

namespace thinkit::cli {

using json = nlohmann::json;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// THINKIT_SIZE_CAP, when set, replaces every default search cap.
int size_cap(int fallback) {
    const char* env = std::getenv("THINKIT_SIZE_CAP");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value <= 0 || value > 64) {
        throw InputError(std::string("THINKIT_SIZE_CAP must be an integer in 1..64, got '") + env +
                         "'");
    }
    return static_cast<int>(value);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << text;
}

const char* mode_name(ConsistencyMode mode) {
    return mode == ConsistencyMode::strong ? "strong" : "weak";
}

json rep_json(const ThinRepresentation& rep) {
    return {{"k", rep.class_count()},
            {"mode", mode_name(rep.mode())},
            {"ordering", rep.ordering().sequence()},
            {"classes", rep.partition().assignment()}};
}

json labels_json(const std::vector<SetMask>& labels) {
    json out = json::array();
    for (SetMask m : labels) out.push_back(mask_indices(m));
    return out;
}

struct Context {
    std::ostringstream err;
    json out = json::object();
    int exit_code = kSuccess;

    Graph load_graph(const std::string& path) {
        GraphDocument doc = parse_graph(read_file(path));
        for (const auto& w : doc.warnings) err << "warning: " << path << ": " << w << '\n';
        return std::move(doc.graph);
    }
};

struct SolveArgs {
    std::string graph;
    std::string spec;
    std::string rep;
    std::string problem;
    std::string variant = "plain";
    std::vector<std::int64_t> weights;
    std::vector<std::int64_t> capacities;
    std::size_t max_states = DpOptions{}.max_states;
    bool complement = false;
};

ThinRepresentation searched_rep(const Graph& g, bool strong, Context& ctx) {
    const SearchLimits limits{size_cap(SearchLimits{}.max_vertices)};
    ExactThinness found = strong ? proper_thinness_exact(g, limits) : thinness_exact(g, limits);
    ctx.err << "note: no --rep given, using a searched " << (strong ? "strong" : "weak")
            << " representation with " << found.k << " classes\n";
    return std::move(found.representation);
}

void run_solve(const SolveArgs& a, bool proper_only, Context& ctx) {
    const Graph g = ctx.load_graph(a.graph);
    if (a.spec.empty() == a.problem.empty()) {
        throw InputError("give exactly one of --spec and --problem");
    }

    ProblemEncoding enc;
    if (!a.spec.empty()) {
        SpecDocument doc = parse_spec(read_file(a.spec), g.vertex_count());
        enc.name = "spec";
        enc.kind = ProblemKind::list_matrix_partition;
        enc.spec = std::move(doc.spec);
        enc.neighborhood = std::move(doc.neighborhood);
    } else if (a.problem == "mwss") {
        enc = encode_max_weight_stable_set(g, a.weights);
    } else if (a.problem == "coloring") {
        if (a.capacities.empty()) throw InputError("--problem coloring needs --capacities");
        enc = encode_capacitated_coloring(g, a.capacities);
    } else if (a.problem == "domination") {
        const auto variant = parse_domination_variant(a.variant);
        if (!variant) throw InputError("unknown domination variant '" + a.variant + "'");
        enc = encode_domination(g, *variant, a.weights);
    } else {
        throw InputError("unknown problem '" + a.problem + "' (mwss, coloring, domination)");
    }
    if (proper_only && !enc.neighborhood) {
        throw InputError("solve-proper needs neighborhood bounds");
    }
    if (a.complement && enc.neighborhood) {
        throw InputError("--complement is not available with neighborhood bounds");
    }
    ctx.out["problem"] = enc.name;
    if (enc.trivially_infeasible) {
        ctx.out["feasible"] = false;
        ctx.out["reason"] = *enc.trivially_infeasible;
        ctx.exit_code = kAbsent;
        return;
    }

    const bool strong = enc.neighborhood.has_value();
    std::optional<ThinRepresentation> rep;
    if (!a.rep.empty()) {
        RepresentationDocument doc = parse_representation_document(read_file(a.rep));
        if (doc.ordering.size() != g.vertex_count()) {
            throw InputError("representation size differs from the graph");
        }
        rep.emplace(g, std::move(doc.ordering), std::move(doc.partition), doc.mode);
    } else {
        rep.emplace(searched_rep(g, strong, ctx));
    }

    const Stopwatch clock;
    DpStats stats;
    const DpOptions options{a.max_states};
    std::optional<Solution> sol;
    if (a.complement) {
        sol = solve_on_complement(g, *rep, enc.spec, &stats, options);
    } else {
        sol = solve_encoding(g, *rep, enc, &stats, options);
    }
    ctx.out["seconds"] = clock.seconds();
    ctx.out["representation"] = rep_json(*rep);
    ctx.out["states"] = stats.states;
    ctx.out["arcs"] = stats.arcs;
    ctx.out["state_bound_ok"] =
        within_state_count_bound(stats, g.vertex_count(), rep->class_count(), enc.spec, strong);
    ctx.out["feasible"] = sol.has_value();
    if (!sol) {
        ctx.exit_code = kAbsent;
        return;
    }
    ctx.out["objective"] = sol->objective;
    ctx.out["sets"] = sol->sets;
    ctx.out["labels"] = labels_json(sol->labels);
}

std::vector<std::string> family_names() {
    return {"path",  "cycle",       "complete", "edgeless",       "complement-matching",
            "grid",  "mary-tree",   "claw-h",   "claw-h-interval", "Gk",
            "interval"};
}

struct Generated {
    Graph graph;
    std::optional<ThinRepresentation> rep;
};

Generated generate_family(const std::string& family, const std::vector<long long>& p) {
    auto need = [&](std::size_t count) {
        if (p.size() != count) {
            throw InputError("family '" + family + "' takes " + std::to_string(count) +
                             " parameter(s), got " + std::to_string(p.size()));
        }
    };
    auto arg = [&](std::size_t i) {
        if (p[i] < 0 || p[i] > (1 << 20)) throw InputError("parameter out of range");
        return static_cast<int>(p[i]);
    };
    if (family == "path") return need(1), Generated{gen_path(arg(0)), std::nullopt};
    if (family == "cycle") return need(1), Generated{gen_cycle(arg(0)), std::nullopt};
    if (family == "complete") return need(1), Generated{gen_complete(arg(0)), std::nullopt};
    if (family == "edgeless") return need(1), Generated{gen_edgeless(arg(0)), std::nullopt};
    if (family == "complement-matching") {
        return need(1), Generated{gen_complement_matching(arg(0)), std::nullopt};
    }
    if (family == "grid") return need(1), Generated{gen_grid(arg(0)), std::nullopt};
    if (family == "mary-tree") return need(2), Generated{gen_mary_tree(arg(0), arg(1)), std::nullopt};
    if (family == "claw-h") {
        need(1);
        GraphWithRep gr = gen_claw_h(arg(0));
        return {std::move(gr.graph), std::move(gr.rep)};
    }
    if (family == "Gk") {
        need(1);
        GraphWithRep gr = gen_Gk(arg(0));
        return {std::move(gr.graph), std::move(gr.rep)};
    }
    if (family == "claw-h-interval" || family == "interval") {
        std::optional<IntervalModel> model;
        if (family == "claw-h-interval") {
            need(1);
            model.emplace(claw_h_interval_model(arg(0)));
        } else {
            if (p.empty() || p.size() % 2 != 0) {
                throw InputError("family 'interval' takes left/right endpoint pairs");
            }
            std::vector<Interval> intervals;
            for (std::size_t i = 0; i < p.size(); i += 2) {
                intervals.push_back({Rational{p[i], 1}, Rational{p[i + 1], 1}});
            }
            model.emplace(std::move(intervals));
        }
        Graph g = interval_graph(*model);
        ThinRepresentation rep = interval_to_proper_thin(*model, g);
        return {std::move(g), std::move(rep)};
    }
    throw InputError("unknown family '" + family + "'");
}

void add_graph_arg(CLI::App* sub, std::string& target) {
    sub->add_option("graph", target, "Graph file ('p thin <n> <m>' format)")->required();
}

}  // namespace

CliResult cli_dispatch(const std::vector<std::string>& args) {
    Context ctx;
    CLI::App app{"Thinness toolkit: representations, exact thinness, and the thin/proper DPs",
                 args.empty() ? "thinkit" : args[0]};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "thinkit 0.1.0");

    std::function<void()> action;
    std::string graph_path;

    auto* thin = app.add_subcommand("thinness", "Exact thinness with a witness representation");
    add_graph_arg(thin, graph_path);
    auto* pthin = app.add_subcommand("pthinness", "Exact proper thinness with a witness");
    add_graph_arg(pthin, graph_path);
    for (auto* sub : {thin, pthin}) {
        const bool strong = sub == pthin;
        sub->callback([&, strong] {
            action = [&, strong] {
                const Graph g = ctx.load_graph(graph_path);
                const SearchLimits limits{size_cap(SearchLimits{}.max_vertices)};
                const Stopwatch clock;
                ExactThinness r = strong ? proper_thinness_exact(g, limits) : thinness_exact(g, limits);
                ctx.out[strong ? "proper_thinness" : "thinness"] = r.k;
                ctx.out["ordering"] = r.representation.ordering().sequence();
                ctx.out["classes"] = r.representation.partition().assignment();
                ctx.out["seconds"] = clock.seconds();
            };
        });
    }

    std::string rep_path;
    bool strong_flag = false;
    auto* check = app.add_subcommand("check-rep", "Check an ordering/partition pair");
    add_graph_arg(check, graph_path);
    check->add_option("--rep", rep_path, "Representation file")->required();
    check->add_flag("--strong", strong_flag, "Require strong consistency regardless of the file's mode");
    check->callback([&] {
        action = [&] {
            const Graph g = ctx.load_graph(graph_path);
            RepresentationDocument doc = parse_representation_document(read_file(rep_path));
            if (doc.ordering.size() != g.vertex_count()) {
                throw InputError("representation size differs from the graph");
            }
            const ConsistencyMode mode = strong_flag ? ConsistencyMode::strong : doc.mode;
            const bool ok = is_consistent(g, doc.ordering, doc.partition, mode);
            ctx.out["consistent"] = ok;
            ctx.out["mode"] = mode_name(mode);
            ctx.out["k"] = doc.partition.class_count();
            if (!ok) ctx.exit_code = kAbsent;
        };
    });

    std::string order_path;
    auto* minpart = app.add_subcommand("min-partition", "Minimum partition consistent with an ordering");
    add_graph_arg(minpart, graph_path);
    minpart->add_option("--order", order_path, "Ordering file")->required();
    minpart->add_flag("--strong", strong_flag, "Strongly consistent partition");
    minpart->callback([&] {
        action = [&] {
            const Graph g = ctx.load_graph(graph_path);
            const Ordering ord = parse_ordering(read_file(order_path));
            if (ord.size() != g.vertex_count()) throw InputError("ordering size differs from the graph");
            const Stopwatch clock;
            const Partition part = min_consistent_partition(g, ord, strong_flag);
            ctx.out["k"] = part.class_count();
            ctx.out["mode"] = strong_flag ? "strong" : "weak";
            ctx.out["ordering"] = ord.sequence();
            ctx.out["classes"] = part.assignment();
            ctx.out["seconds"] = clock.seconds();
        };
    });

    std::string partition_path;
    auto* ofp = app.add_subcommand("order-for-partition", "Find an ordering consistent with a partition");
    add_graph_arg(ofp, graph_path);
    ofp->add_option("--partition", partition_path, "Partition file")->required();
    ofp->add_flag("--strong", strong_flag, "Strongly consistent ordering");
    ofp->callback([&] {
        action = [&] {
            const Graph g = ctx.load_graph(graph_path);
            const Partition part = parse_partition(read_file(partition_path));
            if (part.size() != g.vertex_count()) throw InputError("partition size differs from the graph");
            const Stopwatch clock;
            const auto ord = consistent_order_for_partition(g, part, strong_flag,
                                                            SearchLimits{size_cap(12)});
            ctx.out["mode"] = strong_flag ? "strong" : "weak";
            ctx.out["found"] = ord.has_value();
            ctx.out["ordering"] = ord ? json(ord->sequence()) : json(nullptr);
            ctx.out["seconds"] = clock.seconds();
            if (!ord) ctx.exit_code = kAbsent;
        };
    });

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Run the thin DP on a spec or a named problem");
    auto* proper_cmd = app.add_subcommand("solve-proper", "Run the proper DP (neighborhood bounds)");
    for (auto* sub : {solve_cmd, proper_cmd}) {
        const bool proper = sub == proper_cmd;
        add_graph_arg(sub, solve_args.graph);
        sub->add_option("--spec", solve_args.spec, "Problem spec (JSON)");
        sub->add_option("--rep", solve_args.rep, "Representation file; searched when omitted");
        sub->add_option("--problem", solve_args.problem, "mwss | coloring | domination");
        sub->add_option("--variant", solve_args.variant,
                        "Domination variant: plain | independent | total | efficient | perfect");
        sub->add_option("--weights", solve_args.weights, "Vertex weights")->delimiter(',');
        sub->add_option("--capacities", solve_args.capacities, "Color capacities")->delimiter(',');
        sub->add_option("--max-states", solve_args.max_states, "Cap on materialized DP states");
        if (!proper) {
            sub->add_flag("--complement", solve_args.complement,
                          "Solve on the complement, using a representation of the given graph");
        }
        sub->callback([&, proper] { action = [&, proper] { run_solve(solve_args, proper, ctx); }; });
    }

    std::string family;
    std::vector<long long> params;
    std::string graph_out;
    std::string rep_out;
    auto* gen = app.add_subcommand("generate", "Generate a graph family member");
    gen->add_option("--family", family, "Family name")
        ->required()
        ->check(CLI::IsMember(family_names()));
    gen->add_option("--params", params, "Family parameters")->delimiter(',');
    gen->add_option("--graph-out", graph_out, "Write the graph here instead of stdout");
    gen->add_option("--rep-out", rep_out, "Write the representation here instead of stdout");
    gen->callback([&] {
        action = [&] {
            Generated made = generate_family(family, params);
            ctx.out["family"] = family;
            ctx.out["n"] = made.graph.vertex_count();
            ctx.out["m"] = made.graph.edge_count();
            const std::string graph_text = write_graph(made.graph);
            if (graph_out.empty()) {
                ctx.out["graph"] = graph_text;
            } else {
                write_text(graph_out, graph_text);
                ctx.out["graph_out"] = graph_out;
            }
            if (made.rep) {
                ctx.out["k"] = made.rep->class_count();
                ctx.out["mode"] = mode_name(made.rep->mode());
                const std::string rep_text = write_representation(*made.rep);
                if (rep_out.empty()) {
                    ctx.out["rep"] = rep_text;
                } else {
                    write_text(rep_out, rep_text);
                    ctx.out["rep_out"] = rep_out;
                }
            } else if (!rep_out.empty()) {
                throw InputError("family '" + family + "' has no built-in representation");
            }
        };
    });

    std::string which;
    auto* widths = app.add_subcommand("widths", "Exact width parameters");
    add_graph_arg(widths, graph_path);
    widths->add_option("--which", which, "cutw | lmimw | isop")
        ->required()
        ->check(CLI::IsMember({"cutw", "lmimw", "isop"}));
    widths->callback([&] {
        action = [&] {
            const Graph g = ctx.load_graph(graph_path);
            const Stopwatch clock;
            if (which == "isop") {
                ctx.out["isoperimetric_peak"] = isoperimetric_peak(g, size_cap(16));
            } else {
                const WidthResult r = which == "cutw" ? cutwidth_bruteforce(g, size_cap(8))
                                                      : lmimw_bruteforce(g, size_cap(8));
                ctx.out[which == "cutw" ? "cutwidth" : "lmimw"] = r.value;
                ctx.out["layout"] = r.layout.sequence();
            }
            ctx.out["seconds"] = clock.seconds();
        };
    });

    std::string instance_path;
    std::string partition_out;
    bool nb_check = false;
    auto* reduce = app.add_subcommand("reduce-nb", "Reduce Non-Betweenness to a partition-ordering instance");
    reduce->add_option("--instance", instance_path, "Instance (JSON)")->required();
    reduce->add_option("--graph-out", graph_out, "Write the reduced graph here instead of stdout");
    reduce->add_option("--partition-out", partition_out, "Write the partition here");
    reduce->add_flag("--check", nb_check,
                     "Also decide the instance and the reduced ordering problem exhaustively");
    reduce->callback([&] {
        action = [&] {
            const NonBetweennessInstance inst = parse_nb_instance(read_file(instance_path));
            const NonBetweennessReduction red = reduce_non_betweenness(inst);
            ctx.out["elements"] = inst.element_count();
            ctx.out["triples"] = inst.triples().size();
            ctx.out["n"] = red.graph.vertex_count();
            ctx.out["m"] = red.graph.edge_count();
            ctx.out["classes"] = red.partition.assignment();
            const std::string graph_text = write_graph(red.graph);
            if (graph_out.empty()) {
                ctx.out["graph"] = graph_text;
            } else {
                write_text(graph_out, graph_text);
                ctx.out["graph_out"] = graph_out;
            }
            if (!partition_out.empty()) {
                std::ostringstream text;
                text << "classes";
                for (int c : red.partition.assignment()) text << ' ' << c;
                text << '\n';
                write_text(partition_out, text.str());
                ctx.out["partition_out"] = partition_out;
            }
            if (nb_check) {
                const auto order = solve_non_betweenness_bruteforce(inst, size_cap(8));
                ctx.out["nb_satisfiable"] = order.has_value();
                const SearchLimits limits{size_cap(16)};
                for (bool strong : {false, true}) {
                    const auto ord = consistent_order_for_partition(red.graph, red.partition, strong, limits);
                    ctx.out[strong ? "strong_order" : "weak_order"] =
                        ord ? json(ord->sequence()) : json(nullptr);
                }
            }
        };
    });

    int t = 0;
    auto* rainbow = app.add_subcommand("rainbow", "Minimum t-rainbow domination");
    add_graph_arg(rainbow, graph_path);
    rainbow->add_option("--t", t, "Number of colors")->required()->check(CLI::Range(1, 16));
    rainbow->add_option("--rep", rep_path, "Representation of the graph; searched when omitted");
    rainbow->callback([&] {
        action = [&] {
            const Graph g = ctx.load_graph(graph_path);
            std::optional<ThinRepresentation> rep;
            if (!rep_path.empty()) {
                rep.emplace(parse_representation(read_file(rep_path), g));
            } else if (g.vertex_count() <= size_cap(SearchLimits{}.max_vertices)) {
                rep.emplace(searched_rep(g, true, ctx));
            } else {
                rep.emplace(g, Ordering::identity(g.vertex_count()),
                            Partition::singletons(g.vertex_count()), ConsistencyMode::strong);
            }
            const Stopwatch clock;
            const RainbowResult r = t_rainbow_domination(g, *rep, t, size_cap(10));
            ctx.out["t"] = t;
            ctx.out["weight"] = r.weight;
            ctx.out["labels"] = labels_json(r.labels);
            ctx.out["route"] = to_string(r.route);
            ctx.out["seconds"] = clock.seconds();
        };
    });

    CliResult result;
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("thinkit");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        if (argv.size() > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
            throw InputError(std::string("unknown subcommand '") + argv[1] + "'");
        }
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::Success& e) {
            std::ostringstream out;
            app.exit(e, out, ctx.err);
            result.out = out.str();
            result.err = ctx.err.str();
            return result;
        } catch (const CLI::ParseError& e) {
            throw InputError(e.what());
        }
        action();
        result.exit_code = ctx.exit_code;
        result.out = ctx.out.dump(2) + "\n";
    } catch (const InputError& e) {
        result.exit_code = kInputError;
        result.out = json{{"error", "input"}, {"message", e.what()}}.dump(2) + "\n";
        ctx.err << "error: " << e.what() << '\n';
    } catch (const SizeCapError& e) {
        result.exit_code = kSizeCap;
        result.out = json{{"error", "size-cap"}, {"message", e.what()}}.dump(2) + "\n";
        ctx.err << "size cap: " << e.what() << '\n';
    } catch (const std::exception& e) {
        result.exit_code = kInternalError;
        result.out = json{{"error", "internal"}, {"message", e.what()}}.dump(2) + "\n";
        ctx.err << "internal error: " << e.what() << '\n';
    }
    result.err = ctx.err.str();
    return result;
}

}  // namespace thinkit::cli
