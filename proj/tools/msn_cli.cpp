#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msn/centrality.hpp"
#include "msn/complementarity.hpp"
#include "msn/io.hpp"
#include "msn/msn.hpp"
#include "msn/synthgen.hpp"
#include "msn/version.hpp"

namespace {

struct CommonArgs {
    std::string manifest;
    std::string mode = "all";
    std::string output;
    bool dedupe = false;
};

msn::DegreeMode parse_mode(const std::string& mode) {
    if (mode == "in") return msn::DegreeMode::In;
    if (mode == "out") return msn::DegreeMode::Out;
    return msn::DegreeMode::All;
}

msn::LowerRule parse_rule(const std::string& rule) {
    return rule == "min-nonzero" ? msn::LowerRule::MinNonzero : msn::LowerRule::Max;
}

std::string fmt_double(double v) {
    std::ostringstream out;
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        out << std::fixed << std::setprecision(1) << v;
    } else {
        out << std::setprecision(6) << v;
    }
    return out.str();
}

std::string fmt_distance(msn::Distance d) {
    return d.reachable() ? std::to_string(d.value()) : "unreachable";
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& table) {
    std::vector<std::size_t> width(table.header.size());
    for (std::size_t c = 0; c < table.header.size(); ++c) width[c] = table.header[c].size();
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << "  ";
            out << cells[c];
            if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size(), ' ');
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return out.str();
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render_csv(const Table& table) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << ',';
            out << csv_field(cells[c]);
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return out.str();
}

/// Data goes to stdout, or verbatim into --output when given (tables switch
/// to CSV there); diagnostics stay on stderr either way.
void emit(const std::string& data, const std::string& output) {
    if (output.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(output);
    if (!out) throw msn::MsnError("cannot write '" + output + "'");
    out << data;
}

void emit(const Table& table, const std::string& output) {
    emit(output.empty() ? render_table(table) : render_csv(table), output);
}

msn::MultiStratumNetwork load(const CommonArgs& args) {
    msn::LoadOptions options;
    options.dedupe_arcs = args.dedupe;
    std::vector<std::string> warnings;
    msn::MultiStratumNetwork net = msn::load_manifest(args.manifest, options, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
    return net;
}

/// The named actors, or everyone when none are named; sorted by display name.
std::vector<msn::ActorIndex> pick_actors(const msn::MultiStratumNetwork& net,
                                         const std::vector<std::string>& names) {
    const msn::ActorPartition& actors = net.actors();
    if (names.empty()) return actors.by_display_name();
    std::vector<msn::ActorIndex> picked;
    picked.reserve(names.size());
    for (const std::string& name : names) picked.push_back(actors.require(name));
    std::sort(picked.begin(), picked.end(), [&](msn::ActorIndex a, msn::ActorIndex b) {
        return actors.name(a) < actors.name(b);
    });
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    return picked;
}

void fill_adjacency(msn::Digraph& g) {
    g.out.assign(g.vertex_count, {});
    g.in.assign(g.vertex_count, {});
    for (const auto& [u, v] : g.arcs) {
        g.out[u].push_back(v);
        g.in[v].push_back(u);
    }
    for (auto& nbrs : g.in) std::sort(nbrs.begin(), nbrs.end());
}

// --- commands -------------------------------------------------------------

void cmd_stats(const CommonArgs& args) {
    msn::MultiStratumNetwork net = load(args);
    std::ostringstream out;
    for (msn::StratumIndex si = 0; si < net.stratum_count(); ++si) {
        const msn::Stratum& st = net.stratum(si);
        out << "stratum " << st.name() << ": " << st.vertex_count() << " vertices, "
            << st.arc_count() << " arcs, giant component "
            << msn::giant_component_size(msn::stratum_weak_components(net, si)) << '\n';
    }
    out << "accounts: " << net.account_count() << '\n';
    out << "identity pairs: " << net.identity_pairs().size() << '\n';
    out << "actors: " << net.actors().size() << '\n';
    out << "pillar: " << (msn::is_pillar(net) ? "true" : "false") << '\n';
    out << "flat giant component: " << msn::giant_component_size(msn::weak_components(msn::flat(net)))
        << '\n';
    emit(out.str(), args.output);
}

void cmd_degree(const CommonArgs& args, const std::vector<std::string>& names) {
    msn::MultiStratumNetwork net = load(args);
    msn::MergedGraph merged = msn::merge(net);
    std::vector<int> degrees = msn::all_ms_degrees(merged, parse_mode(args.mode));
    Table table{{"actor", "ms_degree"}, {}};
    for (msn::ActorIndex a : pick_actors(net, names)) {
        table.rows.push_back({net.actors().name(a), std::to_string(degrees[a])});
    }
    emit(table, args.output);
}

void cmd_bounds(const CommonArgs& args, const std::vector<std::string>& names,
                const std::string& rule) {
    msn::MultiStratumNetwork net = load(args);
    std::vector<msn::DegreeBounds> bounds =
        msn::all_degree_bounds(net, parse_mode(args.mode), parse_rule(rule));
    Table table{{"actor", "lower", "actual", "upper", "rel_uncertainty"}, {}};
    for (msn::ActorIndex a : pick_actors(net, names)) {
        const msn::DegreeBounds& b = bounds[a];
        table.rows.push_back({net.actors().name(a), std::to_string(b.lower),
                              std::to_string(b.actual), std::to_string(b.upper),
                              fmt_double(b.rel_uncertainty)});
    }
    emit(table, args.output);
}

void cmd_nci(const CommonArgs& args, const std::string& s1, const std::string& s2) {
    msn::MultiStratumNetwork net = load(args);
    msn::NciResult result = msn::nci(net, net.require_stratum(s1), net.require_stratum(s2),
                                     parse_mode(args.mode));
    emit(fmt_double(result.value) + "\n", args.output);
}

void cmd_distance(const CommonArgs& args, const std::string& a, const std::string& b,
                  bool free_identity) {
    msn::MultiStratumNetwork net = load(args);
    msn::Distance d = msn::actor_distance(
        net, net.actors().require(a), net.actors().require(b),
        free_identity ? msn::IdentityHopCost::Zero : msn::IdentityHopCost::One);
    emit(fmt_distance(d) + "\n", args.output);
}

void cmd_closeness(const CommonArgs& args, const std::vector<std::string>& names) {
    msn::MultiStratumNetwork net = load(args);
    std::vector<double> closeness = msn::all_ms_closeness(net);
    Table table{{"actor", "ms_closeness"}, {}};
    for (msn::ActorIndex a : pick_actors(net, names)) {
        table.rows.push_back({net.actors().name(a), fmt_double(closeness[a])});
    }
    emit(table, args.output);
}

void cmd_betweenness(const CommonArgs& args, const std::vector<std::string>& names) {
    msn::MultiStratumNetwork net = load(args);
    std::vector<double> betweenness = msn::ms_betweenness(net);
    Table table{{"actor", "ms_betweenness"}, {}};
    for (msn::ActorIndex a : pick_actors(net, names)) {
        table.rows.push_back({net.actors().name(a), fmt_double(betweenness[a])});
    }
    emit(table, args.output);
}

void cmd_components(const CommonArgs& args, const std::string& graph, bool strong,
                    bool members) {
    msn::MultiStratumNetwork net = load(args);

    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<std::string> vertex_names;
    if (graph == "flat") {
        msn::FlatGraph fg = msn::flat(net);
        comps = strong ? msn::strong_components(fg) : msn::weak_components(fg);
        vertex_names.resize(net.account_count());
        for (msn::AccountIndex i = 0; i < net.account_count(); ++i) {
            vertex_names[i] = net.qualified_name(i);
        }
    } else if (graph == "merge") {
        msn::MergedGraph mg = msn::merge(net);
        comps = strong ? msn::strong_components(mg) : msn::weak_components(mg);
        vertex_names.resize(net.actors().size());
        for (msn::ActorIndex a = 0; a < net.actors().size(); ++a) {
            vertex_names[a] = net.actors().name(a);
        }
    } else if (graph.rfind("stratum:", 0) == 0) {
        msn::StratumIndex si = net.require_stratum(graph.substr(8));
        const msn::Stratum& st = net.stratum(si);
        vertex_names.resize(net.account_count());
        for (msn::AccountIndex i : st.members()) vertex_names[i] = net.qualified_name(i);
        if (!strong) {
            comps = msn::stratum_weak_components(net, si);
        } else {
            // restrict to the stratum, then map local indices back; the
            // mapping is monotone so the component ordering survives
            std::vector<std::uint32_t> local_of(net.account_count());
            msn::Digraph g;
            g.vertex_count = st.members().size();
            for (std::uint32_t i = 0; i < st.members().size(); ++i) local_of[st.members()[i]] = i;
            for (const auto& [u, v] : st.arcs()) g.arcs.emplace_back(local_of[u], local_of[v]);
            fill_adjacency(g);
            comps = msn::strong_components(g);
            for (auto& comp : comps) {
                for (auto& v : comp) v = st.members()[v];
            }
        }
    } else {
        throw msn::MsnError("unknown graph '" + graph + "' (use flat, merge or stratum:<name>)");
    }

    Table table{{"component", "size"}, {}};
    if (members) table.header.push_back("members");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<std::string> row{std::to_string(i + 1), std::to_string(comps[i].size())};
        if (members) {
            std::string joined;
            for (std::uint32_t v : comps[i]) {
                if (!joined.empty()) joined += ' ';
                joined += vertex_names[v];
            }
            row.push_back(std::move(joined));
        }
        table.rows.push_back(std::move(row));
    }
    emit(table, args.output);
}

void cmd_profile(const CommonArgs& args, const std::string& actor,
                 const std::vector<std::string>& strata) {
    msn::MultiStratumNetwork net = load(args);
    std::vector<msn::StratumIndex> subset;
    subset.reserve(strata.size());
    for (const std::string& name : strata) subset.push_back(net.require_stratum(name));
    msn::DistanceProfile profile =
        msn::avg_distance_profile(net, net.actors().require(actor), subset);

    Table table{{"graph", "avg_distance"}, {}};
    for (const auto& [si, avg] : profile.per_stratum_avg) {
        table.rows.push_back({net.stratum(si).name(), fmt_double(avg)});
    }
    table.rows.push_back({"msn", fmt_double(profile.msn_avg)});
    if (args.output.empty()) {
        emit(render_table(table) + "scope: " + std::to_string(profile.scope.size()) +
                 " actor(s)\n",
             args.output);
    } else {
        emit(table, args.output);
    }
}

void cmd_generate(const msn::PillarGenSpec& spec, const std::string& out_dir) {
    msn::MultiStratumNetwork net = msn::generate_pillar(spec);
    std::filesystem::path manifest =
        msn::export_msn(net, out_dir, {msn::describe(spec)});
    std::cout << msn::describe(spec) << '\n';
    std::cout << "wrote " << manifest.string() << '\n';
}

void cmd_export_scatter(const CommonArgs& args, const std::string& s1, const std::string& s2) {
    msn::MultiStratumNetwork net = load(args);
    std::ostringstream out;
    msn::export_scatter_csv(net, net.require_stratum(s1), net.require_stratum(s2),
                            parse_mode(args.mode), out);
    emit(out.str(), args.output);
}

void cmd_export_bounds(const CommonArgs& args, const std::string& rule) {
    msn::MultiStratumNetwork net = load(args);
    std::ostringstream out;
    msn::export_bounds_csv(net, parse_mode(args.mode), parse_rule(rule), out);
    emit(out.str(), args.output);
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_mode = true) {
    cmd->add_option("--manifest", args.manifest, "Manifest file of the network")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", args.output, "Write data here instead of stdout (tables as CSV)");
    cmd->add_flag("--dedupe", args.dedupe, "Collapse duplicate arcs instead of rejecting them");
    if (with_mode) {
        cmd->add_option("--mode", args.mode, "Degree/neighbour mode")
            ->check(CLI::IsMember({"in", "out", "all"}))
            ->default_str("all");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-stratum network analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("msn ") + msn::kVersion);

    CommonArgs args;
    std::vector<std::string> actor_names;
    std::vector<std::string> strata_names;
    std::string name_a, name_b;
    std::string lower_rule = "max";
    std::string graph = "flat";
    bool strong = false;
    bool members = false;
    msn::PillarGenSpec spec;
    std::string out_dir;

    std::function<void()> run;

    CLI::App* stats = app.add_subcommand("stats", "Network summary: sizes, actors, components");
    add_common(stats, args, false);
    stats->callback([&] { run = [&] { cmd_stats(args); }; });

    CLI::App* degree = app.add_subcommand("degree", "Multi-stratum degree of actors");
    add_common(degree, args);
    degree->add_option("actors", actor_names, "Actors to report (default: all)");
    degree->callback([&] { run = [&] { cmd_degree(args, actor_names); }; });

    CLI::App* bounds = app.add_subcommand("bounds", "Degree interval (lower/actual/upper)");
    add_common(bounds, args);
    bounds->add_option("actors", actor_names, "Actors to report (default: all)");
    bounds->add_option("--lower-rule", lower_rule, "Lower bound rule")
        ->check(CLI::IsMember({"max", "min-nonzero"}));
    bounds->callback([&] { run = [&] { cmd_bounds(args, actor_names, lower_rule); }; });

    CLI::App* nci = app.add_subcommand("nci", "Complementarity index of two strata");
    add_common(nci, args);
    nci->add_option("s1", name_a, "First stratum")->required();
    nci->add_option("s2", name_b, "Second stratum")->required();
    nci->callback([&] { run = [&] { cmd_nci(args, name_a, name_b); }; });

    CLI::App* distance = app.add_subcommand("distance", "Multi-stratum distance of two actors");
    add_common(distance, args, false);
    distance->add_option("a", name_a, "Source actor")->required();
    distance->add_option("b", name_b, "Target actor")->required();
    bool free_identity = false;
    distance->add_flag("--free-identity", free_identity,
                       "Count hops between accounts of one identity as 0 instead of 1");
    distance->callback(
        [&] { run = [&] { cmd_distance(args, name_a, name_b, free_identity); }; });

    CLI::App* closeness = app.add_subcommand("closeness", "Harmonic closeness of actors");
    add_common(closeness, args, false);
    closeness->add_option("actors", actor_names, "Actors to report (default: all)");
    closeness->callback([&] { run = [&] { cmd_closeness(args, actor_names); }; });

    CLI::App* betweenness = app.add_subcommand("betweenness", "Exact betweenness of actors");
    add_common(betweenness, args, false);
    betweenness->add_option("actors", actor_names, "Actors to report (default: all)");
    betweenness->callback([&] { run = [&] { cmd_betweenness(args, actor_names); }; });

    CLI::App* components = app.add_subcommand("components", "Connected components of a view");
    add_common(components, args, false);
    components->add_option("--graph", graph, "flat, merge or stratum:<name>")
        ->default_str("flat");
    components->add_flag("--strong", strong, "Strongly connected components");
    components->add_flag("--members", members, "List component members");
    components->callback([&] { run = [&] { cmd_components(args, graph, strong, members); }; });

    CLI::App* profile = app.add_subcommand("profile", "Average-distance profile of one actor");
    add_common(profile, args, false);
    profile->add_option("actor", name_a, "Actor to profile")->required();
    profile->add_option("--strata", strata_names, "Strata to compare, comma separated")
        ->required()
        ->delimiter(',');
    profile->callback([&] { run = [&] { cmd_profile(args, name_a, strata_names); }; });

    CLI::App* generate = app.add_subcommand("generate", "Generate and export a synthetic network");
    generate->add_option("--out", out_dir, "Directory to export into")->required();
    generate->add_option("--n", spec.n, "Actor count")->required();
    generate->add_option("--k", spec.k, "Stratum count");
    generate->add_option("--p", spec.base_p, "Arc probability of stratum S1")->required();
    generate->add_option("--theta", spec.theta, "Copy probability of S1 arcs in later strata");
    generate->add_option("--q", spec.extra_q, "Independent arc probability of later strata");
    generate->add_option("--activity", spec.activity,
                         "Per-stratum account probability (1 value or k, comma separated)")
        ->delimiter(',');
    generate->add_option("--seed", spec.seed, "Random seed");
    generate->callback([&] { run = [&] { cmd_generate(spec, out_dir); }; });

    CLI::App* scatter = app.add_subcommand("export-scatter", "Rank-vs-rank CSV for two strata");
    add_common(scatter, args);
    scatter->add_option("s1", name_a, "First stratum")->required();
    scatter->add_option("s2", name_b, "Second stratum")->required();
    scatter->callback([&] { run = [&] { cmd_export_scatter(args, name_a, name_b); }; });

    CLI::App* bounds_csv = app.add_subcommand("export-bounds", "Degree-interval CSV, plot order");
    add_common(bounds_csv, args);
    bounds_csv->add_option("--lower-rule", lower_rule, "Lower bound rule")
        ->check(CLI::IsMember({"max", "min-nonzero"}));
    bounds_csv->callback([&] { run = [&] { cmd_export_bounds(args, lower_rule); }; });

    try {
        app.parse(argc, argv);
        if (run) run();
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const msn::MsnError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
