#include "msn/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "msn/complementarity.hpp"

namespace msn {

namespace fs = std::filesystem;

namespace {

// File-level problems (an unreadable file) report line 0; every other
// ParseError points at the offending 1-based line.

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tabs(const std::string& s) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = s.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(s.substr(start));
            return fields;
        }
        fields.push_back(s.substr(start, tab - start));
        start = tab + 1;
    }
}

/// Meaningful lines only: blank and '#' lines dropped, '\r' stripped.
std::vector<Line> read_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::vector<Line> lines;
    std::string text;
    for (std::size_t number = 1; std::getline(in, text); ++number) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        std::string stripped = trim(text);
        if (stripped.empty() || stripped.front() == '#') continue;
        lines.push_back({number, text});
    }
    return lines;
}

bool parse_bool(const std::string& value, const fs::path& file, std::size_t line) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ParseError(file.string(), line, "expected true or false, got '" + value + "'");
}

struct ManifestEntry {
    std::string name;
    fs::path path;
    std::size_t line;
};

struct Manifest {
    std::vector<ManifestEntry> strata;
    fs::path identity_path;
    std::size_t identity_line = 0;
    bool has_identity = false;
    bool deduplicate = false;
    bool directed = true;
};

Manifest parse_manifest(const fs::path& path) {
    Manifest m;
    std::set<std::string> names;
    for (const Line& line : read_lines(path)) {
        std::size_t eq = line.text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path.string(), line.number, "expected 'key = value'");
        }
        std::string key = trim(line.text.substr(0, eq));
        std::string value = trim(line.text.substr(eq + 1));
        if (key == "stratum") {
            std::size_t space = value.find_first_of(" \t");
            if (space == std::string::npos) {
                throw ParseError(path.string(), line.number,
                                 "expected '<name> <path>' after 'stratum ='");
            }
            std::string name = value.substr(0, space);
            std::string file = trim(value.substr(space + 1));
            if (file.empty()) {
                throw ParseError(path.string(), line.number, "missing path after stratum name");
            }
            if (!names.insert(name).second) {
                throw ParseError(path.string(), line.number,
                                 "stratum '" + name + "' declared twice");
            }
            m.strata.push_back({name, fs::path(file), line.number});
        } else if (key == "identity_map") {
            if (m.has_identity) {
                throw ParseError(path.string(), line.number, "identity_map declared twice");
            }
            if (value.empty()) {
                throw ParseError(path.string(), line.number, "missing path after 'identity_map ='");
            }
            m.has_identity = true;
            m.identity_path = fs::path(value);
            m.identity_line = line.number;
        } else if (key == "deduplicate") {
            m.deduplicate = parse_bool(value, path, line.number);
        } else if (key == "directed") {
            m.directed = parse_bool(value, path, line.number);
        } else {
            throw ParseError(path.string(), line.number, "unknown key '" + key + "'");
        }
    }
    // no stratum entries is legal: it loads the empty network
    return m;
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

/// Shortest decimal text that parses back to exactly `v`.
std::string shortest_double(double v) {
    for (int precision = 1; precision <= 17; ++precision) {
        std::ostringstream out;
        out << std::setprecision(precision) << v;
        if (std::stod(out.str()) == v) return out.str();
    }
    return std::to_string(v);
}

std::ofstream open_for_write(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw MsnError("cannot write '" + path.string() + "'");
    return out;
}

std::string sanitize_filename(const std::string& name) {
    std::string safe = name;
    for (char& c : safe) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '.' || c == '_' || c == '-';
        if (!ok) c = '_';
    }
    return safe;
}

}  // namespace

MultiStratumNetwork load_manifest(const fs::path& manifest_path, const LoadOptions& options,
                                  std::vector<std::string>* warnings) {
    Manifest manifest = parse_manifest(manifest_path);
    const fs::path base = manifest_path.parent_path();

    std::vector<fs::path> edge_files;
    for (const ManifestEntry& entry : manifest.strata) {
        fs::path full = base / entry.path;
        if (!fs::exists(full)) {
            throw ParseError(manifest_path.string(), entry.line,
                             "referenced file not found: " + full.string());
        }
        edge_files.push_back(std::move(full));
    }
    fs::path identity_file;
    if (manifest.has_identity) {
        identity_file = base / manifest.identity_path;
        if (!fs::exists(identity_file)) {
            throw ParseError(manifest_path.string(), manifest.identity_line,
                             "referenced file not found: " + identity_file.string());
        }
    }

    MsnInput input;
    input.strata.resize(manifest.strata.size());
    std::vector<std::set<std::string>> vertices(manifest.strata.size());
    for (std::size_t si = 0; si < manifest.strata.size(); ++si) {
        input.strata[si].name = manifest.strata[si].name;
        for (const Line& line : read_lines(edge_files[si])) {
            std::vector<std::string> fields = split_tabs(line.text);
            if (fields.size() != 2) {
                throw ParseError(edge_files[si].string(), line.number,
                                 "expected 2 tab-separated fields, got " +
                                     std::to_string(fields.size()));
            }
            for (std::string& f : fields) {
                f = trim(f);
                if (f.empty()) {
                    throw ParseError(edge_files[si].string(), line.number, "empty vertex id");
                }
            }
            vertices[si].insert(fields[0]);
            vertices[si].insert(fields[1]);
            input.strata[si].arcs.emplace_back(fields[0], fields[1]);
            if (!manifest.directed) input.strata[si].arcs.emplace_back(fields[1], fields[0]);
        }
    }

    if (manifest.has_identity) {
        std::map<std::string, StratumIndex> stratum_of;
        for (StratumIndex si = 0; si < manifest.strata.size(); ++si) {
            stratum_of[manifest.strata[si].name] = si;
        }
        struct GroupEntry {
            StratumIndex stratum;
            std::string local;
            std::size_t line;
        };
        std::map<std::string, std::vector<GroupEntry>> groups;
        std::set<std::pair<StratumIndex, std::string>> seen;
        for (const Line& line : read_lines(identity_file)) {
            std::vector<std::string> fields = split_tabs(line.text);
            if (fields.size() != 3) {
                throw ParseError(identity_file.string(), line.number,
                                 "expected 3 tab-separated fields, got " +
                                     std::to_string(fields.size()));
            }
            std::string actor = trim(fields[0]);
            std::string stratum = trim(fields[1]);
            std::string local = trim(fields[2]);
            if (actor.empty() || stratum.empty() || local.empty()) {
                throw ParseError(identity_file.string(), line.number, "empty field");
            }
            auto found = stratum_of.find(stratum);
            if (found == stratum_of.end()) {
                throw ParseError(identity_file.string(), line.number,
                                 "unknown stratum '" + stratum + "'");
            }
            StratumIndex si = found->second;
            if (!seen.insert({si, local}).second) {
                throw ParseError(identity_file.string(), line.number,
                                 "account '" + stratum + ":" + local + "' listed twice");
            }
            vertices[si].insert(local);
            groups[actor].push_back({si, local, line.number});
            input.actor_hints.push_back({AccountRef{stratum, local}, actor});
        }
        for (const auto& [actor, entries] : groups) {
            bool multi_stratum = false;
            for (const GroupEntry& e : entries) {
                if (e.stratum != entries.front().stratum) {
                    multi_stratum = true;
                    break;
                }
            }
            if (entries.size() > 1 && !multi_stratum) {
                throw ParseError(identity_file.string(), entries.front().line,
                                 "actor '" + actor + "' has " + std::to_string(entries.size()) +
                                     " accounts, all in stratum '" +
                                     manifest.strata[entries.front().stratum].name +
                                     "'; cross-stratum identity cannot link them");
            }
            for (std::size_t i = 0; i < entries.size(); ++i) {
                for (std::size_t j = i + 1; j < entries.size(); ++j) {
                    if (entries[i].stratum == entries[j].stratum) continue;
                    input.identity_pairs.push_back(
                        {AccountRef{manifest.strata[entries[i].stratum].name, entries[i].local},
                         AccountRef{manifest.strata[entries[j].stratum].name, entries[j].local}});
                }
            }
        }
    }

    for (std::size_t si = 0; si < vertices.size(); ++si) {
        input.strata[si].vertices.assign(vertices[si].begin(), vertices[si].end());
    }

    BuildOptions build_options;
    build_options.dedupe_arcs = options.dedupe_arcs || manifest.deduplicate;
    return build_msn(input, build_options, warnings);
}

fs::path export_msn(const MultiStratumNetwork& net, const fs::path& directory,
                    const std::vector<std::string>& manifest_comments) {
    fs::create_directories(directory);

    std::vector<std::string> file_names(net.stratum_count());
    std::set<std::string> used{"manifest.msn", "identity.tsv"};
    for (StratumIndex si = 0; si < net.stratum_count(); ++si) {
        std::string stem = sanitize_filename(net.stratum(si).name());
        std::string candidate = stem + ".edges.tsv";
        for (std::size_t n = si; used.count(candidate); n += net.stratum_count()) {
            candidate = stem + "_" + std::to_string(n) + ".edges.tsv";
        }
        used.insert(candidate);
        file_names[si] = candidate;
    }

    for (StratumIndex si = 0; si < net.stratum_count(); ++si) {
        std::vector<std::string> lines;
        lines.reserve(net.stratum(si).arc_count());
        for (const auto& [u, v] : net.stratum(si).arcs()) {
            lines.push_back(net.account(u).local_id + "\t" + net.account(v).local_id);
        }
        std::sort(lines.begin(), lines.end());
        std::ofstream out = open_for_write(directory / file_names[si]);
        for (const std::string& line : lines) out << line << '\n';
    }

    {
        const ActorPartition& actors = net.actors();
        std::vector<std::string> lines;
        lines.reserve(net.account_count());
        for (ActorIndex a = 0; a < actors.size(); ++a) {
            for (AccountIndex member : actors.members(a)) {
                lines.push_back(actors.name(a) + "\t" + net.stratum(net.account(member).stratum).name() +
                                "\t" + net.account(member).local_id);
            }
        }
        std::sort(lines.begin(), lines.end());
        std::ofstream out = open_for_write(directory / "identity.tsv");
        for (const std::string& line : lines) out << line << '\n';
    }

    fs::path manifest_path = directory / "manifest.msn";
    std::ofstream out = open_for_write(manifest_path);
    for (const std::string& comment : manifest_comments) {
        std::string clean = comment;
        std::replace(clean.begin(), clean.end(), '\n', ' ');
        out << "# " << clean << '\n';
    }
    if (!manifest_comments.empty()) out << '\n';
    for (StratumIndex si = 0; si < net.stratum_count(); ++si) {
        out << "stratum = " << net.stratum(si).name() << " " << file_names[si] << '\n';
    }
    out << "identity_map = identity.tsv" << '\n';
    out << "directed = true" << '\n';
    return manifest_path;
}

void export_scatter_csv(const MultiStratumNetwork& net, StratumIndex s1, StratumIndex s2,
                        DegreeMode mode, std::ostream& out) {
    std::vector<ActorIndex> shared = shared_actors(net, s1, s2);
    out << "actor_id,rank_s1,rank_s2\n";
    if (shared.empty()) return;

    RankVector r1 = degree_ranking(net, s1, shared, mode);
    RankVector r2 = degree_ranking(net, s2, shared, mode);
    std::vector<std::size_t> order(shared.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const ActorPartition& actors = net.actors();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return actors.name(shared[a]) < actors.name(shared[b]);
    });
    for (std::size_t i : order) {
        out << csv_field(actors.name(shared[i])) << "," << shortest_double(r1.ranks[i]) << ","
            << shortest_double(r2.ranks[i]) << "\n";
    }
}

void export_scatter_csv(const MultiStratumNetwork& net, StratumIndex s1, StratumIndex s2,
                        DegreeMode mode, const fs::path& path) {
    std::ofstream out = open_for_write(path);
    export_scatter_csv(net, s1, s2, mode, out);
}

void export_bounds_csv(const MultiStratumNetwork& net, DegreeMode mode, LowerRule rule,
                       std::ostream& out) {
    std::vector<DegreeBounds> bounds = all_degree_bounds(net, mode, rule);
    const ActorPartition& actors = net.actors();
    std::vector<ActorIndex> order(actors.size());
    for (ActorIndex a = 0; a < actors.size(); ++a) order[a] = a;
    std::sort(order.begin(), order.end(), [&](ActorIndex a, ActorIndex b) {
        if (bounds[a].actual != bounds[b].actual) return bounds[a].actual < bounds[b].actual;
        return actors.name(a) < actors.name(b);
    });
    out << "actor_id,lower,actual,upper,rel_uncertainty\n";
    for (ActorIndex a : order) {
        out << csv_field(actors.name(a)) << "," << bounds[a].lower << "," << bounds[a].actual
            << "," << bounds[a].upper << "," << shortest_double(bounds[a].rel_uncertainty)
            << "\n";
    }
}

void export_bounds_csv(const MultiStratumNetwork& net, DegreeMode mode, LowerRule rule,
                       const fs::path& path) {
    std::ofstream out = open_for_write(path);
    export_bounds_csv(net, mode, rule, out);
}

}  // namespace msn
