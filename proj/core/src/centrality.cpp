#include "msn/centrality.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <set>

#include "msn/parallel.hpp"
#include "msn/union_find.hpp"

namespace msn {

namespace {

constexpr std::uint32_t kUnreached = kInvalidIndex;

std::size_t union_count(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++i;
            ++j;
        }
        ++count;
    }
    return count + (a.size() - i) + (b.size() - j);
}

int degree_by_mode(const std::vector<std::uint32_t>& in, const std::vector<std::uint32_t>& out,
                   DegreeMode mode) {
    switch (mode) {
        case DegreeMode::In:
            return static_cast<int>(in.size());
        case DegreeMode::Out:
            return static_cast<int>(out.size());
        case DegreeMode::All:
            return static_cast<int>(union_count(in, out));
    }
    return 0;
}

// Multi-source BFS over an out-adjacency structure spanning `n` vertices.
std::vector<std::uint32_t> bfs_dist(std::size_t n,
                                    const std::vector<std::vector<std::uint32_t>>& out,
                                    const std::vector<AccountIndex>& sources) {
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : sources) {
        if (dist[s] == kUnreached) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : out[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// Single-source BFS that also counts geodesics per vertex.
struct BfsCounts {
    std::vector<std::uint32_t> dist;
    std::vector<std::uint64_t> sigma;
};

BfsCounts bfs_with_counts(std::size_t n, const std::vector<std::vector<std::uint32_t>>& out,
                          std::uint32_t source) {
    BfsCounts r{std::vector<std::uint32_t>(n, kUnreached), std::vector<std::uint64_t>(n, 0)};
    r.dist[source] = 0;
    r.sigma[source] = 1;
    std::deque<std::uint32_t> queue{source};
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : out[u]) {
            if (r.dist[v] == kUnreached) {
                r.dist[v] = r.dist[u] + 1;
                queue.push_back(v);
            }
            if (r.dist[v] == r.dist[u] + 1) r.sigma[v] += r.sigma[u];
        }
    }
    return r;
}

std::vector<Distance> account_to_actor_min(const std::vector<std::uint32_t>& account_dist,
                                           const ActorPartition& actors) {
    std::vector<Distance> result(actors.size(), Distance::unreachable());
    for (AccountIndex acc = 0; acc < account_dist.size(); ++acc) {
        if (account_dist[acc] == kUnreached) continue;
        ActorIndex a = actors.actor_of(acc);
        result[a] = min(result[a], Distance::hops(account_dist[acc]));
    }
    return result;
}

void require_actor(const MultiStratumNetwork& net, ActorIndex actor) {
    if (actor >= net.actors().size()) {
        throw UnknownActorError("#" + std::to_string(actor));
    }
}

// Components ordered largest first, ties by smallest member.
std::vector<std::vector<std::uint32_t>> order_components(
    std::vector<std::vector<std::uint32_t>> comps) {
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

std::vector<std::vector<std::uint32_t>> group_by_root(std::size_t n, UnionFind& uf) {
    std::vector<std::vector<std::uint32_t>> groups(n);
    for (std::uint32_t v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<std::uint32_t>> comps;
    for (auto& g : groups) {
        if (!g.empty()) comps.push_back(std::move(g));
    }
    return comps;
}

}  // namespace

// --- degree ---------------------------------------------------------------

int stratum_degree(const MultiStratumNetwork& net, const Stratum& stratum, AccountIndex account,
                   DegreeMode mode) {
    if (account >= net.account_count() || !stratum.contains(account)) {
        std::string local =
            account < net.account_count() ? net.account(account).local_id : "#" + std::to_string(account);
        throw UnknownAccountError(stratum.name(), local);
    }
    return degree_by_mode(stratum.in_neighbors(account), stratum.out_neighbors(account), mode);
}

std::vector<int> all_ms_degrees(const MergedGraph& merged, DegreeMode mode) {
    std::vector<int> degrees(merged.vertex_count);
    for (std::uint32_t v = 0; v < merged.vertex_count; ++v) {
        degrees[v] = degree_by_mode(merged.in[v], merged.out[v], mode);
    }
    return degrees;
}

int ms_degree(const MultiStratumNetwork& net, ActorIndex actor, DegreeMode mode) {
    require_actor(net, actor);
    MergedGraph merged = merge(net);
    return degree_by_mode(merged.in[actor], merged.out[actor], mode);
}

std::vector<int> stratum_actor_degrees(const MultiStratumNetwork& net, StratumIndex stratum,
                                       DegreeMode mode) {
    const ActorPartition& actors = net.actors();
    std::vector<std::vector<std::uint32_t>> in(actors.size()), out(actors.size());
    for (const auto& [u, v] : net.stratum(stratum).arcs()) {
        ActorIndex a = actors.actor_of(u);
        ActorIndex b = actors.actor_of(v);
        if (a == b) continue;  // ties inside one identity do not add audience
        out[a].push_back(b);
        in[b].push_back(a);
    }
    std::vector<int> degrees(actors.size());
    for (ActorIndex a = 0; a < actors.size(); ++a) {
        std::sort(in[a].begin(), in[a].end());
        in[a].erase(std::unique(in[a].begin(), in[a].end()), in[a].end());
        std::sort(out[a].begin(), out[a].end());
        out[a].erase(std::unique(out[a].begin(), out[a].end()), out[a].end());
        degrees[a] = degree_by_mode(in[a], out[a], mode);
    }
    return degrees;
}

std::vector<DegreeBounds> all_degree_bounds(const MultiStratumNetwork& net, DegreeMode mode,
                                            LowerRule rule) {
    const std::size_t n_actors = net.actors().size();
    std::vector<std::vector<int>> per_stratum(net.stratum_count());
    for (StratumIndex s = 0; s < net.stratum_count(); ++s) {
        per_stratum[s] = stratum_actor_degrees(net, s, mode);
    }
    std::vector<int> actual = all_ms_degrees(merge(net), mode);

    std::vector<DegreeBounds> bounds(n_actors);
    for (ActorIndex a = 0; a < n_actors; ++a) {
        DegreeBounds& b = bounds[a];
        b.per_stratum.resize(net.stratum_count());
        for (StratumIndex s = 0; s < net.stratum_count(); ++s) {
            int delta = per_stratum[s][a];
            b.per_stratum[s] = delta;
            b.upper += delta;
            if (rule == LowerRule::Max) {
                b.lower = std::max(b.lower, delta);
            } else if (delta > 0 && (b.lower == 0 || delta < b.lower)) {
                b.lower = delta;
            }
        }
        b.actual = actual[a];
        b.rel_uncertainty = b.upper > 0 ? double(b.upper - b.lower) / double(b.upper) : 0.0;
    }
    return bounds;
}

DegreeBounds degree_bounds(const MultiStratumNetwork& net, ActorIndex actor, DegreeMode mode,
                           LowerRule rule) {
    require_actor(net, actor);
    return all_degree_bounds(net, mode, rule)[actor];
}

// --- distances ------------------------------------------------------------

std::vector<Distance> distances_from(const FlatGraph& fg, const ActorPartition& actors,
                                     ActorIndex a) {
    return account_to_actor_min(bfs_dist(fg.vertex_count, fg.out, actors.members(a)), actors);
}

namespace {

// 0-1 BFS: stratum arcs cost 1, identity arcs cost 0.
std::vector<Distance> free_identity_distances(const MultiStratumNetwork& net, ActorIndex a) {
    const std::size_t n = net.account_count();
    std::vector<std::vector<std::uint32_t>> zero_adj(n);
    for (const IdentityPair& p : net.identity_pairs()) {
        zero_adj[p.a].push_back(p.b);
        zero_adj[p.b].push_back(p.a);
    }
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::deque<std::uint32_t> queue;
    for (AccountIndex s : net.actors().members(a)) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : zero_adj[u]) {
            if (dist[u] < dist[v]) {
                dist[v] = dist[u];
                queue.push_front(v);
            }
        }
        for (std::uint32_t v : net.stratum(net.account(u).stratum).out_neighbors(u)) {
            if (dist[u] + 1 < dist[v]) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return account_to_actor_min(dist, net.actors());
}

}  // namespace

std::vector<Distance> distances_from(const MultiStratumNetwork& net, ActorIndex a,
                                     IdentityHopCost cost) {
    require_actor(net, a);
    if (cost == IdentityHopCost::Zero) return free_identity_distances(net, a);
    return distances_from(flat(net), net.actors(), a);
}

Distance actor_distance(const MultiStratumNetwork& net, ActorIndex a, ActorIndex b,
                        IdentityHopCost cost) {
    require_actor(net, a);
    require_actor(net, b);
    return distances_from(net, a, cost)[b];
}

std::vector<Distance> stratum_distances_from(const MultiStratumNetwork& net, StratumIndex stratum,
                                             ActorIndex a) {
    require_actor(net, a);
    const Stratum& st = net.stratum(stratum);
    std::vector<AccountIndex> sources;
    for (AccountIndex member : net.actors().members(a)) {
        if (net.account(member).stratum == stratum) sources.push_back(member);
    }
    std::vector<std::uint32_t> dist(net.account_count(), kUnreached);
    if (!sources.empty()) {
        // adjacency spans all accounts; the arcs keep the walk inside the stratum
        dist = bfs_dist(net.account_count(), st.out_adjacency(), sources);
    }
    return account_to_actor_min(dist, net.actors());
}

Distance stratum_distance(const MultiStratumNetwork& net, StratumIndex stratum, ActorIndex a,
                          ActorIndex b) {
    require_actor(net, b);
    return stratum_distances_from(net, stratum, a)[b];
}

// --- closeness ------------------------------------------------------------

double ms_closeness(const MultiStratumNetwork& net, ActorIndex actor) {
    require_actor(net, actor);
    const std::size_t n = net.actors().size();
    if (n < 2) return 0.0;
    std::vector<Distance> dist = distances_from(net, actor);
    double sum = 0.0;
    for (ActorIndex b = 0; b < n; ++b) {
        if (b == actor || !dist[b].reachable()) continue;
        sum += 1.0 / double(dist[b].value());
    }
    return sum / double(n - 1);
}

std::vector<double> all_ms_closeness(const MultiStratumNetwork& net) {
    const std::size_t n = net.actors().size();
    std::vector<double> result(n, 0.0);
    if (n < 2) return result;
    FlatGraph fg = flat(net);
    const ActorPartition& actors = net.actors();
    parallel_for(n, [&](std::size_t a) {
        std::vector<Distance> dist = distances_from(fg, actors, static_cast<ActorIndex>(a));
        double sum = 0.0;
        for (ActorIndex b = 0; b < n; ++b) {
            if (b == a || !dist[b].reachable()) continue;
            sum += 1.0 / double(dist[b].value());
        }
        result[a] = sum / double(n - 1);
    });
    return result;
}

// --- betweenness ----------------------------------------------------------

namespace {

struct PathTables {
    std::vector<std::vector<std::uint32_t>> fwd_dist;  // [source account][target]
    std::vector<std::vector<std::uint64_t>> fwd_sigma;
    std::vector<std::vector<std::uint32_t>> rev_dist;  // [target account][source]
    std::vector<std::vector<std::uint64_t>> rev_sigma;
};

// Geodesics from u to v (original length) avoiding `blocked` accounts.
// Walks u's shortest-path DAG in distance order with blocked vertices
// contributing nothing; endpoints are never blocked by the caller.
std::uint64_t count_avoiding(const FlatGraph& fg, const std::vector<std::uint32_t>& dist_u,
                             std::uint32_t u, std::uint32_t v,
                             const std::vector<bool>& blocked) {
    const std::uint32_t d = dist_u[v];
    std::vector<std::vector<std::uint32_t>> layers(d + 1);
    for (std::uint32_t w = 0; w < fg.vertex_count; ++w) {
        if (dist_u[w] <= d && dist_u[w] != kUnreached) layers[dist_u[w]].push_back(w);
    }
    std::vector<std::uint64_t> sigma(fg.vertex_count, 0);
    sigma[u] = 1;
    for (std::uint32_t level = 0; level < d; ++level) {
        for (std::uint32_t x : layers[level]) {
            if (sigma[x] == 0 || blocked[x]) continue;
            for (std::uint32_t y : fg.out[x]) {
                if (dist_u[y] == level + 1 && !blocked[y]) sigma[y] += sigma[x];
            }
        }
    }
    return sigma[v];
}

}  // namespace

std::vector<double> ms_betweenness(const MultiStratumNetwork& net) {
    const ActorPartition& actors = net.actors();
    const std::size_t n_actors = actors.size();
    const std::size_t n_accounts = net.account_count();
    std::vector<double> total(n_actors, 0.0);
    if (n_actors < 3 || n_accounts == 0) return total;

    // Exact path counting needs all-pairs tables; refuse sizes that would
    // not fit comfortably in memory.
    const std::size_t table_bytes = n_accounts * n_accounts * (4 + 8) * 2;
    if (table_bytes > (std::size_t{512} << 20)) {
        throw MsnError("network too large for exact betweenness (" +
                       std::to_string(n_accounts) + " accounts)");
    }

    FlatGraph fg = flat(net);
    PathTables tables;
    tables.fwd_dist.resize(n_accounts);
    tables.fwd_sigma.resize(n_accounts);
    tables.rev_dist.resize(n_accounts);
    tables.rev_sigma.resize(n_accounts);
    parallel_for(n_accounts, [&](std::size_t acc) {
        auto fwd = bfs_with_counts(n_accounts, fg.out, static_cast<std::uint32_t>(acc));
        tables.fwd_dist[acc] = std::move(fwd.dist);
        tables.fwd_sigma[acc] = std::move(fwd.sigma);
        auto rev = bfs_with_counts(n_accounts, fg.in, static_cast<std::uint32_t>(acc));
        tables.rev_dist[acc] = std::move(rev.dist);
        tables.rev_sigma[acc] = std::move(rev.sigma);
    });

    std::vector<bool> multi_account(n_actors);
    for (ActorIndex a = 0; a < n_actors; ++a) multi_account[a] = actors.members(a).size() > 1;

    // Per-source contributions are computed in parallel blocks but merged
    // in fixed source order, so the float sums are reproducible.
    const std::size_t block = 64;
    std::vector<std::vector<double>> partial(std::min(block, n_actors));
    for (std::size_t base = 0; base < n_actors; base += block) {
        const std::size_t count = std::min(block, n_actors - base);
        parallel_for(count, [&](std::size_t off) {
            const ActorIndex s = static_cast<ActorIndex>(base + off);
            std::vector<double>& contrib = partial[off];
            contrib.assign(n_actors, 0.0);
            const std::vector<AccountIndex>& src_accounts = actors.members(s);

            std::vector<std::uint32_t> candidates;
            std::vector<bool> blocked(n_accounts, false);
            for (ActorIndex t = 0; t < n_actors; ++t) {
                if (t == s) continue;
                // distance and best representative pairs
                std::uint32_t d = kUnreached;
                for (AccountIndex u : src_accounts) {
                    for (AccountIndex v : actors.members(t)) {
                        d = std::min(d, tables.fwd_dist[u][v]);
                    }
                }
                if (d == kUnreached || d == 0) continue;
                std::vector<std::pair<AccountIndex, AccountIndex>> best;
                std::uint64_t sigma_st = 0;
                for (AccountIndex u : src_accounts) {
                    for (AccountIndex v : actors.members(t)) {
                        if (tables.fwd_dist[u][v] == d) {
                            best.emplace_back(u, v);
                            sigma_st += tables.fwd_sigma[u][v];
                        }
                    }
                }
                if (sigma_st == 0) continue;

                // interior actors touched by at least one best geodesic
                candidates.clear();
                for (std::uint32_t w = 0; w < n_accounts; ++w) {
                    ActorIndex c = actors.actor_of(w);
                    if (c == s || c == t) continue;
                    for (const auto& [u, v] : best) {
                        std::uint32_t du = tables.fwd_dist[u][w];
                        std::uint32_t dv = tables.rev_dist[v][w];
                        if (du != kUnreached && dv != kUnreached && du > 0 && dv > 0 &&
                            du + dv == d) {
                            candidates.push_back(c);
                            break;
                        }
                    }
                }
                std::sort(candidates.begin(), candidates.end());
                candidates.erase(std::unique(candidates.begin(), candidates.end()),
                                 candidates.end());

                for (ActorIndex c : candidates) {
                    std::uint64_t sigma_c = 0;
                    if (!multi_account[c]) {
                        // a geodesic meets a single vertex at most once
                        const AccountIndex w = actors.members(c).front();
                        for (const auto& [u, v] : best) {
                            std::uint32_t du = tables.fwd_dist[u][w];
                            std::uint32_t dv = tables.rev_dist[v][w];
                            if (du != kUnreached && dv != kUnreached && du + dv == d) {
                                sigma_c += tables.fwd_sigma[u][w] * tables.rev_sigma[v][w];
                            }
                        }
                    } else {
                        for (AccountIndex w : actors.members(c)) blocked[w] = true;
                        std::uint64_t avoided = 0;
                        for (const auto& [u, v] : best) {
                            avoided += count_avoiding(fg, tables.fwd_dist[u], u, v, blocked);
                        }
                        for (AccountIndex w : actors.members(c)) blocked[w] = false;
                        sigma_c = sigma_st - avoided;
                    }
                    if (sigma_c > 0) contrib[c] += double(sigma_c) / double(sigma_st);
                }
            }
        });
        for (std::size_t off = 0; off < count; ++off) {
            for (ActorIndex c = 0; c < n_actors; ++c) total[c] += partial[off][c];
        }
    }
    return total;
}

// --- components -----------------------------------------------------------

std::vector<std::vector<std::uint32_t>> weak_components(const Digraph& graph) {
    UnionFind uf(graph.vertex_count);
    for (const auto& [u, v] : graph.arcs) uf.unite(u, v);
    return order_components(group_by_root(graph.vertex_count, uf));
}

std::vector<std::vector<AccountIndex>> stratum_weak_components(const MultiStratumNetwork& net,
                                                               StratumIndex stratum) {
    const Stratum& st = net.stratum(stratum);
    const auto& members = st.members();
    std::vector<std::uint32_t> local_of(net.account_count(), kInvalidIndex);
    for (std::uint32_t i = 0; i < members.size(); ++i) local_of[members[i]] = i;

    UnionFind uf(members.size());
    for (const auto& [u, v] : st.arcs()) uf.unite(local_of[u], local_of[v]);
    auto comps = order_components(group_by_root(members.size(), uf));
    // back to global account indices; members() is ascending so order survives
    for (auto& comp : comps) {
        for (auto& v : comp) v = members[v];
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

std::vector<std::vector<std::uint32_t>> strong_components(const Digraph& graph) {
    // Iterative Tarjan; recursion would overflow on long paths.
    const std::uint32_t n = static_cast<std::uint32_t>(graph.vertex_count);
    std::vector<std::uint32_t> index(n, kInvalidIndex), lowlink(n), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<std::uint32_t>> comps;
    std::uint32_t next_index = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t child;
    };
    std::vector<Frame> call;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kInvalidIndex) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& frame = call.back();
            std::uint32_t v = frame.v;
            if (frame.child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (frame.child < graph.out[v].size()) {
                std::uint32_t w = graph.out[v][frame.child++];
                if (index[w] == kInvalidIndex) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<std::uint32_t> comp;
                for (;;) {
                    std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
            }
        }
    }
    return order_components(std::move(comps));
}

std::size_t giant_component_size(const std::vector<std::vector<std::uint32_t>>& components) {
    return components.empty() ? 0 : components.front().size();
}

// --- distance profiles ----------------------------------------------------

DistanceProfile avg_distance_profile(const MultiStratumNetwork& net, ActorIndex actor,
                                     const std::vector<StratumIndex>& strata_subset) {
    require_actor(net, actor);
    if (strata_subset.empty()) throw MsnError("avg_distance_profile: empty strata subset");

    std::vector<StratumIndex> subset = strata_subset;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

    DistanceProfile profile;
    profile.actor = actor;

    std::vector<std::vector<Distance>> rows;
    rows.reserve(subset.size());
    for (StratumIndex s : subset) rows.push_back(stratum_distances_from(net, s, actor));

    // scope: other actors reachable in every chosen stratum
    for (ActorIndex b = 0; b < net.actors().size(); ++b) {
        if (b == actor) continue;
        bool everywhere = true;
        for (const auto& row : rows) {
            if (!row[b].reachable()) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) profile.scope.push_back(b);
    }

    for (std::size_t i = 0; i < subset.size(); ++i) {
        double sum = 0.0;
        for (ActorIndex b : profile.scope) sum += double(rows[i][b].value());
        profile.per_stratum_avg[subset[i]] =
            profile.scope.empty() ? 0.0 : sum / double(profile.scope.size());
    }

    std::vector<Distance> msn_row = distances_from(net, actor);
    double sum = 0.0;
    for (ActorIndex b : profile.scope) sum += double(msn_row[b].value());
    profile.msn_avg = profile.scope.empty() ? 0.0 : sum / double(profile.scope.size());
    return profile;
}

}  // namespace msn
