#include "msn/derived.hpp"

#include <algorithm>

namespace msn {

namespace {

void finish(Digraph& g) {
    std::sort(g.arcs.begin(), g.arcs.end());
    g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
    g.out.assign(g.vertex_count, {});
    g.in.assign(g.vertex_count, {});
    for (const auto& [u, v] : g.arcs) {
        g.out[u].push_back(v);
        g.in[v].push_back(u);
    }
    for (auto& nbrs : g.in) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace

FlatGraph flat(const MultiStratumNetwork& net) {
    FlatGraph fg;
    fg.vertex_count = net.account_count();
    fg.arcs.reserve(net.total_arc_count() + 2 * net.identity_pairs().size());
    for (const Stratum& stratum : net.strata()) {
        fg.arcs.insert(fg.arcs.end(), stratum.arcs().begin(), stratum.arcs().end());
    }
    for (const IdentityPair& p : net.identity_pairs()) {
        fg.arcs.emplace_back(p.a, p.b);
        fg.arcs.emplace_back(p.b, p.a);
    }
    finish(fg);
    return fg;
}

MergedGraph merge(const MultiStratumNetwork& net) {
    const ActorPartition& actors = net.actors();
    MergedGraph mg;
    mg.vertex_count = actors.size();
    for (const Stratum& stratum : net.strata()) {
        for (const auto& [u, v] : stratum.arcs()) {
            ActorIndex a = actors.actor_of(u);
            ActorIndex b = actors.actor_of(v);
            if (a == b) continue;  // an actor is not its own audience
            mg.arcs.emplace_back(a, b);
        }
    }
    finish(mg);
    return mg;
}

}  // namespace msn
