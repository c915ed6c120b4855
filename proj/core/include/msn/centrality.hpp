#ifndef MSN_CENTRALITY_HPP
#define MSN_CENTRALITY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "msn/derived.hpp"
#include "msn/msn.hpp"
#include "msn/types.hpp"

namespace msn {

// --- degree ---------------------------------------------------------------

/// Distinct-neighbour degree of one account inside one stratum.
/// Throws UnknownAccountError if the account is not in the stratum.
int stratum_degree(const MultiStratumNetwork& net, const Stratum& stratum,
                   AccountIndex account, DegreeMode mode);

/// Multi-stratum degree: the actor's degree in merge(net), i.e. distinct
/// real identities connected, across every stratum at once.
int ms_degree(const MultiStratumNetwork& net, ActorIndex actor, DegreeMode mode);

/// Degrees of all actors in an already-built merged graph.
std::vector<int> all_ms_degrees(const MergedGraph& merged, DegreeMode mode);

/// Per-stratum degree of every actor: distinct neighbouring *actors*
/// reached through arcs of that stratum (own accounts excluded). For a
/// pillar network this equals the plain degree of the actor's account
/// there. Actors with no account in the stratum get 0.
std::vector<int> stratum_actor_degrees(const MultiStratumNetwork& net,
                                       StratumIndex stratum, DegreeMode mode);

/// Which lower bound to report for the degree interval. Max is tight
/// (every stratum's neighbours are distinct identities, so the actor has at
/// least max_i of them); MinNonzero reproduces the interval floor of the
/// original min-over-strata formulation, restricted to strata the actor is
/// active on so single-stratum actors keep a zero-width interval.
enum class LowerRule { Max, MinNonzero };

/// The interval the multi-stratum degree must lie in when only the
/// per-stratum degrees are known, plus the actual value and the relative
/// width of the interval.
struct DegreeBounds {
    std::vector<int> per_stratum;  // delta_i per stratum
    int lower = 0;
    int upper = 0;                 // sum of per_stratum
    int actual = 0;                // ms_degree
    double rel_uncertainty = 0.0;  // (upper - lower) / upper, 0 when upper == 0
};

DegreeBounds degree_bounds(const MultiStratumNetwork& net, ActorIndex actor,
                           DegreeMode mode, LowerRule rule = LowerRule::Max);

/// Bounds for every actor at once (one pass over each stratum's arcs).
std::vector<DegreeBounds> all_degree_bounds(const MultiStratumNetwork& net,
                                            DegreeMode mode,
                                            LowerRule rule = LowerRule::Max);

// --- distances ------------------------------------------------------------

/// What moving between two accounts of one identity costs. Every other
/// metric here uses One (the identity arcs of flat are real hops); Zero
/// treats switching platform as free and is offered for distance queries
/// only.
enum class IdentityHopCost { One, Zero };

/// Minimum over representatives of the two actors of the directed
/// shortest-path length in flat(net); crossing an identity arc costs one
/// hop (or none under IdentityHopCost::Zero). actor_distance(a, a) is 0.
Distance actor_distance(const MultiStratumNetwork& net, ActorIndex a, ActorIndex b,
                        IdentityHopCost cost = IdentityHopCost::One);

/// Single-source form: distances from `a` to every actor (index = actor),
/// computed by one multi-source BFS from all of a's accounts.
std::vector<Distance> distances_from(const MultiStratumNetwork& net, ActorIndex a,
                                     IdentityHopCost cost = IdentityHopCost::One);
std::vector<Distance> distances_from(const FlatGraph& fg, const ActorPartition& actors,
                                     ActorIndex a);

/// Distance between two actors using only arcs of one stratum.
Distance stratum_distance(const MultiStratumNetwork& net, StratumIndex stratum,
                          ActorIndex a, ActorIndex b);

/// Single-source within-stratum distances to every actor.
std::vector<Distance> stratum_distances_from(const MultiStratumNetwork& net,
                                             StratumIndex stratum, ActorIndex a);

// --- closeness / betweenness ----------------------------------------------

/// Harmonic closeness: mean inverse distance to the other actors, with
/// unreachable contributing 0. In [0, 1]; 1 iff everyone else is one hop
/// away. Defined as 0 when the network has fewer than two actors.
double ms_closeness(const MultiStratumNetwork& net, ActorIndex actor);

std::vector<double> all_ms_closeness(const MultiStratumNetwork& net);

/// Exact multi-stratum betweenness for every actor.
///
/// For each ordered actor pair (s, t) with finite distance d, the geodesics
/// counted are all shortest account paths in flat(net) between best
/// representatives (account pairs realizing d). An actor a outside {s, t}
/// is credited the fraction of those geodesics whose interior touches any
/// of a's accounts; touching twice (e.g. entering one account and leaving
/// through another via an identity arc) still counts the path once.
///
/// Path counting is exact, so this is meant for desk-scale graphs; inputs
/// whose distance tables would exceed ~512 MiB are rejected with MsnError.
std::vector<double> ms_betweenness(const MultiStratumNetwork& net);

// --- components -----------------------------------------------------------

/// Weakly connected components of any derived graph, largest first (ties by
/// smallest vertex); members sorted ascending.
std::vector<std::vector<std::uint32_t>> weak_components(const Digraph& graph);

/// Strongly connected components, same ordering conventions.
std::vector<std::vector<std::uint32_t>> strong_components(const Digraph& graph);

/// Components of one stratum's subgraph, over account indices.
std::vector<std::vector<AccountIndex>> stratum_weak_components(
    const MultiStratumNetwork& net, StratumIndex stratum);

/// Size of the largest component, 0 for an empty graph.
std::size_t giant_component_size(const std::vector<std::vector<std::uint32_t>>& components);

// --- distance profiles ----------------------------------------------------

/// Average-distance comparison for one actor: the scope is every other
/// actor reachable from it in *each* of the chosen strata, and the averages
/// compare within-stratum distances with the multi-stratum distance over
/// that same scope.
struct DistanceProfile {
    ActorIndex actor = 0;
    std::map<StratumIndex, double> per_stratum_avg;
    double msn_avg = 0.0;
    std::vector<ActorIndex> scope;  // sorted; empty scope yields all-zero averages
};

DistanceProfile avg_distance_profile(const MultiStratumNetwork& net, ActorIndex actor,
                                     const std::vector<StratumIndex>& strata_subset);

}  // namespace msn

#endif  // MSN_CENTRALITY_HPP
