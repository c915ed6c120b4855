#ifndef MSN_COMPLEMENTARITY_HPP
#define MSN_COMPLEMENTARITY_HPP

#include <utility>
#include <vector>

#include "msn/centrality.hpp"
#include "msn/msn.hpp"

namespace msn {

/// Fractional degree ranking of a set of actors inside one stratum.
/// Ranks ascend with degree, starting at 1; ties share the average of
/// their positions (so degrees (5, 5, 3) rank as (2.5, 2.5, 1)).
struct RankVector {
    StratumIndex stratum = 0;
    std::vector<ActorIndex> actors;  // shared, canonical order
    std::vector<double> ranks;       // aligned with actors
};

/// Ranks `actor_set` by per-stratum degree. Actors without an account in
/// the stratum rank with degree 0 rather than being excluded.
/// Throws EmptyActorSetError.
RankVector degree_ranking(const MultiStratumNetwork& net, StratumIndex stratum,
                          std::vector<ActorIndex> actor_set, DegreeMode mode);

/// Sample Pearson correlation, clamped to [-1, 1].
/// Throws LengthMismatchError (unequal or < 2 entries) or ZeroVarianceError.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Network Complementarity Index between two strata: near 1 the strata
/// serve the same social function, near 0 they complement each other.
struct NciResult {
    std::pair<StratumIndex, StratumIndex> strata;
    double value = 0.0;
    std::size_t n = 0;  // shared actors compared
};

/// Pearson correlation of the two degree rankings over the actors present
/// on both strata. Symmetric in its arguments.
/// Throws InsufficientOverlapError (< 2 shared actors) or ZeroVarianceError.
NciResult nci(const MultiStratumNetwork& net, StratumIndex s1, StratumIndex s2,
              DegreeMode mode);

/// The actors owning at least one account on both strata, ascending.
std::vector<ActorIndex> shared_actors(const MultiStratumNetwork& net, StratumIndex s1,
                                      StratumIndex s2);

}  // namespace msn

#endif  // MSN_COMPLEMENTARITY_HPP
