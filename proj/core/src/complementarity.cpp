#include "msn/complementarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace msn {

namespace {

/// Fractional ranks of `values`, ascending from 1, ties averaged.
std::vector<double> fractional_ranks(const std::vector<int>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (1-based i+1..j+1) share one tied value
        double rank = double(i + j + 2) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

RankVector degree_ranking(const MultiStratumNetwork& net, StratumIndex stratum,
                          std::vector<ActorIndex> actor_set, DegreeMode mode) {
    if (actor_set.empty()) throw EmptyActorSetError();
    std::vector<int> degrees_all = stratum_actor_degrees(net, stratum, mode);

    RankVector rv;
    rv.stratum = stratum;
    rv.actors = std::move(actor_set);
    std::vector<int> degrees(rv.actors.size());
    for (std::size_t i = 0; i < rv.actors.size(); ++i) degrees[i] = degrees_all[rv.actors[i]];
    rv.ranks = fractional_ranks(degrees);
    return rv;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw LengthMismatchError(x.size(), y.size());
    const double n = double(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw ZeroVarianceError();
    // One sqrt over the product, so x == y gives sxy / sqrt(sxy^2) == 1.0
    // exactly rather than a value an ulp short of it.
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<ActorIndex> shared_actors(const MultiStratumNetwork& net, StratumIndex s1,
                                      StratumIndex s2) {
    const ActorPartition& actors = net.actors();
    std::vector<ActorIndex> shared;
    for (ActorIndex a = 0; a < actors.size(); ++a) {
        bool on1 = false, on2 = false;
        for (AccountIndex acc : actors.members(a)) {
            StratumIndex s = net.account(acc).stratum;
            on1 = on1 || s == s1;
            on2 = on2 || s == s2;
        }
        if (on1 && on2) shared.push_back(a);
    }
    return shared;
}

NciResult nci(const MultiStratumNetwork& net, StratumIndex s1, StratumIndex s2,
              DegreeMode mode) {
    std::vector<ActorIndex> shared = shared_actors(net, s1, s2);
    if (shared.size() < 2) {
        throw InsufficientOverlapError(net.stratum(s1).name(), net.stratum(s2).name(),
                                       shared.size());
    }
    RankVector r1 = degree_ranking(net, s1, shared, mode);
    RankVector r2 = degree_ranking(net, s2, std::move(shared), mode);

    NciResult result;
    result.strata = {s1, s2};
    result.n = r1.actors.size();
    result.value = pearson(r1.ranks, r2.ranks);
    return result;
}

}  // namespace msn
