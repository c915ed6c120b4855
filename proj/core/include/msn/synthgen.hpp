#ifndef MSN_SYNTHGEN_HPP
#define MSN_SYNTHGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "msn/msn.hpp"

namespace msn {

/// Parameters of the synthetic pillar generator.
///
/// Stratum 1 is a directed G(n, base_p) over its active actors. Every later
/// stratum copies each stratum-1 arc (when both endpoints are active there)
/// with probability theta and adds its own arcs with probability extra_q.
/// Copying couples the degree sequences directly, so the complementarity
/// index grows monotonically with theta: theta 0 gives independent strata,
/// theta 1 (with extra_q 0) identical ones.
struct PillarGenSpec {
    std::uint64_t n = 0;            // actor count
    std::uint32_t k = 1;            // stratum count, named S1..Sk
    double base_p = 0.0;            // arc probability of stratum 1
    double theta = 0.0;             // per-stratum copy probability of stratum-1 arcs
    double extra_q = 0.0;           // independent arc probability of later strata
    std::vector<double> activity;   // per-stratum account probability; empty = all 1
    std::uint64_t seed = 0;

    /// Activity of stratum i after defaulting/broadcasting.
    double activity_for(std::uint32_t stratum) const;
};

/// Throws InvalidSpecError if a probability is outside [0, 1], k is 0, or
/// activity has neither length 1 nor k.
void validate(const PillarGenSpec& spec);

/// Deterministic for a fixed spec and seed within one library version
/// (single mt19937_64 stream, documented draw order in the implementation).
/// The output always validates and is a pillar: one account per active
/// actor per stratum, identity pairs linking all accounts of each actor.
MultiStratumNetwork generate_pillar(const PillarGenSpec& spec);

/// One-line parameter echo, also embedded in exported manifests.
std::string describe(const PillarGenSpec& spec);

}  // namespace msn

#endif  // MSN_SYNTHGEN_HPP
