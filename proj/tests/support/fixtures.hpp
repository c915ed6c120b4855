#ifndef MSN_TEST_FIXTURES_HPP
#define MSN_TEST_FIXTURES_HPP

#include <random>

#include "msn/msn.hpp"

namespace msn_test {

/// User C connected to the same three people on both strata: ms_degree 3.
msn::MultiStratumNetwork degree_left_fixture();

/// User C with two connections per stratum, audiences disjoint: ms_degree 4.
msn::MultiStratumNetwork degree_right_fixture();

/// S1 arc a1->b1, S2 arc b2->c2, identity b1~b2. d(A, C) = 3.
msn::MultiStratumNetwork toy_chain_fixture();

/// Four users on two strata where A reaches D only through the chain
/// A A' B' B C C' D' D; within each single stratum A and D are disconnected.
msn::MultiStratumNetwork reachability_fixture();

/// Two triads, one per stratum, joined only through E's two accounts; E is
/// on no within-stratum geodesic but on every cross-community one.
msn::MultiStratumNetwork bridge_fixture();

/// Three actors, two strata, at most one account each: a minimal pillar.
msn::MultiStratumNetwork pillar_triangle_fixture();

/// A random small network together with the raw input it was built from,
/// so oracles can rebuild everything from the strings without touching the
/// library's resolution code.
struct RandomMsn {
    msn::MsnInput input;
    msn::MultiStratumNetwork net;
};

/// 2..max_actors actors over `n_strata` strata; each actor is present on a
/// random nonempty subset and sometimes owns two accounts in one stratum
/// (so non-pillar shapes are covered); arcs are coin flips with a
/// per-network probability drawn from [p_lo, p_hi]. Input orderings are
/// shuffled to exercise canonicalization.
RandomMsn random_msn(std::mt19937_64& rng, std::size_t max_actors = 12,
                     std::size_t n_strata = 3, double p_lo = 0.1, double p_hi = 0.5);

}  // namespace msn_test

#endif
