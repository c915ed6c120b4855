#include "support/fixtures.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace msn_test {

using msn::AccountRef;
using msn::MsnInput;
using msn::StratumSpec;

namespace {

void hint(MsnInput& input, const std::string& stratum, const std::string& local,
          const std::string& actor) {
    input.actor_hints.push_back({AccountRef{stratum, local}, actor});
}

void pair(MsnInput& input, const std::string& s1, const std::string& l1, const std::string& s2,
          const std::string& l2) {
    input.identity_pairs.push_back({AccountRef{s1, l1}, AccountRef{s2, l2}});
}

}  // namespace

msn::MultiStratumNetwork degree_left_fixture() {
    MsnInput input;
    input.strata.push_back(StratumSpec{
        "N1", {"a", "b", "d", "c"}, {{"c", "a"}, {"c", "b"}, {"c", "d"}}});
    input.strata.push_back(StratumSpec{
        "N2", {"a2", "b2", "d2", "c2"}, {{"c2", "a2"}, {"c2", "b2"}, {"c2", "d2"}}});
    pair(input, "N1", "a", "N2", "a2");
    pair(input, "N1", "b", "N2", "b2");
    pair(input, "N1", "d", "N2", "d2");
    pair(input, "N1", "c", "N2", "c2");
    for (auto [l1, l2, actor] : {std::tuple{"a", "a2", "A"}, {"b", "b2", "B"},
                                 {"d", "d2", "D"}, {"c", "c2", "C"}}) {
        hint(input, "N1", l1, actor);
        hint(input, "N2", l2, actor);
    }
    return msn::build_msn(input);
}

msn::MultiStratumNetwork degree_right_fixture() {
    MsnInput input;
    input.strata.push_back(StratumSpec{"N1", {"a", "b", "c"}, {{"c", "a"}, {"c", "b"}}});
    input.strata.push_back(StratumSpec{"N2", {"e2", "f2", "c2"}, {{"c2", "e2"}, {"c2", "f2"}}});
    pair(input, "N1", "c", "N2", "c2");
    hint(input, "N1", "a", "A");
    hint(input, "N1", "b", "B");
    hint(input, "N2", "e2", "E");
    hint(input, "N2", "f2", "F");
    hint(input, "N1", "c", "C");
    hint(input, "N2", "c2", "C");
    return msn::build_msn(input);
}

msn::MultiStratumNetwork toy_chain_fixture() {
    MsnInput input;
    input.strata.push_back(StratumSpec{"S1", {"a1", "b1"}, {{"a1", "b1"}}});
    input.strata.push_back(StratumSpec{"S2", {"b2", "c2"}, {{"b2", "c2"}}});
    pair(input, "S1", "b1", "S2", "b2");
    hint(input, "S1", "a1", "A");
    hint(input, "S1", "b1", "B");
    hint(input, "S2", "b2", "B");
    hint(input, "S2", "c2", "C");
    return msn::build_msn(input);
}

msn::MultiStratumNetwork reachability_fixture() {
    MsnInput input;
    input.strata.push_back(StratumSpec{"S1", {"a", "b", "c", "d"}, {{"b", "c"}}});
    input.strata.push_back(
        StratumSpec{"S2", {"a2", "b2", "c2", "d2"}, {{"a2", "b2"}, {"c2", "d2"}}});
    for (auto [l, actor] : {std::pair{"a", "A"}, {"b", "B"}, {"c", "C"}, {"d", "D"}}) {
        pair(input, "S1", l, "S2", std::string(l) + "2");
        hint(input, "S1", l, actor);
        hint(input, "S2", std::string(l) + "2", actor);
    }
    return msn::build_msn(input);
}

msn::MultiStratumNetwork bridge_fixture() {
    MsnInput input;
    StratumSpec s1{"S1", {"a", "b", "c", "e"}, {}};
    for (std::string u : {"a", "b", "c"}) {
        for (std::string v : {"a", "b", "c"}) {
            if (u != v) s1.arcs.emplace_back(u, v);
        }
    }
    s1.arcs.emplace_back("a", "e");
    s1.arcs.emplace_back("e", "a");
    StratumSpec s2{"S2", {"f", "g", "h", "e2"}, {}};
    for (std::string u : {"f", "g", "h"}) {
        for (std::string v : {"f", "g", "h"}) {
            if (u != v) s2.arcs.emplace_back(u, v);
        }
    }
    s2.arcs.emplace_back("f", "e2");
    s2.arcs.emplace_back("e2", "f");
    input.strata.push_back(std::move(s1));
    input.strata.push_back(std::move(s2));
    pair(input, "S1", "e", "S2", "e2");
    for (auto [l, actor] : {std::pair{"a", "A"}, {"b", "B"}, {"c", "C"}, {"e", "E"}}) {
        hint(input, "S1", l, actor);
    }
    for (auto [l, actor] : {std::pair{"f", "F"}, {"g", "G"}, {"h", "H"}, {"e2", "E"}}) {
        hint(input, "S2", l, actor);
    }
    return msn::build_msn(input);
}

msn::MultiStratumNetwork pillar_triangle_fixture() {
    MsnInput input;
    input.strata.push_back(
        StratumSpec{"S1", {"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}});
    input.strata.push_back(StratumSpec{"S2", {"x2", "y2"}, {{"x2", "y2"}}});
    pair(input, "S1", "x", "S2", "x2");
    pair(input, "S1", "y", "S2", "y2");
    hint(input, "S1", "x", "X");
    hint(input, "S2", "x2", "X");
    hint(input, "S1", "y", "Y");
    hint(input, "S2", "y2", "Y");
    hint(input, "S1", "z", "Z");
    return msn::build_msn(input);
}

RandomMsn random_msn(std::mt19937_64& rng, std::size_t max_actors, std::size_t n_strata,
                     double p_lo, double p_hi) {
    std::uniform_int_distribution<std::size_t> actor_count(2, max_actors);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n_actors = actor_count(rng);
    const double p = p_lo + (p_hi - p_lo) * unit(rng);

    MsnInput input;
    input.strata.resize(n_strata);
    for (std::size_t s = 0; s < n_strata; ++s) input.strata[s].name = "S" + std::to_string(s + 1);

    struct Acc {
        std::size_t stratum;
        std::string local;
    };
    for (std::size_t i = 0; i < n_actors; ++i) {
        const std::string name = "p" + std::to_string(i);
        std::vector<std::size_t> present;
        for (std::size_t s = 0; s < n_strata; ++s) {
            if (unit(rng) < 0.7) present.push_back(s);
        }
        if (present.empty()) {
            present.push_back(std::uniform_int_distribution<std::size_t>(0, n_strata - 1)(rng));
        }
        std::vector<Acc> accounts;
        for (std::size_t s : present) accounts.push_back({s, name});
        if (present.size() >= 2 && unit(rng) < 0.2) {
            std::size_t s = present[std::uniform_int_distribution<std::size_t>(
                0, present.size() - 1)(rng)];
            accounts.push_back({s, name + "x"});
        }
        for (const Acc& acc : accounts) {
            input.strata[acc.stratum].vertices.push_back(acc.local);
        }
        // link every account to the anchor across strata; an account in the
        // anchor's stratum borrows any cross-stratum partner instead
        const Acc& anchor = accounts.front();
        for (std::size_t j = 1; j < accounts.size(); ++j) {
            const Acc* partner = &anchor;
            if (accounts[j].stratum == anchor.stratum) {
                for (const Acc& other : accounts) {
                    if (other.stratum != accounts[j].stratum) {
                        partner = &other;
                        break;
                    }
                }
            }
            pair(input, input.strata[partner->stratum].name, partner->local,
                 input.strata[accounts[j].stratum].name, accounts[j].local);
        }
        // occasionally a redundant pair, to exercise transitive closure
        if (accounts.size() >= 3 && unit(rng) < 0.5) {
            for (int attempt = 0; attempt < 4; ++attempt) {
                const Acc& x = accounts[std::uniform_int_distribution<std::size_t>(
                    0, accounts.size() - 1)(rng)];
                const Acc& y = accounts[std::uniform_int_distribution<std::size_t>(
                    0, accounts.size() - 1)(rng)];
                if (x.stratum != y.stratum) {
                    pair(input, input.strata[x.stratum].name, x.local,
                         input.strata[y.stratum].name, y.local);
                    break;
                }
            }
        }
    }

    for (StratumSpec& spec : input.strata) {
        for (const std::string& u : spec.vertices) {
            for (const std::string& v : spec.vertices) {
                if (u != v && unit(rng) < p) spec.arcs.emplace_back(u, v);
            }
        }
        std::shuffle(spec.vertices.begin(), spec.vertices.end(), rng);
        std::shuffle(spec.arcs.begin(), spec.arcs.end(), rng);
    }
    std::shuffle(input.identity_pairs.begin(), input.identity_pairs.end(), rng);

    RandomMsn result;
    result.net = msn::build_msn(input);
    result.input = std::move(input);
    return result;
}

}  // namespace msn_test
