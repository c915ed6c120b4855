#include "msn/synthgen.hpp"

#include <random>
#include <sstream>

namespace msn {

namespace {

bool valid_probability(double p) { return p >= 0.0 && p <= 1.0; }

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw,
/// so the stream does not depend on the standard library's distribution
/// implementations.
double next_unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::string padded_id(std::uint64_t index, int width) {
    std::string digits = std::to_string(index);
    std::string id = "u";
    id.append(width > int(digits.size()) ? width - digits.size() : 0, '0');
    id += digits;
    return id;
}

}  // namespace

double PillarGenSpec::activity_for(std::uint32_t stratum) const {
    if (activity.empty()) return 1.0;
    if (activity.size() == 1) return activity.front();
    return activity[stratum];
}

void validate(const PillarGenSpec& spec) {
    if (spec.k == 0) throw InvalidSpecError("stratum count k must be at least 1");
    if (!valid_probability(spec.base_p)) throw InvalidSpecError("base_p outside [0, 1]");
    if (!valid_probability(spec.theta)) throw InvalidSpecError("theta outside [0, 1]");
    if (!valid_probability(spec.extra_q)) throw InvalidSpecError("extra_q outside [0, 1]");
    if (!spec.activity.empty() && spec.activity.size() != 1 && spec.activity.size() != spec.k) {
        throw InvalidSpecError("activity needs length 1 or k, got " +
                               std::to_string(spec.activity.size()));
    }
    for (double a : spec.activity) {
        if (!valid_probability(a)) throw InvalidSpecError("activity value outside [0, 1]");
    }
}

MultiStratumNetwork generate_pillar(const PillarGenSpec& spec) {
    validate(spec);
    const std::uint64_t n = spec.n;
    const std::uint32_t k = spec.k;
    std::mt19937_64 rng(spec.seed);

    // Draw order (fixed; changing it would change every seeded fixture):
    //   1. activity coins, stratum-major then actor-ascending
    //   2. stratum S1: one coin per ordered pair of its active actors
    //   3. each stratum Sj, j >= 2: per ordered pair of its active actors,
    //      one copy coin and one extra coin, both always drawn
    std::vector<std::vector<bool>> active(k, std::vector<bool>(n));
    for (std::uint32_t j = 0; j < k; ++j) {
        const double a = spec.activity_for(j);
        for (std::uint64_t i = 0; i < n; ++i) active[j][i] = next_unit(rng) < a;
    }

    std::vector<bool> base_arc(n * n, false);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> arcs(k);
    for (std::uint64_t u = 0; u < n; ++u) {
        if (!active[0][u]) continue;
        for (std::uint64_t v = 0; v < n; ++v) {
            if (v == u || !active[0][v]) continue;
            if (next_unit(rng) < spec.base_p) {
                base_arc[u * n + v] = true;
                arcs[0].emplace_back(u, v);
            }
        }
    }
    for (std::uint32_t j = 1; j < k; ++j) {
        for (std::uint64_t u = 0; u < n; ++u) {
            if (!active[j][u]) continue;
            for (std::uint64_t v = 0; v < n; ++v) {
                if (v == u || !active[j][v]) continue;
                const bool copy = next_unit(rng) < spec.theta;
                const bool extra = next_unit(rng) < spec.extra_q;
                if ((base_arc[u * n + v] && copy) || extra) arcs[j].emplace_back(u, v);
            }
        }
    }

    const int width = int(std::to_string(n == 0 ? 0 : n - 1).size());
    std::vector<std::string> id_of(n);
    for (std::uint64_t i = 0; i < n; ++i) id_of[i] = padded_id(i, width);

    MsnInput input;
    input.strata.resize(k);
    for (std::uint32_t j = 0; j < k; ++j) {
        StratumSpec& st = input.strata[j];
        st.name = "S" + std::to_string(j + 1);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (active[j][i]) st.vertices.push_back(id_of[i]);
        }
        st.arcs.reserve(arcs[j].size());
        for (const auto& [u, v] : arcs[j]) st.arcs.emplace_back(id_of[u], id_of[v]);
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> lives_on;
        for (std::uint32_t j = 0; j < k; ++j) {
            if (active[j][i]) lives_on.push_back(j);
        }
        for (std::size_t a = 0; a < lives_on.size(); ++a) {
            input.actor_hints.push_back(
                {AccountRef{input.strata[lives_on[a]].name, id_of[i]}, id_of[i]});
            for (std::size_t b = a + 1; b < lives_on.size(); ++b) {
                input.identity_pairs.push_back({AccountRef{input.strata[lives_on[a]].name, id_of[i]},
                                                AccountRef{input.strata[lives_on[b]].name, id_of[i]}});
            }
        }
    }
    return build_msn(input);
}

std::string describe(const PillarGenSpec& spec) {
    std::ostringstream out;
    out << "pillar n=" << spec.n << " k=" << spec.k << " base_p=" << spec.base_p
        << " theta=" << spec.theta << " extra_q=" << spec.extra_q << " activity=";
    if (spec.activity.empty()) {
        out << "1";
    } else {
        for (std::size_t i = 0; i < spec.activity.size(); ++i) {
            if (i > 0) out << ",";
            out << spec.activity[i];
        }
    }
    out << " seed=" << spec.seed;
    return out.str();
}

}  // namespace msn
