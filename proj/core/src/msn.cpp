#include "msn/msn.hpp"

#include <algorithm>
#include <set>

#include "msn/union_find.hpp"

namespace msn {

namespace {

bool valid_stratum_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '/') return false;
    }
    return true;
}

bool valid_local_id(const std::string& id) {
    return !id.empty() && id.find('\t') == std::string::npos &&
           id.find('\n') == std::string::npos;
}

}  // namespace

bool Stratum::contains(AccountIndex account) const {
    return std::binary_search(members_.begin(), members_.end(), account);
}

std::optional<StratumIndex> MultiStratumNetwork::find_stratum(std::string_view name) const {
    auto it = stratum_by_name_.find(std::string(name));
    if (it == stratum_by_name_.end()) return std::nullopt;
    return it->second;
}

StratumIndex MultiStratumNetwork::require_stratum(std::string_view name) const {
    auto found = find_stratum(name);
    if (!found) throw UnknownStratumError(std::string(name));
    return *found;
}

std::optional<AccountIndex> MultiStratumNetwork::find_account(StratumIndex stratum,
                                                              std::string_view local_id) const {
    auto it = account_by_local_[stratum].find(std::string(local_id));
    if (it == account_by_local_[stratum].end()) return std::nullopt;
    return it->second;
}

std::optional<AccountIndex> MultiStratumNetwork::find_account(const AccountRef& ref) const {
    auto stratum = find_stratum(ref.stratum);
    if (!stratum) return std::nullopt;
    return find_account(*stratum, ref.local_id);
}

std::string MultiStratumNetwork::qualified_name(AccountIndex i) const {
    const Account& acc = accounts_[i];
    return strata_[acc.stratum].name() + ":" + acc.local_id;
}

std::size_t MultiStratumNetwork::total_arc_count() const {
    std::size_t total = 0;
    for (const Stratum& s : strata_) total += s.arc_count();
    return total;
}

bool MultiStratumNetwork::operator==(const MultiStratumNetwork& other) const {
    if (strata_.size() != other.strata_.size()) return false;
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        if (strata_[i].name() != other.strata_[i].name()) return false;
        const auto& a = strata_[i].members();
        const auto& b = other.strata_[i].members();
        if (a.size() != b.size()) return false;
        // Same vertex content implies identical canonical indices, so the
        // arc lists below can be compared index-wise.
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (accounts_[a[j]].local_id != other.accounts_[b[j]].local_id) return false;
        }
    }
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        if (strata_[i].arcs() != other.strata_[i].arcs()) return false;
    }
    return pairs_ == other.pairs_;
}

// Builds the canonical network: accounts indexed stratum-major with local
// ids sorted, identity pairs canonicalized, the partition precomputed.
class MsnAssembler {
public:
    static MultiStratumNetwork build(const MsnInput& input, const BuildOptions& options,
                                     std::vector<std::string>* warnings) {
        MultiStratumNetwork net;

        std::set<std::string> seen_names;
        for (const StratumSpec& spec : input.strata) {
            if (!valid_stratum_name(spec.name)) {
                throw ValidationError("invalid stratum name '" + spec.name +
                                      "' (must be non-empty, without whitespace or '/')");
            }
            if (!seen_names.insert(spec.name).second) {
                throw ValidationError("duplicate stratum name '" + spec.name + "'");
            }
        }

        // Accounts: stratum-major, locals sorted. This makes indices a pure
        // function of the content, independent of input ordering.
        net.strata_.resize(input.strata.size());
        net.account_by_local_.resize(input.strata.size());
        for (StratumIndex si = 0; si < input.strata.size(); ++si) {
            const StratumSpec& spec = input.strata[si];
            Stratum& stratum = net.strata_[si];
            stratum.index_ = si;
            stratum.name_ = spec.name;

            std::set<std::string> locals(spec.vertices.begin(), spec.vertices.end());
            for (const std::string& local : locals) {
                if (!valid_local_id(local)) {
                    throw ValidationError("invalid account id in stratum '" + spec.name +
                                          "' (must be non-empty, without tab or newline)");
                }
                AccountIndex idx = static_cast<AccountIndex>(net.accounts_.size());
                net.accounts_.push_back(Account{si, local, {}});
                net.account_by_local_[si].emplace(local, idx);
                stratum.members_.push_back(idx);
            }
            net.stratum_by_name_.emplace(spec.name, si);
        }

        for (StratumIndex si = 0; si < input.strata.size(); ++si) {
            resolve_arcs(net, input.strata[si], si, options, warnings);
        }
        resolve_pairs(net, input.identity_pairs);
        apply_hints(net, input.actor_hints);
        build_adjacency(net);
        net.actors_ = build_partition(net);
        close_pairs(net);
        return net;
    }

private:
    static AccountIndex require_account(const MultiStratumNetwork& net, StratumIndex si,
                                        const std::string& local) {
        auto it = net.account_by_local_[si].find(local);
        if (it == net.account_by_local_[si].end()) {
            throw UnknownAccountError(net.strata_[si].name(), local);
        }
        return it->second;
    }

    static AccountIndex require_account(const MultiStratumNetwork& net, const AccountRef& ref) {
        auto si = net.find_stratum(ref.stratum);
        if (!si) throw UnknownAccountError(ref.stratum, ref.local_id);
        return require_account(net, *si, ref.local_id);
    }

    static void resolve_arcs(MultiStratumNetwork& net, const StratumSpec& spec, StratumIndex si,
                             const BuildOptions& options, std::vector<std::string>* warnings) {
        Stratum& stratum = net.strata_[si];
        auto& arcs = stratum.arcs_;
        arcs.reserve(spec.arcs.size());
        for (const auto& [from, to] : spec.arcs) {
            AccountIndex u = require_account(net, si, from);
            AccountIndex v = require_account(net, si, to);
            if (u == v) {
                throw SelfLoopArcError("self-loop arc on '" + net.qualified_name(u) + "'");
            }
            arcs.emplace_back(u, v);
        }
        std::sort(arcs.begin(), arcs.end());
        auto dup = std::adjacent_find(arcs.begin(), arcs.end());
        if (dup != arcs.end()) {
            if (!options.dedupe_arcs) {
                throw DuplicateArcError("duplicate arc " + net.qualified_name(dup->first) +
                                        " -> " + net.qualified_name(dup->second));
            }
            std::size_t before = arcs.size();
            arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
            if (warnings != nullptr) {
                warnings->push_back("stratum '" + spec.name + "': removed " +
                                    std::to_string(before - arcs.size()) + " duplicate arc(s)");
            }
        }
    }

    static void resolve_pairs(MultiStratumNetwork& net,
                              const std::vector<std::pair<AccountRef, AccountRef>>& pairs) {
        for (const auto& [left, right] : pairs) {
            AccountIndex a = require_account(net, left);
            AccountIndex b = require_account(net, right);
            if (a == b) continue;  // (v, v) is implicit, never stored
            if (net.accounts_[a].stratum == net.accounts_[b].stratum) {
                throw SameStratumPairError("identity pair " + net.qualified_name(a) + " ~ " +
                                           net.qualified_name(b) +
                                           " links two accounts of the same stratum");
            }
            if (a > b) std::swap(a, b);
            net.pairs_.push_back(IdentityPair{a, b});
        }
        std::sort(net.pairs_.begin(), net.pairs_.end());
        net.pairs_.erase(std::unique(net.pairs_.begin(), net.pairs_.end()), net.pairs_.end());
    }

    // Replaces the given pairs with the full cross-stratum correspondence of
    // every actor. Inputs describing the same account partition then build
    // identical networks, whichever generating pairs they spelled out.
    static void close_pairs(MultiStratumNetwork& net) {
        net.pairs_.clear();
        for (ActorIndex a = 0; a < net.actors_.size(); ++a) {
            const auto& members = net.actors_.members(a);
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    if (net.accounts_[members[i]].stratum != net.accounts_[members[j]].stratum) {
                        net.pairs_.push_back(IdentityPair{members[i], members[j]});
                    }
                }
            }
        }
        std::sort(net.pairs_.begin(), net.pairs_.end());
    }

    static void apply_hints(MultiStratumNetwork& net,
                            const std::vector<std::pair<AccountRef, std::string>>& hints) {
        for (const auto& [ref, hint] : hints) {
            net.accounts_[require_account(net, ref)].actor_hint = hint;
        }
    }

    static void build_adjacency(MultiStratumNetwork& net) {
        for (Stratum& stratum : net.strata_) {
            stratum.out_.assign(net.accounts_.size(), {});
            stratum.in_.assign(net.accounts_.size(), {});
            for (const auto& [u, v] : stratum.arcs_) {
                stratum.out_[u].push_back(v);
                stratum.in_[v].push_back(u);
            }
            // arcs_ is sorted, so out_ lists are already sorted; in_ needs it
            for (auto& nbrs : stratum.in_) std::sort(nbrs.begin(), nbrs.end());
        }
    }

    static ActorPartition build_partition(const MultiStratumNetwork& net) {
        const std::size_t n = net.accounts_.size();
        UnionFind uf(n);
        for (const IdentityPair& p : net.pairs_) uf.unite(p.a, p.b);

        // Components ordered by smallest member, which is unique per actor.
        std::vector<std::vector<AccountIndex>> groups(n);
        for (AccountIndex i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

        std::vector<ActorIndex> actor_of(n, kInvalidIndex);
        std::vector<std::vector<AccountIndex>> members;
        for (AccountIndex i = 0; i < n; ++i) {
            if (groups[i].empty()) continue;
            ActorIndex actor = static_cast<ActorIndex>(members.size());
            for (AccountIndex member : groups[i]) actor_of[member] = actor;
            members.push_back(std::move(groups[i]));
        }
        std::vector<std::string> names = resolve_names(net, members);
        return ActorPartition(std::move(actor_of), std::move(members), std::move(names));
    }

    // The hint when all hinted members agree on one; otherwise the smallest
    // member's qualified name.
    static std::string hint_or_qualified(const MultiStratumNetwork& net,
                                         const std::vector<AccountIndex>& group) {
        std::string hint;
        bool consistent = true;
        for (AccountIndex member : group) {
            const std::string& h = net.accounts_[member].actor_hint;
            if (h.empty()) continue;
            if (hint.empty()) {
                hint = h;
            } else if (hint != h) {
                consistent = false;
                break;
            }
        }
        if (consistent && !hint.empty()) return hint;
        return net.qualified_name(group.front());
    }

    // Display names must be unique: exports key identity groups by them.
    // Colliding candidates fall back to the qualified name, qualified names
    // are unique per actor, and a further (pathological) clash with someone
    // else's hint gets a numeric suffix.
    static std::vector<std::string> resolve_names(
        const MultiStratumNetwork& net, const std::vector<std::vector<AccountIndex>>& members) {
        std::vector<std::string> names(members.size());
        std::set<std::string> used;
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::string name = hint_or_qualified(net, members[i]);
            if (used.count(name)) name = net.qualified_name(members[i].front());
            for (int n = 2; used.count(name); ++n) {
                name = net.qualified_name(members[i].front()) + "#" + std::to_string(n);
            }
            names[i] = name;
            used.insert(name);
        }
        return names;
    }
};

MultiStratumNetwork build_msn(const MsnInput& input, const BuildOptions& options,
                              std::vector<std::string>* warnings) {
    return MsnAssembler::build(input, options, warnings);
}

std::vector<AccountIndex> correspondents(const MultiStratumNetwork& net, AccountIndex account,
                                         StratumIndex target) {
    if (net.account(account).stratum == target) return {account};
    std::vector<AccountIndex> result;
    const ActorPartition& actors = net.actors();
    for (AccountIndex member : actors.members(actors.actor_of(account))) {
        if (net.account(member).stratum == target) result.push_back(member);
    }
    return result;
}

bool is_pillar(const MultiStratumNetwork& net) {
    const ActorPartition& actors = net.actors();
    std::vector<std::uint32_t> seen(net.stratum_count(), kInvalidIndex);
    for (ActorIndex actor = 0; actor < actors.size(); ++actor) {
        for (AccountIndex member : actors.members(actor)) {
            StratumIndex s = net.account(member).stratum;
            if (seen[s] == actor) return false;
            seen[s] = actor;
        }
    }
    return true;
}

}  // namespace msn
