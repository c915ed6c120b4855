#ifndef MSN_MSN_HPP
#define MSN_MSN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msn/actors.hpp"
#include "msn/errors.hpp"
#include "msn/types.hpp"

namespace msn {

/// One account as stored: its stratum, its local id and the display-name
/// hint (empty when no identity-map file supplied one).
struct Account {
    StratumIndex stratum;
    std::string local_id;
    std::string actor_hint;
};

/// One platform's directed, unweighted graph inside the network.
/// Vertices and arc endpoints are global account indices; adjacency vectors
/// span all accounts of the network so account indices can be used directly.
class Stratum {
public:
    StratumIndex index() const { return index_; }
    const std::string& name() const { return name_; }

    /// Accounts of this stratum, sorted ascending. Contiguous by
    /// construction, but callers should not rely on that.
    const std::vector<AccountIndex>& members() const { return members_; }

    std::size_t vertex_count() const { return members_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    /// Sorted, duplicate-free, and free of self-loops.
    const std::vector<std::pair<AccountIndex, AccountIndex>>& arcs() const { return arcs_; }

    const std::vector<AccountIndex>& out_neighbors(AccountIndex account) const {
        return out_[account];
    }
    const std::vector<AccountIndex>& in_neighbors(AccountIndex account) const {
        return in_[account];
    }

    /// Whole adjacency, indexed by global account index.
    const std::vector<std::vector<AccountIndex>>& out_adjacency() const { return out_; }
    const std::vector<std::vector<AccountIndex>>& in_adjacency() const { return in_; }

    bool contains(AccountIndex account) const;

private:
    friend class MsnAssembler;

    StratumIndex index_ = 0;
    std::string name_;
    std::vector<AccountIndex> members_;
    std::vector<std::pair<AccountIndex, AccountIndex>> arcs_;
    std::vector<std::vector<AccountIndex>> out_;
    std::vector<std::vector<AccountIndex>> in_;
};

/// A stored cross-stratum identity link, canonicalized so a < b; the
/// symmetric direction and the trivial (v, v) links are implicit.
struct IdentityPair {
    AccountIndex a;
    AccountIndex b;

    friend bool operator==(const IdentityPair&, const IdentityPair&) = default;
    friend auto operator<=>(const IdentityPair&, const IdentityPair&) = default;
};

/// Several strata joined by an identity mapping. Immutable once built; safe
/// to share read-only across threads. Accounts are qualified by stratum, so
/// strata are disjoint by construction, and the actor partition is computed
/// at build time from the identity pairs.
class MultiStratumNetwork {
public:
    MultiStratumNetwork() = default;

    std::size_t stratum_count() const { return strata_.size(); }
    const Stratum& stratum(StratumIndex i) const { return strata_[i]; }
    const std::vector<Stratum>& strata() const { return strata_; }

    std::optional<StratumIndex> find_stratum(std::string_view name) const;

    /// Like find_stratum() but throws UnknownStratumError.
    StratumIndex require_stratum(std::string_view name) const;

    std::size_t account_count() const { return accounts_.size(); }
    const Account& account(AccountIndex i) const { return accounts_[i]; }

    std::optional<AccountIndex> find_account(StratumIndex stratum,
                                             std::string_view local_id) const;
    std::optional<AccountIndex> find_account(const AccountRef& ref) const;

    /// "stratum:local_id", used for fallback actor names and diagnostics.
    std::string qualified_name(AccountIndex i) const;

    /// Canonical identity pairs, sorted: every cross-stratum pair of
    /// accounts sharing an actor, regardless of which generating pairs the
    /// input spelled out.
    const std::vector<IdentityPair>& identity_pairs() const { return pairs_; }

    const ActorPartition& actors() const { return actors_; }

    std::size_t total_arc_count() const;

    /// Structural equality: stratum names and order, vertex sets, arc sets,
    /// identity-pair sets. Actor-name hints are not part of it.
    bool operator==(const MultiStratumNetwork& other) const;

private:
    friend class MsnAssembler;

    std::vector<Stratum> strata_;
    std::vector<Account> accounts_;
    std::vector<IdentityPair> pairs_;
    ActorPartition actors_;
    std::unordered_map<std::string, StratumIndex> stratum_by_name_;
    std::vector<std::unordered_map<std::string, AccountIndex>> account_by_local_;
};

// --- construction ---------------------------------------------------------

/// Raw description of one stratum. Vertices must be declared explicitly;
/// arcs referencing undeclared vertices are an error (the manifest loader
/// derives the vertex list from the files before calling build_msn).
struct StratumSpec {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> arcs;
};

struct MsnInput {
    std::vector<StratumSpec> strata;
    /// Unordered cross-stratum links; (u, v) and (v, u) are the same pair
    /// and (v, v) entries are dropped as implicit.
    std::vector<std::pair<AccountRef, AccountRef>> identity_pairs;
    /// Optional per-account display-name hints (from an identity-map file).
    std::vector<std::pair<AccountRef, std::string>> actor_hints;
};

struct BuildOptions {
    /// Duplicate arcs are rejected by default to surface dirty data;
    /// set this to collapse them with a warning instead.
    bool dedupe_arcs = false;
};

/// Validates and builds the network.
///
/// Throws UnknownAccountError, SameStratumPairError, DuplicateArcError,
/// SelfLoopArcError or ValidationError. When warnings is non-null,
/// deduplication notes are appended to it.
MultiStratumNetwork build_msn(const MsnInput& input, const BuildOptions& options = {},
                              std::vector<std::string>* warnings = nullptr);

// --- model queries --------------------------------------------------------

inline const ActorPartition& actor_partition(const MultiStratumNetwork& net) {
    return net.actors();
}

/// Accounts of stratum `target` that belong to the same actor as `account`.
/// For the account's own stratum this is {account} itself: within one
/// stratum the identity mapping is the identity relation.
std::vector<AccountIndex> correspondents(const MultiStratumNetwork& net,
                                         AccountIndex account, StratumIndex target);

/// True iff every actor has at most one account per stratum.
bool is_pillar(const MultiStratumNetwork& net);

}  // namespace msn

#endif  // MSN_MSN_HPP
