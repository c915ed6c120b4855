#ifndef MSN_ACTORS_HPP
#define MSN_ACTORS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "msn/errors.hpp"
#include "msn/types.hpp"

namespace msn {

/// The reconciled identities of a network: accounts grouped into actors by
/// the connected components of the identity-pair graph. Every account
/// belongs to exactly one actor. Actor indices are canonical (ordered by
/// each component's smallest account index) and each actor carries a display
/// name, taken verbatim from the identity-map file when one was loaded.
class ActorPartition {
public:
    ActorPartition() = default;
    ActorPartition(std::vector<ActorIndex> actor_of,
                   std::vector<std::vector<AccountIndex>> members,
                   std::vector<std::string> names);

    std::size_t size() const { return members_.size(); }

    ActorIndex actor_of(AccountIndex account) const { return actor_of_[account]; }

    /// Accounts of an actor, sorted ascending.
    const std::vector<AccountIndex>& members(ActorIndex actor) const {
        return members_[actor];
    }

    const std::string& name(ActorIndex actor) const { return names_[actor]; }

    std::optional<ActorIndex> find(std::string_view name) const;

    /// Like find() but throws UnknownActorError.
    ActorIndex require(std::string_view name) const;

    /// Actor indices ordered by display name (ties by index), the order used
    /// for user-facing tables.
    std::vector<ActorIndex> by_display_name() const;

private:
    std::vector<ActorIndex> actor_of_;
    std::vector<std::vector<AccountIndex>> members_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, ActorIndex> by_name_;
};

}  // namespace msn

#endif  // MSN_ACTORS_HPP
