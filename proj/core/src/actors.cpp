#include "msn/actors.hpp"

#include <algorithm>

namespace msn {

ActorPartition::ActorPartition(std::vector<ActorIndex> actor_of,
                               std::vector<std::vector<AccountIndex>> members,
                               std::vector<std::string> names)
    : actor_of_(std::move(actor_of)), members_(std::move(members)), names_(std::move(names)) {
    for (ActorIndex i = 0; i < names_.size(); ++i) {
        by_name_.emplace(names_[i], i);  // first wins on (degenerate) duplicates
    }
}

std::optional<ActorIndex> ActorPartition::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

ActorIndex ActorPartition::require(std::string_view name) const {
    auto found = find(name);
    if (!found) throw UnknownActorError(std::string(name));
    return *found;
}

std::vector<ActorIndex> ActorPartition::by_display_name() const {
    std::vector<ActorIndex> order(size());
    for (ActorIndex i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](ActorIndex a, ActorIndex b) {
        if (names_[a] != names_[b]) return names_[a] < names_[b];
        return a < b;
    });
    return order;
}

}  // namespace msn
