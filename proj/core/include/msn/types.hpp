#ifndef MSN_TYPES_HPP
#define MSN_TYPES_HPP

#include <cstdint>
#include <limits>
#include <string>

namespace msn {

// Dense indices assigned at build time. Account and actor indices are
// canonical: they depend only on the content of the network, not on the
// order in which strata, arcs or identity pairs were supplied.
using StratumIndex = std::uint32_t;
using AccountIndex = std::uint32_t;
using ActorIndex = std::uint32_t;

inline constexpr std::uint32_t kInvalidIndex = std::numeric_limits<std::uint32_t>::max();

/// An account named from the outside: (stratum name, local id).
/// Local ids are opaque text, unique within their stratum; the same text in
/// two strata names two unrelated accounts.
struct AccountRef {
    std::string stratum;
    std::string local_id;

    friend bool operator==(const AccountRef&, const AccountRef&) = default;
    friend auto operator<=>(const AccountRef&, const AccountRef&) = default;
};

/// Which neighbours a degree counts. All = distinct members of the union of
/// the in- and out-neighbourhoods, so a reciprocal tie counts once.
enum class DegreeMode { In, Out, All };

/// Hop count between two vertices, with unreachable represented explicitly
/// so averages can never silently absorb an infinity sentinel.
class Distance {
public:
    static Distance unreachable() { return Distance(); }
    static Distance hops(std::uint32_t h) {
        Distance d;
        d.hops_ = h;
        return d;
    }

    bool reachable() const { return hops_ != kInvalidIndex; }
    std::uint32_t value() const { return hops_; }  // only meaningful when reachable

    /// Treats unreachable as +infinity.
    friend Distance min(Distance a, Distance b) {
        return a.hops_ <= b.hops_ ? a : b;
    }

    friend bool operator==(const Distance&, const Distance&) = default;

private:
    std::uint32_t hops_ = kInvalidIndex;
};

}  // namespace msn

#endif  // MSN_TYPES_HPP
