#ifndef MSN_DERIVED_HPP
#define MSN_DERIVED_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "msn/msn.hpp"

namespace msn {

/// Plain directed graph over dense vertex indices, shared by the two
/// derived views. Arcs are sorted and duplicate-free.
struct Digraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::vector<std::uint32_t>> in;

    std::size_t arc_count() const { return arcs.size(); }
};

/// All accounts, all stratum arcs, plus one arc in each direction per
/// identity pair. Vertices are account indices. This is the graph
/// multi-stratum distances are measured on.
struct FlatGraph : Digraph {};

/// One vertex per actor; an arc wherever any stratum links accounts of the
/// two actors. Self-loops (ties inside one identity) are dropped and
/// parallel arcs collapsed. Vertices are actor indices. This is the graph
/// multi-stratum degree is measured on.
struct MergedGraph : Digraph {};

FlatGraph flat(const MultiStratumNetwork& net);
MergedGraph merge(const MultiStratumNetwork& net);

}  // namespace msn

#endif  // MSN_DERIVED_HPP
