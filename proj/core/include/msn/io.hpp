#ifndef MSN_IO_HPP
#define MSN_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "msn/centrality.hpp"
#include "msn/msn.hpp"

namespace msn {

// On-disk layout. All files are UTF-8 text with '\n' line ends; lines whose
// first character is '#' and blank lines are ignored everywhere.
//
//   manifest        key = value lines:
//                     stratum = <name> <path>     (repeated, order = index)
//                     identity_map = <path>       (optional)
//                     deduplicate = true|false    (optional)
//                     directed = true|false       (optional; false doubles
//                                                  every edge line)
//                   Paths are resolved relative to the manifest.
//   edge list       one arc per line: source TAB target. Vertices are the
//                   union of arc endpoints and identity-map accounts.
//   identity map    one account per line: actor_id TAB stratum TAB local_id.
//                   Accounts sharing an actor_id are one identity; the
//                   loader links them with every cross-stratum pair.

struct LoadOptions {
    /// Collapse duplicate arcs instead of rejecting them (same effect as
    /// `deduplicate = true` in the manifest).
    bool dedupe_arcs = false;
};

/// Parses and validates a manifest and the files it references.
/// Throws ParseError (with file and 1-based line) for malformed input and
/// propagates build_msn validation errors; a manifest entry pointing at a
/// missing file fails before any edge parsing.
MultiStratumNetwork load_manifest(const std::filesystem::path& manifest_path,
                                  const LoadOptions& options = {},
                                  std::vector<std::string>* warnings = nullptr);

/// Writes manifest + edge lists + identity map into `directory` (created if
/// needed) and returns the manifest path. All lines are sorted, so repeated
/// exports of the same network are byte-identical, and
/// load_manifest(export_msn(net)) == net. `manifest_comments` lines are
/// embedded as '#' comments for provenance.
std::filesystem::path export_msn(const MultiStratumNetwork& net,
                                 const std::filesystem::path& directory,
                                 const std::vector<std::string>& manifest_comments = {});

/// CSV `actor_id,rank_s1,rank_s2` over the actors present on both strata:
/// the data behind a rank-vs-rank scatter plot. Rows sorted by actor id.
void export_scatter_csv(const MultiStratumNetwork& net, StratumIndex s1, StratumIndex s2,
                        DegreeMode mode, const std::filesystem::path& path);
void export_scatter_csv(const MultiStratumNetwork& net, StratumIndex s1, StratumIndex s2,
                        DegreeMode mode, std::ostream& out);

/// CSV `actor_id,lower,actual,upper,rel_uncertainty` for every actor, rows
/// sorted by actual degree ascending: the data behind a min/actual/max
/// degree band plot.
void export_bounds_csv(const MultiStratumNetwork& net, DegreeMode mode, LowerRule rule,
                       const std::filesystem::path& path);
void export_bounds_csv(const MultiStratumNetwork& net, DegreeMode mode, LowerRule rule,
                       std::ostream& out);

}  // namespace msn

#endif  // MSN_IO_HPP
