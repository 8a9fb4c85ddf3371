#pragma once

// The cubelike graph as an implicit graph: vertex x is adjacent to x ^ w for
// every w in the connection set. Nothing is materialized beyond a flat 2^n
// scratch array per traversal.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubewalk/bitspace.hpp"

namespace cubewalk {

inline constexpr std::int32_t kUnreachable = -1;

struct DistanceProfile {
  int n = 0;
  Label source = 0;
  std::vector<std::int32_t> dist;
  std::int32_t diameter = 0;  // max finite distance
  bool connected = false;

  /// shells[k] = number of vertices at distance k.
  std::vector<std::size_t> shell_sizes() const;
};

std::vector<GroupElement> neighbors(const ConnectionSet& set, const GroupElement& x);

DistanceProfile bfs_profile(const ConnectionSet& set, const GroupElement& source);

/// Offsets delta at maximum distance from 0. Throws InvalidInput when the
/// graph is disconnected.
std::vector<Label> antipodal_pairs(const ConnectionSet& set);

/// Part sizes when the graph is complete bipartite.
std::optional<std::pair<std::size_t, std::size_t>> is_complete_bipartite(const ConnectionSet& set);

/// 2-colourability by BFS layering.
bool is_bipartite(const ConnectionSet& set);

/// A linear functional l (as a label, l(x) = parity(l & x)) with l(w) = 1 for
/// every generator, if one exists. Its existence is equivalent to bipartiteness.
std::optional<Label> bipartition_functional(const ConnectionSet& set);

/// Rank of the generators over GF(2); the graph is connected iff rank == n.
int gf2_rank(const ConnectionSet& set);

/// Indices into set.elements() whose XOR equals target, if target lies in
/// the span of the generators.
std::optional<std::vector<std::size_t>> gf2_decompose(const ConnectionSet& set, Label target);

}  // namespace cubewalk
