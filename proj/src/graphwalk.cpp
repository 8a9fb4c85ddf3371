#include "cubewalk/graphwalk.hpp"

#include <algorithm>
#include <array>

namespace cubewalk {

std::vector<std::size_t> DistanceProfile::shell_sizes() const {
  std::vector<std::size_t> shells(static_cast<std::size_t>(diameter) + 1, 0);
  for (auto d : dist) {
    if (d != kUnreachable) ++shells[static_cast<std::size_t>(d)];
  }
  return shells;
}

std::vector<GroupElement> neighbors(const ConnectionSet& set, const GroupElement& x) {
  if (x.dim() != set.dim()) throw InvalidInput("dimension mismatch in neighbors");
  std::vector<GroupElement> out;
  out.reserve(set.size());
  for (Label w : set.elements()) out.emplace_back(x.bits() ^ w, set.dim());
  return out;
}

DistanceProfile bfs_profile(const ConnectionSet& set, const GroupElement& source) {
  if (source.dim() != set.dim()) throw InvalidInput("dimension mismatch in bfs_profile");
  DistanceProfile profile;
  profile.n = set.dim();
  profile.source = source.bits();
  profile.dist.assign(group_order(set.dim()), kUnreachable);

  std::vector<Label> queue;
  queue.reserve(profile.dist.size());
  profile.dist[source.bits()] = 0;
  queue.push_back(source.bits());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Label x = queue[head];
    const std::int32_t next = profile.dist[x] + 1;
    for (Label w : set.elements()) {
      const Label y = x ^ w;
      if (profile.dist[y] == kUnreachable) {
        profile.dist[y] = next;
        queue.push_back(y);
      }
    }
  }
  profile.connected = queue.size() == profile.dist.size();
  profile.diameter = profile.dist[queue.back()];
  return profile;
}

std::vector<Label> antipodal_pairs(const ConnectionSet& set) {
  const auto profile = bfs_profile(set, GroupElement::zero(set.dim()));
  if (!profile.connected) {
    throw InvalidInput("antipodality is undefined on a disconnected graph");
  }
  std::vector<Label> out;
  for (Label v = 0; v < profile.dist.size(); ++v) {
    if (profile.dist[v] == profile.diameter) out.push_back(v);
  }
  return out;
}

namespace {

// Colour classes by BFS layer parity; empty when some edge joins equal colours.
std::optional<std::vector<std::int8_t>> two_colouring(const ConnectionSet& set) {
  const std::size_t order = group_order(set.dim());
  std::vector<std::int8_t> colour(order, -1);
  std::vector<Label> queue;
  queue.reserve(order);
  for (Label start = 0; start < order; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Label x = queue[head];
      for (Label w : set.elements()) {
        const Label y = x ^ w;
        if (colour[y] == -1) {
          colour[y] = static_cast<std::int8_t>(1 - colour[x]);
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace

bool is_bipartite(const ConnectionSet& set) { return two_colouring(set).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> is_complete_bipartite(
    const ConnectionSet& set) {
  if (!bfs_profile(set, GroupElement::zero(set.dim())).connected) return std::nullopt;
  const auto colour = two_colouring(set);
  if (!colour) return std::nullopt;
  const auto zeros = static_cast<std::size_t>(std::count(colour->begin(), colour->end(), 0));
  const std::size_t ones = colour->size() - zeros;
  // every vertex must see the whole opposite part; the graph is d-regular
  const auto d = set.size();
  if (d != zeros || d != ones) return std::nullopt;
  return std::pair{zeros, ones};
}

std::optional<Label> bipartition_functional(const ConnectionSet& set) {
  // Rows are [w | 1] with the right-hand side in bit n; reduced row echelon form.
  const int n = set.dim();
  const std::uint64_t rhs_bit = std::uint64_t{1} << n;
  std::vector<std::uint64_t> rows;
  rows.reserve(set.size());
  for (Label w : set.elements()) rows.push_back(w | rhs_bit);

  std::vector<std::pair<int, std::size_t>> pivots;
  std::size_t next_row = 0;
  for (int col = n - 1; col >= 0 && next_row < rows.size(); --col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next_row), rows.end(),
                           [bit](std::uint64_t r) { return (r & bit) != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next_row), it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && (rows[r] & bit)) rows[r] ^= rows[next_row];
    }
    pivots.emplace_back(col, next_row);
    ++next_row;
  }
  for (std::size_t r = next_row; r < rows.size(); ++r) {
    if (rows[r] == rhs_bit) return std::nullopt;
  }
  Label functional = 0;
  for (auto [col, r] : pivots) {
    if (rows[r] & rhs_bit) functional |= Label{1} << col;
  }
  return functional;
}

namespace {

// Greedy XOR basis indexed by leading bit; each entry remembers which of the
// chosen original generators it combines.
struct XorBasis {
  std::array<Label, kMaxDimension> vec{};
  std::array<std::uint32_t, kMaxDimension> combo{};
  std::array<bool, kMaxDimension> used{};
  std::vector<std::size_t> chosen;

  // Returns false if x is dependent on what is already stored.
  bool insert(Label x, std::size_t index) {
    std::uint32_t c = 1u << chosen.size();
    for (int bit = kMaxDimension - 1; bit >= 0 && x != 0; --bit) {
      if (!((x >> bit) & 1u)) continue;
      if (!used[static_cast<std::size_t>(bit)]) {
        used[static_cast<std::size_t>(bit)] = true;
        vec[static_cast<std::size_t>(bit)] = x;
        combo[static_cast<std::size_t>(bit)] = c;
        chosen.push_back(index);
        return true;
      }
      x ^= vec[static_cast<std::size_t>(bit)];
      c ^= combo[static_cast<std::size_t>(bit)];
    }
    return false;
  }
};

}  // namespace

int gf2_rank(const ConnectionSet& set) {
  XorBasis basis;
  const auto elems = set.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) basis.insert(elems[i], i);
  return static_cast<int>(basis.chosen.size());
}

std::optional<std::vector<std::size_t>> gf2_decompose(const ConnectionSet& set, Label target) {
  XorBasis basis;
  const auto elems = set.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) basis.insert(elems[i], i);
  std::uint32_t c = 0;
  for (int bit = kMaxDimension - 1; bit >= 0 && target != 0; --bit) {
    if (!((target >> bit) & 1u)) continue;
    if (!basis.used[static_cast<std::size_t>(bit)]) return std::nullopt;
    target ^= basis.vec[static_cast<std::size_t>(bit)];
    c ^= basis.combo[static_cast<std::size_t>(bit)];
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis.chosen.size(); ++k) {
    if ((c >> k) & 1u) out.push_back(basis.chosen[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubewalk
