#ifndef RPROTO_EXPLORE_HH_
#define RPROTO_EXPLORE_HH_

#include <cstdint>
#include <optional>
#include <vector>

#include "rproto/config.hh"

namespace rproto {

inline constexpr std::uint64_t kDefaultNodeCap = 5'000'000;

/// Explicit state space of the size-k system: all configurations reachable
/// from <q0^k, d0>. Nodes are indexed in BFS discovery order with
/// canonically sorted successor expansion, so indices are reproducible.
struct StateSpace {
  std::uint64_t k = 0;
  std::vector<Configuration> nodes; // nodes[0] is the initial configuration
  std::vector<std::vector<std::uint32_t>> succ;
  std::uint64_t n_edges = 0;

  std::optional<std::uint32_t> index_of(const Configuration& g) const;
};

StateSpace explore(const Protocol& p, std::uint64_t k, DatumId d0,
                   std::uint64_t node_cap = kDefaultNodeCap);

/// True iff some reachable configuration has `target` in its support.
bool check_coverable(const Protocol& p, std::uint64_t k, DatumId d0,
                     LocId target, std::uint64_t node_cap = kDefaultNodeCap);

struct Verdict {
  bool almost_sure = false;
  std::optional<Configuration> witness; // present iff not almost sure
  std::uint64_t n_nodes = 0;
  std::uint64_t n_edges = 0;
  double wall_seconds = 0.0;
};

/// Qualitative almost-sure reachability on the finite chain: almost sure
/// iff every reachable configuration can reach one covering `target`.
/// Pure graph analysis; atomic protocols are allowed.
Verdict check_almost_sure(const Protocol& p, std::uint64_t k, DatumId d0,
                          LocId target,
                          std::uint64_t node_cap = kDefaultNodeCap);

/// Same decision computed on an already explored state space.
Verdict check_almost_sure(const StateSpace& space, LocId target);

/// Indices of nodes that can reach a target-covering node (backward
/// closure over the successor relation).
std::vector<bool> can_reach_target(const StateSpace& space, LocId target);

/// Exact probability of eventually covering `target` from the initial
/// configuration, under the uniform successor distribution. Solves the
/// standard linear reachability system over rationals.
Rational exact_reach_probability(const Protocol& p, std::uint64_t k,
                                 DatumId d0, LocId target,
                                 std::uint64_t node_cap = kDefaultNodeCap);

} // namespace rproto

#endif
