#include "rproto/explore.hh"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_map>

namespace rproto {

namespace {

using IndexMap =
    std::unordered_map<Configuration, std::uint32_t, ConfigurationHash>;

} // namespace

std::optional<std::uint32_t> StateSpace::index_of(
    const Configuration& g) const {
  // Linear scan; only used by tests and small tooling paths.
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == g) return i;
  }
  return std::nullopt;
}

StateSpace explore(const Protocol& p, std::uint64_t k, DatumId d0,
                   std::uint64_t node_cap) {
  if (k < 1) fail(ErrorCode::Usage, "explore requires k >= 1");
  if (d0 >= p.n_data()) fail(ErrorCode::UndeclaredSymbol, "d0 out of range");

  StateSpace space;
  space.k = k;
  Configuration initial{Multiset::single(p.initial_location, Count(k)), d0};

  IndexMap index;
  index.reserve(1024);
  space.nodes.push_back(initial);
  index.emplace(std::move(initial), 0);

  std::deque<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    const std::uint32_t v = frontier.front();
    frontier.pop_front();
    auto post = successors(p, space.nodes[v]); // already sorted
    std::vector<std::uint32_t> edges;
    edges.reserve(post.size());
    for (auto& g : post) {
      auto [it, inserted] =
          index.emplace(std::move(g), static_cast<std::uint32_t>(space.nodes.size()));
      if (inserted) {
        if (space.nodes.size() >= node_cap)
          fail(ErrorCode::ResourceLimit,
               "state space exceeds node cap " + std::to_string(node_cap));
        space.nodes.push_back(it->first);
        frontier.push_back(it->second);
      }
      edges.push_back(it->second);
    }
    space.n_edges += edges.size();
    if (space.succ.size() <= v) space.succ.resize(v + 1);
    space.succ[v] = std::move(edges);
  }
  space.succ.resize(space.nodes.size());
  return space;
}

bool check_coverable(const Protocol& p, std::uint64_t k, DatumId d0,
                     LocId target, std::uint64_t node_cap) {
  const StateSpace space = explore(p, k, d0, node_cap);
  return std::any_of(space.nodes.begin(), space.nodes.end(),
                     [&](const Configuration& g) {
                       return g.states.contains(target);
                     });
}

std::vector<bool> can_reach_target(const StateSpace& space, LocId target) {
  const std::size_t n = space.nodes.size();
  std::vector<std::vector<std::uint32_t>> pred(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w : space.succ[v]) pred[w].push_back(v);
  }
  std::vector<bool> reach(n, false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (space.nodes[v].states.contains(target)) {
      reach[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t u : pred[v]) {
      if (!reach[u]) {
        reach[u] = true;
        queue.push_back(u);
      }
    }
  }
  return reach;
}

Verdict check_almost_sure(const StateSpace& space, LocId target) {
  Verdict verdict;
  verdict.n_nodes = space.nodes.size();
  verdict.n_edges = space.n_edges;
  const auto reach = can_reach_target(space, target);
  verdict.almost_sure = true;
  for (std::uint32_t v = 0; v < space.nodes.size(); ++v) {
    if (!reach[v]) {
      verdict.almost_sure = false;
      verdict.witness = space.nodes[v];
      break;
    }
  }
  return verdict;
}

Verdict check_almost_sure(const Protocol& p, std::uint64_t k, DatumId d0,
                          LocId target, std::uint64_t node_cap) {
  const auto start = std::chrono::steady_clock::now();
  const StateSpace space = explore(p, k, d0, node_cap);
  Verdict verdict = check_almost_sure(space, target);
  verdict.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return verdict;
}

} // namespace rproto
