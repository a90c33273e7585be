#include "rproto/config.hh"

#include <algorithm>
#include <sstream>

namespace rproto {

std::size_t Configuration::hash() const {
  return hash_combine(states.hash(), datum);
}

std::vector<Configuration> successors(const Protocol& p,
                                      const Configuration& g) {
  std::vector<Configuration> out;
  for (const Transition& t : p.transitions) {
    if (!g.states.contains(t.src)) continue;
    switch (t.op) {
      case Op::Read:
        if (t.read_value != g.datum) continue;
        out.push_back(Configuration{g.states.moved(t.src, t.dst), g.datum});
        break;
      case Op::Write:
        out.push_back(
            Configuration{g.states.moved(t.src, t.dst), t.write_value});
        break;
      case Op::AtomicReadWrite:
        if (t.read_value != g.datum) continue;
        out.push_back(
            Configuration{g.states.moved(t.src, t.dst), t.write_value});
        break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Configuration, Rational>> post_distribution(
    const Protocol& p, const Configuration& g) {
  auto post = successors(p, g);
  std::vector<std::pair<Configuration, Rational>> out;
  if (post.empty()) return out; // only possible under the atomic extension
  out.reserve(post.size());
  const Rational prob(1, static_cast<unsigned>(post.size()));
  for (auto& succ : post) out.emplace_back(std::move(succ), prob);
  return out;
}

Cmp compare(const Configuration& a, const Configuration& b, Order order) {
  if (a.datum != b.datum) return Cmp::Incomparable;
  if (order == Order::Paper && a.states.support() != b.states.support())
    return Cmp::Incomparable;
  const bool ab = a.states.included_in(b.states);
  const bool ba = b.states.included_in(a.states);
  if (ab && ba) return Cmp::Equal;
  if (ab) return Cmp::Less;
  if (ba) return Cmp::Greater;
  return Cmp::Incomparable;
}

bool leq(const Configuration& a, const Configuration& b, Order order) {
  const Cmp c = compare(a, b, order);
  return c == Cmp::Less || c == Cmp::Equal;
}

std::string to_string(const Protocol& p, const Multiset& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [loc, n] : m.entries()) {
    if (!first) os << ',';
    first = false;
    os << p.location_name(loc) << ':' << n;
  }
  os << '}';
  return os.str();
}

std::string to_string(const Protocol& p, const Configuration& g) {
  return to_string(p, g.states) + "," + p.datum_name(g.datum);
}

} // namespace rproto
