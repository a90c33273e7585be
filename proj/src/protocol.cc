#include "rproto/protocol.hh"

#include <algorithm>
#include <set>

namespace rproto {

bool Protocol::atomic() const {
  return std::any_of(transitions.begin(), transitions.end(),
                     [](const Transition& t) {
                       return t.op == Op::AtomicReadWrite;
                     });
}

std::optional<LocId> Protocol::find_location(const std::string& n) const {
  for (std::size_t i = 0; i < location_names.size(); ++i) {
    if (location_names[i] == n) return static_cast<LocId>(i);
  }
  return std::nullopt;
}

std::optional<DatumId> Protocol::find_datum(const std::string& n) const {
  for (std::size_t i = 0; i < datum_names.size(); ++i) {
    if (datum_names[i] == n) return static_cast<DatumId>(i);
  }
  return std::nullopt;
}

const std::string& Protocol::location_name(LocId id) const {
  return location_names.at(id);
}

const std::string& Protocol::datum_name(DatumId id) const {
  return datum_names.at(id);
}

LocId Protocol::require_location(const std::string& n) const {
  if (auto id = find_location(n)) return *id;
  fail(ErrorCode::UndeclaredSymbol, "unknown location '" + n + "'");
}

DatumId Protocol::require_datum(const std::string& n) const {
  if (auto id = find_datum(n)) return *id;
  fail(ErrorCode::UndeclaredSymbol, "unknown datum '" + n + "'");
}

bool Protocol::operator==(const Protocol& other) const {
  if (name != other.name || location_names != other.location_names ||
      datum_names != other.datum_names ||
      initial_location != other.initial_location ||
      initial_datum != other.initial_datum || target != other.target ||
      policy != other.policy) {
    return false;
  }
  auto a = transitions;
  auto b = other.transitions;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

Protocol validate(const Protocol& p, std::optional<ReadPolicy> policy_override) {
  Protocol out = p;
  const ReadPolicy policy = policy_override.value_or(p.policy);
  out.policy = policy;

  const auto n_locs = static_cast<LocId>(p.location_names.size());
  const auto n_data = static_cast<DatumId>(p.datum_names.size());

  if (p.initial_location >= n_locs)
    fail(ErrorCode::UndeclaredSymbol, "initial location out of range");
  if (p.initial_datum >= n_data)
    fail(ErrorCode::UndeclaredSymbol, "initial register datum out of range");
  if (p.target && *p.target >= n_locs)
    fail(ErrorCode::UndeclaredSymbol, "target location out of range");
  for (const Transition& t : p.transitions) {
    if (t.src >= n_locs || t.dst >= n_locs)
      fail(ErrorCode::UndeclaredSymbol,
           "transition endpoint out of range in protocol '" + p.name + "'");
    if ((t.op != Op::Write && t.read_value >= n_data) ||
        (t.op != Op::Read && t.write_value >= n_data))
      fail(ErrorCode::UndeclaredSymbol,
           "transition datum out of range in protocol '" + p.name + "'");
  }

  std::sort(out.transitions.begin(), out.transitions.end());
  out.transitions.erase(
      std::unique(out.transitions.begin(), out.transitions.end()),
      out.transitions.end());

  // Read data present per location, over plain reads only.
  std::vector<std::set<DatumId>> reads(n_locs);
  for (const Transition& t : out.transitions) {
    if (t.op == Op::Read) reads[t.src].insert(t.read_value);
  }

  for (LocId q = 0; q < n_locs; ++q) {
    if (reads[q].empty()) continue; // not read-enabled
    for (DatumId d = 0; d < n_data; ++d) {
      if (reads[q].count(d)) continue;
      if (policy == ReadPolicy::SelfLoop) {
        out.transitions.push_back(Transition::read(q, d, q));
      } else {
        fail(ErrorCode::IncompleteReads,
             "location '" + p.location_name(q) + "' has no read for datum '" +
                 p.datum_name(d) + "'");
      }
    }
  }
  std::sort(out.transitions.begin(), out.transitions.end());

  std::vector<bool> has_out(n_locs, false);
  for (const Transition& t : out.transitions) has_out[t.src] = true;
  for (LocId q = 0; q < n_locs; ++q) {
    if (!has_out[q])
      fail(ErrorCode::DeadlockLocation,
           "location '" + p.location_name(q) + "' has no outgoing transition");
  }
  return out;
}

void require_non_atomic(const Protocol& p, const char* operation) {
  if (p.atomic())
    fail(ErrorCode::AtomicUnsupported,
         std::string(operation) + " requires a non-atomic protocol");
}

} // namespace rproto
