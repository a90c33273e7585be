#include "rproto/multiset.hh"

#include <algorithm>
#include <cassert>

#include "rproto/errors.hh"

namespace rproto {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::UndeclaredSymbol: return "undeclared_symbol";
    case ErrorCode::DuplicateSymbol: return "duplicate_symbol";
    case ErrorCode::DeadlockLocation: return "deadlock_location";
    case ErrorCode::IncompleteReads: return "incomplete_reads";
    case ErrorCode::AtomicUnsupported: return "atomic_unsupported";
    case ErrorCode::ResourceLimit: return "resource_limit";
    case ErrorCode::UncertifiedVerdict: return "uncertified_verdict";
    case ErrorCode::UnknownLocation: return "unknown_location";
    case ErrorCode::UnsupportedParameter: return "unsupported_parameter";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

Multiset Multiset::single(LocId loc, Count n) {
  Multiset m;
  if (n > 0) m.entries_.emplace_back(loc, std::move(n));
  return m;
}

Count Multiset::count_of(LocId loc) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), loc,
      [](const Entry& e, LocId l) { return e.first < l; });
  if (it != entries_.end() && it->first == loc) return it->second;
  return 0;
}

Count Multiset::cardinality() const {
  Count total = 0;
  for (const auto& [loc, n] : entries_) total += n;
  return total;
}

std::vector<LocId> Multiset::support() const {
  std::vector<LocId> s;
  s.reserve(entries_.size());
  for (const auto& [loc, n] : entries_) s.push_back(loc);
  return s;
}

void Multiset::add(LocId loc, const Count& delta) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), loc,
      [](const Entry& e, LocId l) { return e.first < l; });
  if (it != entries_.end() && it->first == loc) {
    it->second += delta;
    assert(it->second >= 0);
    if (it->second == 0) entries_.erase(it);
  } else {
    assert(delta >= 0);
    if (delta != 0) entries_.insert(it, Entry{loc, delta});
  }
}

bool Multiset::included_in(const Multiset& other) const {
  for (const auto& [loc, n] : entries_) {
    if (n > other.count_of(loc)) return false;
  }
  return true;
}

Multiset Multiset::united(const Multiset& other) const {
  Multiset result = *this;
  for (const auto& [loc, n] : other.entries_) result.add(loc, n);
  return result;
}

Multiset Multiset::minus(const Multiset& other) const {
  Multiset result = *this;
  for (const auto& [loc, n] : other.entries_) result.add(loc, -n);
  return result;
}

Multiset Multiset::moved(LocId from, LocId to) const {
  Multiset result = *this;
  result.add(from, -1);
  result.add(to, 1);
  return result;
}

std::strong_ordering Multiset::operator<=>(const Multiset& other) const {
  const auto n = std::min(entries_.size(), other.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].first != other.entries_[i].first)
      return entries_[i].first <=> other.entries_[i].first;
    if (entries_[i].second != other.entries_[i].second)
      return entries_[i].second < other.entries_[i].second
                 ? std::strong_ordering::less
                 : std::strong_ordering::greater;
  }
  return entries_.size() <=> other.entries_.size();
}

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_count(const Count& value) {
  // Counts in reachable configurations are small; truncation is fine for a
  // hash as long as it is deterministic.
  return static_cast<std::size_t>(
      static_cast<std::uint64_t>(value & 0xffffffffffffffffULL));
}

std::size_t Multiset::hash() const {
  std::size_t h = 0x51ed2701u;
  for (const auto& [loc, n] : entries_) {
    h = hash_combine(h, loc);
    h = hash_combine(h, hash_count(n));
  }
  return h;
}

} // namespace rproto
