#ifndef RPROTO_MULTISET_HH_
#define RPROTO_MULTISET_HH_

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rproto {

using LocId = std::uint32_t;
using DatumId = std::uint32_t;
using Count = boost::multiprecision::cpp_int;

/// Multiset over location identifiers. Entries are kept sorted by location
/// and never store a zero count, so equal multisets compare equal
/// structurally.
class Multiset {
 public:
  using Entry = std::pair<LocId, Count>;

  Multiset() = default;

  static Multiset single(LocId loc, Count n = 1);

  Count count_of(LocId loc) const;
  bool contains(LocId loc) const { return count_of(loc) > 0; }
  Count cardinality() const;
  std::vector<LocId> support() const;
  bool empty() const { return entries_.empty(); }

  /// Adds `delta` (possibly negative) to the count of `loc`. The resulting
  /// count must be non-negative.
  void add(LocId loc, const Count& delta);

  /// Pointwise inclusion: this(s) <= other(s) for all s.
  bool included_in(const Multiset& other) const;

  Multiset united(const Multiset& other) const;

  /// Pointwise difference; requires other.included_in(*this).
  Multiset minus(const Multiset& other) const;

  /// Copy with one process moved from `from` to `to`.
  Multiset moved(LocId from, LocId to) const;

  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const Multiset& other) const = default;
  std::strong_ordering operator<=>(const Multiset& other) const;

  std::size_t hash() const;

 private:
  std::vector<Entry> entries_;
};

std::size_t hash_combine(std::size_t seed, std::size_t value);
std::size_t hash_count(const Count& value);

} // namespace rproto

#endif
