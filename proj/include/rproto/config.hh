#ifndef RPROTO_CONFIG_HH_
#define RPROTO_CONFIG_HH_

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rproto/multiset.hh"
#include "rproto/protocol.hh"

namespace rproto {

using Rational = boost::multiprecision::cpp_rational;

/// Configuration of a distributed system: a multiset of locations plus the
/// register content. Immutable as far as the analyses are concerned.
struct Configuration {
  Multiset states;
  DatumId datum = 0;

  Count size() const { return states.cardinality(); }

  bool operator==(const Configuration&) const = default;
  std::strong_ordering operator<=>(const Configuration&) const = default;
  std::size_t hash() const;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& g) const { return g.hash(); }
};

/// All distinct successors of `g` under the one-step semantics. Reads
/// require the register to match and leave it unchanged; writes update it;
/// atomic read-writes do both in one indivisible step. Sorted canonically.
std::vector<Configuration> successors(const Protocol& p,
                                      const Configuration& g);

/// Uniform distribution over the successor set, 1/|Post(g)| each.
std::vector<std::pair<Configuration, Rational>> post_distribution(
    const Protocol& p, const Configuration& g);

enum class Order : std::uint8_t {
  Paper, // equal datum, equal support, multiset inclusion
  Plain, // equal datum, multiset inclusion
};

enum class Cmp : std::uint8_t { Less, Equal, Greater, Incomparable };

Cmp compare(const Configuration& a, const Configuration& b, Order order);

/// True iff a <= b in the given order.
bool leq(const Configuration& a, const Configuration& b, Order order);

std::string to_string(const Protocol& p, const Configuration& g);
std::string to_string(const Protocol& p, const Multiset& m);

} // namespace rproto

#endif
