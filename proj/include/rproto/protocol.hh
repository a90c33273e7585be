#ifndef RPROTO_PROTOCOL_HH_
#define RPROTO_PROTOCOL_HH_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rproto/errors.hh"
#include "rproto/multiset.hh"

namespace rproto {

enum class Op : std::uint8_t { Read, Write, AtomicReadWrite };

/// One protocol transition. `read_value` is meaningful for Read and
/// AtomicReadWrite, `write_value` for Write and AtomicReadWrite; the unused
/// field is zero so that transitions compare structurally.
struct Transition {
  LocId src = 0;
  Op op = Op::Read;
  DatumId read_value = 0;
  DatumId write_value = 0;
  LocId dst = 0;

  static Transition read(LocId q, DatumId d, LocId q2) {
    return Transition{q, Op::Read, d, 0, q2};
  }
  static Transition write(LocId q, DatumId d, LocId q2) {
    return Transition{q, Op::Write, 0, d, q2};
  }
  static Transition atomic(LocId q, DatumId dr, DatumId dw, LocId q2) {
    return Transition{q, Op::AtomicReadWrite, dr, dw, q2};
  }

  bool operator==(const Transition&) const = default;
  auto operator<=>(const Transition&) const = default;
};

enum class ReadPolicy : std::uint8_t {
  SelfLoop, // missing reads at read-enabled locations become self-loops
  Strict,   // missing reads are an error
};

/// A register protocol: identical finite-state processes sharing one
/// finite-domain register. Built either programmatically or by the DSL
/// parser; analyses require a protocol that went through validate().
struct Protocol {
  std::string name;
  std::vector<std::string> location_names;
  std::vector<std::string> datum_names;
  LocId initial_location = 0;
  DatumId initial_datum = 0;
  std::optional<LocId> target; // default target for analyses, may be absent
  ReadPolicy policy = ReadPolicy::SelfLoop;
  std::vector<Transition> transitions;

  std::size_t n_locations() const { return location_names.size(); }
  std::size_t n_data() const { return datum_names.size(); }

  /// True iff any transition is an atomic read-write pair.
  bool atomic() const;

  std::optional<LocId> find_location(const std::string& name) const;
  std::optional<DatumId> find_datum(const std::string& name) const;
  const std::string& location_name(LocId id) const;
  const std::string& datum_name(DatumId id) const;

  LocId require_location(const std::string& name) const;
  DatumId require_datum(const std::string& name) const;

  /// Structural equality; transition order is irrelevant.
  bool operator==(const Protocol& other) const;
};

/// Checks the protocol invariants and returns the completed protocol.
/// Under ReadPolicy::SelfLoop every missing read (q, R, d, .) at a
/// read-enabled location q is first added as a self-loop. Throws Error with
/// DeadlockLocation, IncompleteReads or UndeclaredSymbol on violation.
Protocol validate(const Protocol& p,
                  std::optional<ReadPolicy> policy_override = std::nullopt);

/// Analyses relying on monotonicity reject atomic protocols through this.
void require_non_atomic(const Protocol& p, const char* operation);

} // namespace rproto

#endif
