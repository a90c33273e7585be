#ifndef RPROTO_DSL_HH_
#define RPROTO_DSL_HH_

#include <cstdint>
#include <string>

#include "rproto/protocol.hh"

namespace rproto {

/// Parses the line-oriented protocol format. Statement order is fixed:
///
///   protocol <name>
///   locations <q> <q> ...
///   data <d> <d> ...
///   init <q>
///   register <d>
///   target <q>          (optional)
///   reads self|strict
///   <q> R <d> <q'>          read transition
///   <q> W <d> <q'>          write transition
///   <q> RW <dr> <dw> <q'>   atomic read-write (extension)
///
/// Lines whose first non-blank character is '#' are comments; blank lines
/// are ignored. Throws Error(ParseError/UndeclaredSymbol/DuplicateSymbol)
/// with the offending line number. The result is not yet validated.
Protocol parse(const std::string& text);

/// Canonical text form: declarations in stored order, transitions sorted
/// bytewise. parse(serialize(p)) == p for every valid protocol.
std::string serialize(const Protocol& p);

enum class Family : std::uint8_t { Running, AtomicParity, Filter, Counter };

struct FamilySpec {
  Family family = Family::Running;
  unsigned n = 1; // Filter and Counter only, must be >= 1
};

/// Builds one of the four protocol families, pre-completion (missing reads
/// are left to validate() under the self-loop policy).
Protocol generate(const FamilySpec& spec);

Family parse_family(const std::string& name);
const char* family_name(Family family);

} // namespace rproto

#endif
