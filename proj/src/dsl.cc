#include "rproto/dsl.hh"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace rproto {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

[[noreturn]] void undeclared(std::size_t line_no, const std::string& what,
                             const std::string& name) {
  fail(ErrorCode::UndeclaredSymbol,
       "line " + std::to_string(line_no) + ": undeclared " + what + " '" +
           name + "'");
}

} // namespace

Protocol parse(const std::string& text) {
  Protocol p;
  std::map<std::string, LocId> locs;
  std::map<std::string, DatumId> data;

  enum Section { Header, Locations, Data, Init, Register, Reads, Transitions };
  Section next = Header;

  auto loc_of = [&](std::size_t ln, const std::string& n) {
    auto it = locs.find(n);
    if (it == locs.end()) undeclared(ln, "location", n);
    return it->second;
  };
  auto datum_of = [&](std::size_t ln, const std::string& n) {
    auto it = data.find(n);
    if (it == data.end()) undeclared(ln, "datum", n);
    return it->second;
  };

  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  bool saw_any = false;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = tokenize(line);
    saw_any = true;
    const std::string& kw = tokens[0];

    if (next == Header) {
      if (kw != "protocol" || tokens.size() != 2)
        parse_fail(line_no, "expected 'protocol <name>' header");
      p.name = tokens[1];
      next = Locations;
      continue;
    }
    if (next == Locations) {
      if (kw != "locations" || tokens.size() < 2)
        parse_fail(line_no, "expected 'locations <q> ...'");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!locs.emplace(tokens[i], static_cast<LocId>(locs.size())).second)
          fail(ErrorCode::DuplicateSymbol, "line " + std::to_string(line_no) +
                                               ": duplicate location '" +
                                               tokens[i] + "'");
        p.location_names.push_back(tokens[i]);
      }
      next = Data;
      continue;
    }
    if (next == Data) {
      if (kw != "data" || tokens.size() < 2)
        parse_fail(line_no, "expected 'data <d> ...'");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!data.emplace(tokens[i], static_cast<DatumId>(data.size())).second)
          fail(ErrorCode::DuplicateSymbol, "line " + std::to_string(line_no) +
                                               ": duplicate datum '" +
                                               tokens[i] + "'");
        p.datum_names.push_back(tokens[i]);
      }
      next = Init;
      continue;
    }
    if (next == Init) {
      if (kw != "init" || tokens.size() != 2)
        parse_fail(line_no, "expected 'init <q>'");
      p.initial_location = loc_of(line_no, tokens[1]);
      next = Register;
      continue;
    }
    if (next == Register) {
      if (kw != "register" || tokens.size() != 2)
        parse_fail(line_no, "expected 'register <d>'");
      p.initial_datum = datum_of(line_no, tokens[1]);
      next = Reads;
      continue;
    }
    if (next == Reads) {
      if (kw == "target") {
        if (tokens.size() != 2) parse_fail(line_no, "expected 'target <q>'");
        if (p.target) parse_fail(line_no, "duplicate target declaration");
        p.target = loc_of(line_no, tokens[1]);
        continue;
      }
      if (kw != "reads" || tokens.size() != 2)
        parse_fail(line_no, "expected 'reads self|strict'");
      if (tokens[1] == "self")
        p.policy = ReadPolicy::SelfLoop;
      else if (tokens[1] == "strict")
        p.policy = ReadPolicy::Strict;
      else
        parse_fail(line_no, "unknown reads policy '" + tokens[1] + "'");
      next = Transitions;
      continue;
    }

    // Transition lines.
    if (tokens.size() == 4 && (tokens[1] == "R" || tokens[1] == "W")) {
      const LocId src = loc_of(line_no, tokens[0]);
      const DatumId d = datum_of(line_no, tokens[2]);
      const LocId dst = loc_of(line_no, tokens[3]);
      p.transitions.push_back(tokens[1] == "R" ? Transition::read(src, d, dst)
                                               : Transition::write(src, d, dst));
    } else if (tokens.size() == 5 && tokens[1] == "RW") {
      const LocId src = loc_of(line_no, tokens[0]);
      const DatumId dr = datum_of(line_no, tokens[2]);
      const DatumId dw = datum_of(line_no, tokens[3]);
      const LocId dst = loc_of(line_no, tokens[4]);
      p.transitions.push_back(Transition::atomic(src, dr, dw, dst));
    } else {
      parse_fail(line_no, "malformed transition '" + line + "'");
    }
  }

  if (!saw_any) fail(ErrorCode::ParseError, "missing 'protocol' header");
  if (next != Transitions)
    fail(ErrorCode::ParseError, "incomplete declarations (stopped before " +
                                    std::string(next == Locations ? "locations"
                                                 : next == Data   ? "data"
                                                 : next == Init   ? "init"
                                                 : next == Register
                                                     ? "register"
                                                     : "reads") +
                                    ")");
  std::sort(p.transitions.begin(), p.transitions.end());
  p.transitions.erase(std::unique(p.transitions.begin(), p.transitions.end()),
                      p.transitions.end());
  return p;
}

std::string serialize(const Protocol& p) {
  std::ostringstream os;
  os << "protocol " << p.name << '\n';
  os << "locations";
  for (const auto& q : p.location_names) os << ' ' << q;
  os << '\n';
  os << "data";
  for (const auto& d : p.datum_names) os << ' ' << d;
  os << '\n';
  os << "init " << p.location_name(p.initial_location) << '\n';
  os << "register " << p.datum_name(p.initial_datum) << '\n';
  if (p.target) os << "target " << p.location_name(*p.target) << '\n';
  os << "reads " << (p.policy == ReadPolicy::SelfLoop ? "self" : "strict")
     << '\n';

  std::vector<std::string> lines;
  lines.reserve(p.transitions.size());
  for (const Transition& t : p.transitions) {
    std::ostringstream ls;
    ls << p.location_name(t.src);
    switch (t.op) {
      case Op::Read:
        ls << " R " << p.datum_name(t.read_value);
        break;
      case Op::Write:
        ls << " W " << p.datum_name(t.write_value);
        break;
      case Op::AtomicReadWrite:
        ls << " RW " << p.datum_name(t.read_value) << ' '
           << p.datum_name(t.write_value);
        break;
    }
    ls << ' ' << p.location_name(t.dst);
    lines.push_back(ls.str());
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (const auto& l : lines) os << l << '\n';
  return os.str();
}

namespace {

Protocol make_running() {
  Protocol p;
  p.name = "running";
  p.location_names = {"q0", "q1", "q2", "qf"};
  p.datum_names = {"0", "1", "2"};
  p.initial_location = 0;
  p.initial_datum = 0;
  p.target = 3;
  p.policy = ReadPolicy::SelfLoop;
  p.transitions = {
      Transition::read(0, 0, 1),  // q0 -R(0)-> q1
      Transition::write(1, 1, 1), // q1 -W(1)-> q1
      Transition::read(1, 1, 2),  // q1 -R(1)-> q2
      Transition::write(2, 2, 1), // q2 -W(2)-> q1
      Transition::read(2, 2, 3),  // q2 -R(2)-> qf
      Transition::write(3, 2, 3), // qf -W(2)-> qf
  };
  return p;
}

Protocol make_atomic_parity() {
  Protocol p;
  p.name = "parity";
  p.location_names = {"q0", "q1", "q2", "qf"};
  p.datum_names = {"0", "1", "2"};
  p.initial_location = 0;
  p.initial_datum = 0;
  p.target = 3;
  p.policy = ReadPolicy::SelfLoop;
  p.transitions = {
      Transition::atomic(0, 0, 1, 1), // q0 -R(0);W(1)-> q1
      Transition::atomic(1, 1, 0, 0), // q1 -R(1);W(0)-> q0
      Transition::atomic(0, 1, 2, 2), // q0 -R(1);W(2)-> q2
      Transition::atomic(1, 2, 0, 2), // q1 -R(2);W(0)-> q2
      Transition::read(0, 0, 3),      // q0 -R(0)-> qf
  };
  // Processes parked in q2 or qf only observe the register.
  for (DatumId d = 0; d < 3; ++d) {
    p.transitions.push_back(Transition::read(2, d, 2));
    p.transitions.push_back(Transition::read(3, d, 3));
  }
  return p;
}

Protocol make_filter(unsigned n) {
  Protocol p;
  p.name = "filter" + std::to_string(n);
  for (unsigned i = 0; i <= n; ++i)
    p.location_names.push_back("s" + std::to_string(i));
  for (unsigned d = 0; d < n; ++d)
    p.datum_names.push_back(std::to_string(d));
  p.initial_location = 0;
  p.initial_datum = 0;
  p.target = n;
  p.policy = ReadPolicy::SelfLoop;
  for (unsigned i = 0; i < n; ++i) {
    p.transitions.push_back(Transition::read(i, i, i + 1)); // s_i -R(i)-> s_i+1
    p.transitions.push_back(Transition::write(i, i, 0));    // s_i -W(i)-> s_0
  }
  // Self-loops at the last level; only datum 0 may be written there, any
  // other value would feed a level-advancing read.
  for (unsigned d = 0; d < n; ++d)
    p.transitions.push_back(Transition::read(n, d, n));
  p.transitions.push_back(Transition::write(n, 0, n));
  return p;
}

// Exponential-counter family: an n-bit binary counter driven by tokens.
// Bit gadgets a_i..d_i flip bit i, each pass through c_i consuming one
// fresh token (a write of "1"); d_i carries into bit i+1 by writing i+1,
// and d_n ends the simulation by writing "halt". Every process then drains
// into an (n+1)-level filter over data f_0..f_n whose last level is qf.
Protocol make_counter(unsigned n) {
  Protocol p;
  p.name = "counter" + std::to_string(n);
  auto loc = [&](const std::string& name) {
    p.location_names.push_back(name);
    return static_cast<LocId>(p.location_names.size() - 1);
  };
  const LocId init = loc("init");
  const LocId token = loc("token");
  const LocId sent = loc("sent");
  const LocId sink = loc("sink");
  std::vector<LocId> a(n + 1), b(n + 1), c(n + 1), d(n + 1);
  for (unsigned i = 1; i <= n; ++i) {
    a[i] = loc("a" + std::to_string(i));
    b[i] = loc("b" + std::to_string(i));
    c[i] = loc("c" + std::to_string(i));
    d[i] = loc("d" + std::to_string(i));
  }
  std::vector<LocId> s(n + 1);
  for (unsigned j = 0; j <= n; ++j) s[j] = loc("s" + std::to_string(j));
  const LocId qf = loc("qf");

  auto datum = [&](const std::string& name) {
    p.datum_names.push_back(name);
    return static_cast<DatumId>(p.datum_names.size() - 1);
  };
  const DatumId hash_mark = datum("#");
  std::vector<DatumId> val(n + 1);
  for (unsigned v = 0; v <= n; ++v) val[v] = datum(std::to_string(v));
  const DatumId halt = datum("halt");
  std::vector<DatumId> f(n + 1);
  for (unsigned j = 0; j <= n; ++j) f[j] = datum("f" + std::to_string(j));

  p.initial_location = init;
  p.initial_datum = hash_mark;
  p.target = qf;
  p.policy = ReadPolicy::SelfLoop;

  auto add = [&](Transition t) { p.transitions.push_back(t); };

  // Initialization: processes claim a bit gadget or become token writers.
  for (unsigned i = 1; i <= n; ++i) add(Transition::read(init, hash_mark, a[i]));
  add(Transition::read(init, hash_mark, token));
  add(Transition::write(token, val[1], sent));
  add(Transition::read(sent, halt, sink));
  for (DatumId dd = 0; dd < p.datum_names.size(); ++dd) {
    if (dd != halt) add(Transition::read(sent, dd, qf));
    add(Transition::read(sink, dd, sink));
    add(Transition::read(qf, dd, qf));
  }

  // Bit gadgets.
  for (unsigned i = 1; i <= n; ++i) {
    add(Transition::read(a[i], val[i], b[i]));
    add(Transition::write(b[i], val[0], c[i]));
    add(Transition::read(c[i], val[i], d[i]));
    if (i < n)
      add(Transition::write(d[i], val[i + 1], a[i]));
    else
      add(Transition::write(d[n], halt, s[0]));
    // A mismatched register value ends the simulation in qf.
    add(Transition::read(a[i], hash_mark, qf));
    for (unsigned v = 0; v <= n; ++v) {
      if (v == i) continue;
      add(Transition::read(a[i], val[v], qf));
      add(Transition::read(c[i], val[v], qf));
    }
    // Once counting starts, gadget processes drain into the filter.
    for (LocId x : {a[i], b[i], c[i], d[i]}) {
      add(Transition::read(x, halt, s[0]));
      for (unsigned j = 0; j <= n; ++j) add(Transition::read(x, f[j], s[0]));
    }
  }

  // Counting filter, levels s_0..s_n then qf.
  for (unsigned j = 0; j <= n; ++j) {
    add(Transition::write(s[j], f[j], s[0]));
    add(Transition::read(s[j], f[j], j == n ? qf : s[j + 1]));
  }
  return p;
}

} // namespace

Protocol generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Running:
      return make_running();
    case Family::AtomicParity:
      return make_atomic_parity();
    case Family::Filter:
      if (spec.n < 1)
        fail(ErrorCode::UnsupportedParameter, "filter requires n >= 1");
      return make_filter(spec.n);
    case Family::Counter:
      if (spec.n < 1)
        fail(ErrorCode::UnsupportedParameter, "counter requires n >= 1");
      return make_counter(spec.n);
  }
  fail(ErrorCode::Usage, "unknown family");
}

Family parse_family(const std::string& name) {
  if (name == "running") return Family::Running;
  if (name == "parity") return Family::AtomicParity;
  if (name == "filter") return Family::Filter;
  if (name == "counter") return Family::Counter;
  fail(ErrorCode::Usage, "unknown family '" + name + "'");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Running: return "running";
    case Family::AtomicParity: return "parity";
    case Family::Filter: return "filter";
    case Family::Counter: return "counter";
  }
  return "?";
}

} // namespace rproto
