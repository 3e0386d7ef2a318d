#include "pegsol/solver.hpp"

#include <sstream>

#include "pegsol/automaton.hpp"
#include "plan_json.hpp"

namespace pegsol {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Singleton: return "Singleton";
    case FamilyTag::TwoPegsWithHole: return "TwoPegsWithHole";
    case FamilyTag::Stage1: return "Stage1";
    case FamilyTag::Stage2: return "Stage2";
    case FamilyTag::Stage3: return "Stage3";
    case FamilyTag::Stage4: return "Stage4";
    case FamilyTag::Stage5: return "Stage5";
  }
  throw InternalError("unreachable family tag");
}

std::string to_string(const Family& family) {
  std::ostringstream os;
  os << to_string(family.tag) << "{a=" << family.a << ",b=" << family.b << ",c=" << family.c
     << (family.orientation == Orientation::Mirrored ? ",mirrored}" : "}");
  return os.str();
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

void check_params(const Family& f) {
  if (f.a < 0 || f.b < 0 || f.c < 0) throw DomainError("family repetition counts must be nonnegative");
  if (f.tag == FamilyTag::Stage3 && f.b < 1)
    throw DomainError("Stage3 requires at least one (11) repetition");
}

void append_repeated(std::string& s, std::string_view unit, Index count) {
  for (Index i = 0; i < count; ++i) s += unit;
}

std::string as_is_pattern(const Family& f) {
  check_params(f);
  std::string s;
  switch (f.tag) {
    case FamilyTag::Singleton:
      return "1";
    case FamilyTag::TwoPegsWithHole:
      return "110";
    case FamilyTag::Stage1:
      s = "10";
      append_repeated(s, "10", f.a);
      s += "11";
      return s;
    case FamilyTag::Stage2:
      s = "11";
      append_repeated(s, "01", f.a);
      s += "00";
      append_repeated(s, "10", f.c);
      s += "11";
      return s;
    case FamilyTag::Stage3:
      s = "11";
      append_repeated(s, "01", f.a);
      append_repeated(s, "11", f.b);
      s += "00";
      append_repeated(s, "10", f.c);
      s += "11";
      return s;
    case FamilyTag::Stage4:
      s = "11";
      append_repeated(s, "01", f.a);
      append_repeated(s, "11", f.b);
      s += "01";
      return s;
    case FamilyTag::Stage5:
      s = "11";
      append_repeated(s, "01", f.a);
      append_repeated(s, "11", f.b);
      s += "1011";
      append_repeated(s, "10", f.c);
      s += "11";
      return s;
  }
  throw InternalError("unreachable family tag");
}

} // namespace

Configuration render(const Family& family) {
  std::string s = as_is_pattern(family);
  if (family.orientation == Orientation::Mirrored) std::reverse(s.begin(), s.end());
  return Configuration::parse(s);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

// Even-length strings are read as a row of cell pairs; each family shape is
// a short sentence over the four possible pairs.
enum : std::uint8_t { P00 = 0, P01 = 1, P10 = 2, P11 = 3 };

std::vector<std::uint8_t> pair_tokens(const std::string& s) {
  std::vector<std::uint8_t> tokens;
  tokens.reserve(s.size() / 2);
  for (std::size_t i = 0; i + 1 < s.size(); i += 2)
    tokens.push_back(static_cast<std::uint8_t>((s[i] - '0') * 2 + (s[i + 1] - '0')));
  return tokens;
}

Index run_length(const std::vector<std::uint8_t>& t, std::size_t& i, std::uint8_t token,
                 std::size_t limit) {
  Index count = 0;
  while (i < limit && t[i] == token) {
    ++i;
    ++count;
  }
  return count;
}

std::optional<Family> match_as_is(const std::string& s) {
  if (s == "1") return Family{FamilyTag::Singleton, Orientation::AsIs, 0, 0, 0};
  if (s.size() < 4 || s.size() % 2 != 0) return std::nullopt;
  const std::vector<std::uint8_t> t = pair_tokens(s);
  const std::size_t m = t.size();

  // Stage1: [10]^(a+1) [11]
  if (t[m - 1] == P11) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (t[i] != P10) { ok = false; break; }
    if (ok) return Family{FamilyTag::Stage1, Orientation::AsIs, static_cast<Index>(m) - 2, 0, 0};
  }

  // Stage2: [11] [01]^a [00] [10]^c [11]
  if (m >= 3 && t[0] == P11 && t[m - 1] == P11) {
    std::size_t i = 1;
    Index a = run_length(t, i, P01, m - 1);
    if (i < m - 1 && t[i] == P00) {
      ++i;
      Index c = run_length(t, i, P10, m - 1);
      if (i == m - 1) return Family{FamilyTag::Stage2, Orientation::AsIs, a, 0, c};
    }
  }

  // Stage3: [11] [01]^a [11]^b [00] [10]^c [11], b >= 1
  if (m >= 4 && t[0] == P11 && t[m - 1] == P11) {
    std::size_t i = 1;
    Index a = run_length(t, i, P01, m - 1);
    Index b = run_length(t, i, P11, m - 1);
    if (b >= 1 && i < m - 1 && t[i] == P00) {
      ++i;
      Index c = run_length(t, i, P10, m - 1);
      if (i == m - 1) return Family{FamilyTag::Stage3, Orientation::AsIs, a, b, c};
    }
  }

  // Stage4: [11] [01]^a [11]^b [01]  (the closing pair is not part of either run)
  if (t[0] == P11 && t[m - 1] == P01) {
    std::size_t i = 1;
    Index a = run_length(t, i, P01, m - 1);
    Index b = run_length(t, i, P11, m - 1);
    if (i == m - 1) return Family{FamilyTag::Stage4, Orientation::AsIs, a, b, 0};
  }

  // Stage5: [11] [01]^a [11]^b [10] [11] [10]^c [11]
  if (m >= 4 && t[0] == P11 && t[m - 1] == P11) {
    std::size_t i = 1;
    Index a = run_length(t, i, P01, m - 1);
    Index b = run_length(t, i, P11, m - 1);
    if (i + 1 < m - 1 && t[i] == P10 && t[i + 1] == P11) {
      i += 2;
      Index c = run_length(t, i, P10, m - 1);
      if (i == m - 1) return Family{FamilyTag::Stage5, Orientation::AsIs, a, b, c};
    }
  }

  return std::nullopt;
}

} // namespace

std::optional<Family> try_classify(const Configuration& trimmed) {
  if (trimmed.empty()) throw DomainError("cannot classify an empty configuration");
  std::string s = trimmed.to_string();
  if (s.front() != '1' || s.back() != '1')
    throw DomainError("classification expects a trimmed configuration");
  if (std::optional<Family> f = match_as_is(s)) return f;
  std::reverse(s.begin(), s.end());
  if (std::optional<Family> f = match_as_is(s)) {
    f->orientation = Orientation::Mirrored;
    return f;
  }
  return std::nullopt;
}

Family classify(const Configuration& trimmed) {
  if (std::optional<Family> f = try_classify(trimmed)) return *f;
  throw NotClassifiableError("configuration matches no solvable family: " + trimmed.to_string());
}

// ---------------------------------------------------------------------------
// Growth recipes
// ---------------------------------------------------------------------------

namespace {

constexpr Direction kLeft = Direction::Left;
constexpr Direction kRight = Direction::Right;

// Stage1 shape shifted right by `shift`: from a lone peg at shift+2, build
// the rightmost pair first, then stretch 10-pairs leftward... concretely:
// one unhop left, one back right, then march the frontier rightward.
void stage1_unhops(Index a, Index shift, std::vector<Unhop>& out) {
  out.push_back({shift + 2, kLeft});
  out.push_back({shift + 1, kRight});
  for (Index j = 1; j <= a; ++j) out.push_back({shift + 2 * j + 1, kRight});
}

// Stage2: build the Stage1 shape to the right of the eventual hole pair,
// then unhop leftward across it to lay down the 11(01)^a prefix.
void stage2_unhops(Index a, Index c, std::vector<Unhop>& out) {
  stage1_unhops(c, 2 * a + 2, out);
  for (Index j = 0; j <= a; ++j) out.push_back({2 * a + 2 - 2 * j, kLeft});
}

// 11(01)^a (11)^b 00 (10)^c 11 for any b >= 0: build the b = 0 shape with
// the hole pair further left, then walk the hole pair right b times.
void hole_pair_chain_unhops(Index a, Index b, Index c, std::vector<Unhop>& out) {
  stage2_unhops(a, b + c, out);
  for (Index j = 0; j < b; ++j) out.push_back({2 * a + 4 + 2 * j, kLeft});
}

void stage4_unhops(Index a, Index b, std::vector<Unhop>& out) {
  if (b == 0) {
    // Grow 1101 in place, then extend the (01) run leftward.
    out.push_back({2 * a + 1, kRight});
    out.push_back({2 * a + 2, kLeft});
    for (Index j = 0; j < a; ++j) out.push_back({2 * a - 2 * j, kLeft});
  } else {
    // Build the chain shape one (11) short, then split its hole pair.
    hole_pair_chain_unhops(a, b - 1, 0, out);
    out.push_back({2 * a + 2 * b + 2, kLeft});
  }
}

void stage5_unhops(Index a, Index b, Index c, std::vector<Unhop>& out) {
  // Build the chain shape one (11) long, then split its extra pair into 1011.
  hole_pair_chain_unhops(a, b + 1, c, out);
  out.push_back({2 * a + 2 * b + 3, kRight});
}

} // namespace

UnhopScript unhop_script(const Family& family) {
  check_params(family);
  UnhopScript script;
  switch (family.tag) {
    case FamilyTag::Singleton:
      script.board_length = 1;
      script.start_peg = 0;
      break;
    case FamilyTag::TwoPegsWithHole:
      script.board_length = 3;
      script.start_peg = 2;
      script.unhops.push_back({2, kLeft});
      break;
    case FamilyTag::Stage1:
      script.board_length = 2 * family.a + 4;
      script.start_peg = 2;
      stage1_unhops(family.a, 0, script.unhops);
      break;
    case FamilyTag::Stage2:
      script.board_length = 2 * family.a + 2 * family.c + 6;
      script.start_peg = 2 * family.a + 4;
      stage2_unhops(family.a, family.c, script.unhops);
      break;
    case FamilyTag::Stage3:
      script.board_length = 2 * family.a + 2 * family.b + 2 * family.c + 6;
      script.start_peg = 2 * family.a + 4;
      hole_pair_chain_unhops(family.a, family.b, family.c, script.unhops);
      break;
    case FamilyTag::Stage4:
      script.board_length = 2 * family.a + 2 * family.b + 4;
      script.start_peg = family.b == 0 ? 2 * family.a + 1 : 2 * family.a + 4;
      stage4_unhops(family.a, family.b, script.unhops);
      break;
    case FamilyTag::Stage5:
      script.board_length = 2 * family.a + 2 * family.b + 2 * family.c + 8;
      script.start_peg = 2 * family.a + 4;
      stage5_unhops(family.a, family.b, family.c, script.unhops);
      break;
  }
  if (family.orientation == Orientation::Mirrored) {
    script.start_peg = script.board_length - 1 - script.start_peg;
    for (Unhop& u : script.unhops) u = mirrored(u, script.board_length);
  }
  return script;
}

// ---------------------------------------------------------------------------
// Solving
// ---------------------------------------------------------------------------

Plan solve_single(const Configuration& config) {
  if (!accepts(config)) throw UnsolvableError("configuration is not solvable: " + config.to_string());

  TrimResult trimmed = trim(config);
  const Index offset = trimmed.offset;
  Plan plan;
  plan.initial = config;
  plan.final_pegs = 1;

  if (trimmed.config.size() == 2) {
    // A bare peg pair: jump into whichever outside hole exists, preferring
    // the right one.
    if (offset + 2 < config.size())
      plan.moves.push_back({offset, kRight});
    else
      plan.moves.push_back({offset + 1, kLeft});
    return plan;
  }

  Family family;
  if (std::optional<Family> f = try_classify(trimmed.config)) {
    family = *f;
  } else {
    throw InternalError("recognizer accepted a configuration no family matches: " +
                        trimmed.config.to_string());
  }

  UnhopScript script = unhop_script(family);
  plan.moves.reserve(script.unhops.size());
  for (auto it = script.unhops.rbegin(); it != script.unhops.rend(); ++it) {
    Move m = inverse(*it);
    m.from += offset;
    plan.moves.push_back(m);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string to_json_string(const Plan& plan) { return detail::plan_to_json(plan).dump(); }

std::string to_text(const Plan& plan) {
  std::ostringstream os;
  for (std::size_t i = 0; i < plan.moves.size(); ++i) {
    if (i) os << ' ';
    os << to_string(plan.moves[i]);
  }
  return os.str();
}

} // namespace pegsol
