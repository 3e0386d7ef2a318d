#include "pegsol/minpegs.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "plan_json.hpp"

namespace pegsol {

namespace {

constexpr std::size_t kFlavors = 3;

inline std::size_t flavor_index(Boundary b) { return static_cast<std::size_t>(b); }

// The per-stretch languages, one recognizer per (left boundary, exported
// boundary) behavior.  "family" stands for the reducible cores with three or
// more pegs: exactly the stretches whose reductions never use a cell outside
// their own trimmed span, which is why only bare pairs ever borrow.
BlockAutomaton build_block_automaton() {
  using namespace regex;

  auto zeros = [] { return star(lit('0')); };
  auto holes = [] { return plus(lit('0')); };

  // Ends unusable: lone peg with any padding, or a padded core whose last
  // cell is a hole.
  Nfa self_plain = build_nfa(alt({
      cat({zeros(), lit('1'), zeros()}),
      cat({zeros(), family_core_ast(), holes()}),
      cat({zeros(), word("11"), holes()}),
  }));
  // Ends in a lendable peg: a core's last peg with nothing after it.  A lone
  // peg never lends (its own survivor sits there), so it is absent here.
  Nfa self_avail = build_nfa(alt({
      cat({zeros(), family_core_ast()}),
      cat({holes(), word("11")}),
  }));
  // Bare pair hopping right: the next stretch's first cell is its landing.
  Nfa bare_right = build_nfa(word("11"));
  // Bare pair hopping left onto the previous stretch's lendable edge peg.
  Nfa bare_left = build_nfa(word("11"));
  // Stretches that may host a left neighbor's landing on their first cell:
  // they start with a peg they later vacate.  Lone pegs cannot host.
  Nfa hosted_plain = build_nfa(alt({
      cat({family_core_ast(), holes()}),
      cat({word("11"), holes()}),
  }));
  Nfa hosted_avail = build_nfa(family_core_ast());

  // Merge into one state space: states 0..2 are the entry states, then the
  // six recognizers back to back.  Entry states copy the out-transitions of
  // their member recognizers' start states, so no epsilon arcs are needed.
  std::vector<std::array<std::vector<State>, 2>> transitions(kFlavors);
  std::vector<std::uint8_t> exports(kFlavors, 0);

  auto append = [&](const Nfa& n, Boundary exported) -> State {
    State offset = static_cast<State>(transitions.size());
    for (State q = 0; q < n.state_count(); ++q) {
      std::array<std::vector<State>, 2> row;
      for (int symbol = 0; symbol < 2; ++symbol)
        for (State to : n.targets(q, symbol)) row[static_cast<std::size_t>(symbol)].push_back(to + offset);
      transitions.push_back(std::move(row));
      exports.push_back(n.accepting(q) ? static_cast<std::uint8_t>(flavor_index(exported) + 1) : 0);
    }
    return offset + n.start();
  };

  State sp = append(self_plain, Boundary::Plain);
  State sa = append(self_avail, Boundary::PegAvailable);
  State br = append(bare_right, Boundary::BorrowPending);
  State bl = append(bare_left, Boundary::PegAvailable);
  State hp = append(hosted_plain, Boundary::Plain);
  State ha = append(hosted_avail, Boundary::PegAvailable);

  auto wire = [&](Boundary at, std::initializer_list<State> starts) {
    auto& row = transitions[flavor_index(at)];
    for (State st : starts)
      for (int symbol = 0; symbol < 2; ++symbol)
        for (State to : transitions[static_cast<std::size_t>(st)][static_cast<std::size_t>(symbol)])
          row[static_cast<std::size_t>(symbol)].push_back(to);
  };
  wire(Boundary::Plain, {sp, sa, br});
  wire(Boundary::PegAvailable, {sp, sa, br, bl});
  wire(Boundary::BorrowPending, {hp, ha, br});

  std::vector<std::uint8_t> accepting(transitions.size(), 0);
  for (std::size_t q = 0; q < transitions.size(); ++q) accepting[q] = exports[q] ? 1 : 0;

  BlockAutomaton a{Nfa(0, std::move(accepting), std::move(transitions)),
                   {static_cast<State>(flavor_index(Boundary::Plain)),
                    static_cast<State>(flavor_index(Boundary::PegAvailable)),
                    static_cast<State>(flavor_index(Boundary::BorrowPending))},
                   std::move(exports)};
  return a;
}

} // namespace

const BlockAutomaton& block_automaton() {
  static const BlockAutomaton instance = build_block_automaton();
  return instance;
}

LayeredDag build_layered_dag(const Configuration& config, const BlockAutomaton& a) {
  LayeredDag dag;
  dag.cell_count = config.size();
  dag.state_count = a.nfa.state_count();
  for (Index i = 0; i < config.size(); ++i) {
    int symbol = config.peg(i) ? 1 : 0;
    for (State q = 0; q < a.nfa.state_count(); ++q)
      for (State t : a.nfa.targets(q, symbol)) dag.arcs.push_back({q, i, t, i + 1, false});
  }
  for (Index i = 0; i <= config.size(); ++i)
    for (State t = 0; t < a.nfa.state_count(); ++t)
      if (std::uint8_t e = a.exports[static_cast<std::size_t>(t)])
        dag.arcs.push_back({t, i, a.entry[static_cast<std::size_t>(e - 1)], i, true});
  return dag;
}

namespace {

constexpr Index kUnreached = std::numeric_limits<Index>::max() / 4;

// Flattened automaton tables: the layer scans walk millions of cells, so
// transitions live in contiguous arrays and each layer only touches the
// states actually reached (a handful at a time).
struct ScanTables {
  std::size_t states = 0;
  std::array<State, kFlavors> entry{};
  std::vector<State> exporters[kFlavors];
  std::vector<std::uint64_t> export_mask[kFlavors];
  std::size_t words = 0;

  // forward[symbol]: targets of q at flat_fwd[symbol][begin_fwd[symbol][q] ...]
  std::vector<std::int32_t> begin_fwd[2];
  std::vector<State> flat_fwd[2];
  // reverse[symbol]: sources leading to q, same layout
  std::vector<std::int32_t> begin_rev[2];
  std::vector<State> flat_rev[2];
  // targets of q as a bitset, for the cut-finding reach walk
  std::vector<std::vector<std::uint64_t>> target_mask[2];
};

ScanTables make_tables(const BlockAutomaton& a) {
  const Nfa& nfa = a.nfa;
  ScanTables t;
  t.states = static_cast<std::size_t>(nfa.state_count());
  t.entry = a.entry;
  t.words = (t.states + 63) / 64;
  for (std::size_t f = 0; f < kFlavors; ++f) t.export_mask[f].assign(t.words, 0);
  for (State q = 0; q < nfa.state_count(); ++q) {
    std::uint8_t e = a.exports[static_cast<std::size_t>(q)];
    if (!e) continue;
    t.exporters[e - 1].push_back(q);
    t.export_mask[e - 1][static_cast<std::size_t>(q) / 64] |= 1ull << (static_cast<std::size_t>(q) % 64);
  }
  for (int symbol = 0; symbol < 2; ++symbol) {
    std::vector<std::int32_t> out_degree(t.states, 0), in_degree(t.states, 0);
    for (State q = 0; q < nfa.state_count(); ++q) {
      for (State to : nfa.targets(q, symbol)) {
        ++out_degree[static_cast<std::size_t>(q)];
        ++in_degree[static_cast<std::size_t>(to)];
      }
    }
    auto lay_out = [&](const std::vector<std::int32_t>& degree, std::vector<std::int32_t>& begin,
                       std::vector<State>& flat) {
      begin.assign(t.states + 1, 0);
      for (std::size_t q = 0; q < t.states; ++q) begin[q + 1] = begin[q] + degree[q];
      flat.assign(static_cast<std::size_t>(begin[t.states]), 0);
    };
    lay_out(out_degree, t.begin_fwd[symbol], t.flat_fwd[symbol]);
    lay_out(in_degree, t.begin_rev[symbol], t.flat_rev[symbol]);
    std::vector<std::int32_t> fwd_fill(t.begin_fwd[symbol].begin(),
                                       t.begin_fwd[symbol].end() - 1);
    std::vector<std::int32_t> rev_fill(t.begin_rev[symbol].begin(),
                                       t.begin_rev[symbol].end() - 1);
    t.target_mask[symbol].assign(t.states, std::vector<std::uint64_t>(t.words, 0));
    for (State q = 0; q < nfa.state_count(); ++q) {
      for (State to : nfa.targets(q, symbol)) {
        t.flat_fwd[symbol][static_cast<std::size_t>(fwd_fill[static_cast<std::size_t>(q)]++)] = to;
        t.flat_rev[symbol][static_cast<std::size_t>(rev_fill[static_cast<std::size_t>(to)]++)] = q;
        t.target_mask[symbol][static_cast<std::size_t>(q)][static_cast<std::size_t>(to) / 64] |=
            1ull << (static_cast<std::size_t>(to) % 64);
      }
    }
  }
  return t;
}

// One relaxation pass shared by both scan directions: `row` holds the
// settled distances of the previous layer for the states in `active`;
// `out`/`out_active` receive the new layer via the given flat edge table.
void relax_layer(const ScanTables& t, const std::vector<std::int32_t>& begin,
                 const std::vector<State>& flat, const std::vector<State>& active,
                 const std::vector<Index>& row, std::vector<Index>& out,
                 std::vector<State>& out_active) {
  out_active.clear();
  for (State q : active) {
    Index d = row[static_cast<std::size_t>(q)] + 1;
    for (std::int32_t e = begin[static_cast<std::size_t>(q)];
         e < begin[static_cast<std::size_t>(q) + 1]; ++e) {
      State to = flat[static_cast<std::size_t>(e)];
      Index& slot = out[static_cast<std::size_t>(to)];
      if (slot == kUnreached) {
        slot = d;
        out_active.push_back(to);
      } else if (d < slot) {
        slot = d;
      }
    }
  }
}

void clear_entries(std::vector<Index>& row, const std::vector<State>& active) {
  for (State q : active) row[static_cast<std::size_t>(q)] = kUnreached;
}

void relax_slot(std::vector<Index>& row, std::vector<State>& row_active, State q, Index d) {
  Index& slot = row[static_cast<std::size_t>(q)];
  if (slot == kUnreached) {
    slot = d;
    row_active.push_back(q);
  } else if (d < slot) {
    slot = d;
  }
}

// Distance from (Plain entry, 0) to the cheapest end-of-board entry state:
// the cheapest way to read the whole board as back-to-back stretches.  Each
// layer settles the cell arcs first, then lets the accepting states feed
// their flavor's entry state through the restart arcs.
Index forward_distance(const ScanTables& t, const Configuration& config) {
  std::vector<Index> dist(t.states, kUnreached), next(t.states, kUnreached);
  std::vector<State> active, next_active;
  dist[static_cast<std::size_t>(t.entry[flavor_index(Boundary::Plain)])] = 0;
  active.push_back(t.entry[flavor_index(Boundary::Plain)]);

  auto settle_restarts = [&](std::vector<Index>& row, std::vector<State>& row_active) {
    for (std::size_t f = 0; f < kFlavors; ++f) {
      Index best = kUnreached;
      for (State a : t.exporters[f]) best = std::min(best, row[static_cast<std::size_t>(a)]);
      if (best == kUnreached) continue;
      relax_slot(row, row_active, t.entry[f], best + 1);
    }
  };
  settle_restarts(dist, active); // layer 0, for fidelity; never an improvement

  for (Index i = 0; i < config.size(); ++i) {
    int symbol = config.peg(i) ? 1 : 0;
    relax_layer(t, t.begin_fwd[symbol], t.flat_fwd[symbol], active, dist, next, next_active);
    settle_restarts(next, next_active);
    clear_entries(dist, active);
    dist.swap(next);
    active.swap(next_active);
  }
  // A pending borrow at the right edge of the board has no stretch to land
  // in, so only the other two entry states finish a path.
  return std::min(dist[static_cast<std::size_t>(t.entry[flavor_index(Boundary::Plain)])],
                  dist[static_cast<std::size_t>(t.entry[flavor_index(Boundary::PegAvailable)])]);
}

// remaining[f][i]: distance from (entry[f], i) to the end of the board,
// scanning layers right to left over the reversed arcs.
std::array<std::vector<Index>, kFlavors> backward_remaining(const ScanTables& t,
                                                            const Configuration& config) {
  const Index n = config.size();
  std::array<std::vector<Index>, kFlavors> remaining;
  for (auto& r : remaining) r.assign(static_cast<std::size_t>(n) + 1, kUnreached);
  std::vector<Index> row(t.states, kUnreached), prev(t.states, kUnreached);
  std::vector<State> active, prev_active;

  auto settle_restarts = [&](std::vector<Index>& r, std::vector<State>& r_active) {
    for (std::size_t f = 0; f < kFlavors; ++f) {
      Index via = r[static_cast<std::size_t>(t.entry[f])];
      if (via == kUnreached) continue;
      for (State a : t.exporters[f]) relax_slot(r, r_active, a, via + 1);
    }
  };

  row[static_cast<std::size_t>(t.entry[flavor_index(Boundary::Plain)])] = 0;
  row[static_cast<std::size_t>(t.entry[flavor_index(Boundary::PegAvailable)])] = 0;
  active.push_back(t.entry[flavor_index(Boundary::Plain)]);
  active.push_back(t.entry[flavor_index(Boundary::PegAvailable)]);
  settle_restarts(row, active); // restart arcs at the last layer
  remaining[flavor_index(Boundary::Plain)][static_cast<std::size_t>(n)] = 0;
  remaining[flavor_index(Boundary::PegAvailable)][static_cast<std::size_t>(n)] = 0;

  for (Index i = n - 1; i >= 0; --i) {
    int symbol = config.peg(i) ? 1 : 0;
    relax_layer(t, t.begin_rev[symbol], t.flat_rev[symbol], active, row, prev, prev_active);
    settle_restarts(prev, prev_active);
    clear_entries(row, active);
    row.swap(prev);
    active.swap(prev_active);
    for (std::size_t f = 0; f < kFlavors; ++f)
      remaining[f][static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(t.entry[f])];
  }
  return remaining;
}

bool mask_intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

bool mask_empty(const std::vector<std::uint64_t>& a) {
  for (std::uint64_t w : a)
    if (w) return false;
  return true;
}

} // namespace

std::string to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::SelfContained: return "self-contained";
    case SegmentKind::BorrowsLeft: return "borrows-left";
    case SegmentKind::BorrowsRight: return "borrows-right";
  }
  throw DomainError("unknown segment kind");
}

PartitionResult min_peg_partition(const Configuration& config, const BlockAutomaton& a) {
  if (config.peg_count() == 0)
    throw DomainError("cannot partition a board with no pegs into reducible stretches");

  const Index n = config.size();
  ScanTables tables = make_tables(a);

  Index total = forward_distance(tables, config);
  std::array<std::vector<Index>, kFlavors> remaining = backward_remaining(tables, config);
  if (total == kUnreached || remaining[flavor_index(Boundary::Plain)][0] != total)
    throw InternalError("forward and backward layer scans disagree");

  PartitionResult result;
  result.shortest_path_length = total;
  result.k = total - n;

  // A cut at position i with exported flavor f continues an optimal path
  // from the previous cut j (entered with flavor `fl`) exactly when
  // i + remaining[f][i] == j + remaining[fl][j] - 1 (one restart arc spent)
  // and the stretch (j, i] reads from entry[fl] to a state exporting f.
  // Index the positions by that score so each scan knows where to stop; the
  // latest workable cut wins, making segments as long as optimality allows.
  std::array<std::vector<Index>, kFlavors> last_at_score;
  for (std::size_t f = 0; f < kFlavors; ++f) {
    last_at_score[f].assign(static_cast<std::size_t>(total) + 1, -1);
    for (Index i = 0; i <= n; ++i) {
      Index r = remaining[f][static_cast<std::size_t>(i)];
      if (r == kUnreached) continue;
      Index score = i + r;
      if (score <= total) last_at_score[f][static_cast<std::size_t>(score)] = i;
    }
  }

  // At the same cut position, prefer handing the neighbor a lendable peg
  // over leaving a borrow pending; Plain and PegAvailable never coincide
  // (their stretches end in a hole and a peg respectively).
  constexpr std::array<Boundary, kFlavors> kPreference = {
      Boundary::PegAvailable, Boundary::Plain, Boundary::BorrowPending};

  std::vector<std::uint64_t> reach(tables.words), step(tables.words);
  Index j = 0;
  Boundary fl = Boundary::Plain;
  while (j < n) {
    Index score = j + remaining[flavor_index(fl)][static_cast<std::size_t>(j)] - 1;
    if (score < 0 || score > total)
      throw InternalError("no reachable cut continues the optimal path");
    Index limit = -1;
    for (std::size_t f = 0; f < kFlavors; ++f)
      limit = std::max(limit, last_at_score[f][static_cast<std::size_t>(score)]);
    if (limit <= j) throw InternalError("no reachable cut continues the optimal path");

    std::fill(reach.begin(), reach.end(), 0);
    State from = tables.entry[flavor_index(fl)];
    reach[static_cast<std::size_t>(from) / 64] |= 1ull << (static_cast<std::size_t>(from) % 64);
    Index chosen = -1;
    Boundary chosen_flavor = Boundary::Plain;
    for (Index i = j + 1; i <= limit; ++i) {
      int symbol = config.peg(i - 1) ? 1 : 0;
      std::fill(step.begin(), step.end(), 0);
      for (std::size_t w = 0; w < tables.words; ++w) {
        std::uint64_t bits = reach[w];
        while (bits) {
          std::size_t q = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          const auto& mask = tables.target_mask[symbol][q];
          for (std::size_t v = 0; v < tables.words; ++v) step[v] |= mask[v];
        }
      }
      reach.swap(step);
      if (mask_empty(reach)) break;
      for (Boundary f : kPreference) {
        Index r = remaining[flavor_index(f)][static_cast<std::size_t>(i)];
        if (r != kUnreached && i + r == score &&
            mask_intersects(reach, tables.export_mask[flavor_index(f)])) {
          chosen = i;
          chosen_flavor = f;
          break;
        }
      }
    }
    if (chosen < 0) throw InternalError("no reachable cut continues the optimal path");

    SegmentKind kind = SegmentKind::SelfContained;
    if (chosen_flavor == Boundary::BorrowPending) {
      kind = SegmentKind::BorrowsRight;
    } else if (chosen - j == 2 && config.peg(j) && config.peg(j + 1)) {
      // A bare pair is never a stretch on its own, so a two-peg segment with
      // no hole is the left-hopping pair (only reachable after PegAvailable).
      kind = SegmentKind::BorrowsLeft;
    }
    result.segments.push_back({j, chosen, kind});
    j = chosen;
    fl = chosen_flavor;
  }

  if (static_cast<Index>(result.segments.size()) != result.k)
    throw InternalError("segment count disagrees with the computed minimum");
  return result;
}

PartitionResult min_peg_partition(const Configuration& config) {
  return min_peg_partition(config, block_automaton());
}

SolveResult solve_min(const Configuration& config) {
  SolveResult result;
  result.combined.initial = config;
  result.combined.final_pegs = 0;
  if (config.peg_count() == 0) return result;

  PartitionResult partition = min_peg_partition(config);
  result.k = partition.k;
  result.combined.final_pegs = partition.k;

  const std::string cells = config.to_string();
  for (const auto& stretch : partition.segments) {
    auto [start, end, kind] = stretch;
    Configuration sub = Configuration::parse(
        cells.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(end - start)));
    Plan local;
    local.initial = sub;
    switch (kind) {
      case SegmentKind::SelfContained:
        try {
          local = solve_single(sub);
        } catch (const UnsolvableError&) {
          throw InternalError("partition produced a stretch the solver rejects: " + sub.to_string());
        }
        break;
      case SegmentKind::BorrowsLeft:
        // Jump the right peg over the left one onto the neighbor's vacated
        // edge cell, one step left of the range.
        local.moves.push_back({1, Direction::Left});
        break;
      case SegmentKind::BorrowsRight:
        local.moves.push_back({0, Direction::Right});
        break;
    }
    result.segments.push_back({start, end, kind, std::move(local)});
  }

  // Lift to board coordinates in dependency order: every borrowed landing
  // cell is inside a neighbor that vacates it first.  Self-contained plans
  // never leave their own range, left-borrowers land in an already-played
  // left neighbor, and right-borrowers land in an already-played right
  // neighbor (chains of right-borrowers resolve right to left).
  auto lift = [&](const Segment& seg) {
    for (const Move& m : seg.plan.moves)
      result.combined.moves.push_back({m.from + seg.start, m.dir});
  };
  for (const Segment& seg : result.segments)
    if (seg.kind == SegmentKind::SelfContained) lift(seg);
  for (const Segment& seg : result.segments)
    if (seg.kind == SegmentKind::BorrowsLeft) lift(seg);
  for (auto it = result.segments.rbegin(); it != result.segments.rend(); ++it)
    if (it->kind == SegmentKind::BorrowsRight) lift(*it);
  return result;
}

std::string to_json_string(const SolveResult& result) {
  nlohmann::json j;
  j["k"] = result.k;
  nlohmann::json segments = nlohmann::json::array();
  for (const Segment& seg : result.segments) {
    std::string kind = to_string(seg.kind);
    std::replace(kind.begin(), kind.end(), '-', '_');
    segments.push_back({{"start", seg.start},
                        {"end", seg.end},
                        {"kind", std::move(kind)},
                        {"plan", detail::plan_to_json(seg.plan)}});
  }
  j["segments"] = std::move(segments);
  j["combined"] = detail::plan_to_json(result.combined);
  return j.dump();
}

std::string to_text(const SolveResult& result) {
  std::ostringstream os;
  os << "k=" << result.k << "\n";
  for (const Segment& seg : result.segments) {
    os << "segment [" << seg.start << "," << seg.end << ") " << seg.plan.initial.to_string();
    if (seg.kind != SegmentKind::SelfContained) os << " (" << to_string(seg.kind) << ")";
    os << ": " << to_text(seg.plan) << "\n";
  }
  os << "combined: " << to_text(result.combined) << "\n";
  return os.str();
}

} // namespace pegsol
