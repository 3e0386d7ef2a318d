#include "pegsol/automaton.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <deque>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace pegsol {

// ---------------------------------------------------------------------------
// Regex builders
// ---------------------------------------------------------------------------

namespace regex {

RegexAst lit(char symbol) {
  if (symbol != '0' && symbol != '1') throw DomainError("regex literals are '0' or '1'");
  RegexAst node;
  node.kind = RegexAst::Kind::Literal;
  node.symbol = symbol;
  return node;
}

RegexAst word(std::string_view symbols) {
  if (symbols.size() == 1) return lit(symbols[0]);
  RegexAst node;
  node.kind = RegexAst::Kind::Concat;
  for (char ch : symbols) node.children.push_back(lit(ch));
  return node;
}

RegexAst cat(std::vector<RegexAst> children) {
  RegexAst node;
  node.kind = RegexAst::Kind::Concat;
  node.children = std::move(children);
  return node;
}

RegexAst alt(std::vector<RegexAst> children) {
  RegexAst node;
  node.kind = RegexAst::Kind::Union;
  node.children = std::move(children);
  return node;
}

RegexAst star(RegexAst inner) {
  RegexAst node;
  node.kind = RegexAst::Kind::Star;
  node.children.push_back(std::move(inner));
  return node;
}

RegexAst plus(RegexAst inner) {
  RegexAst node;
  node.kind = RegexAst::Kind::Plus;
  node.children.push_back(std::move(inner));
  return node;
}

} // namespace regex

namespace {

void print_ast(const RegexAst& node, std::ostream& os) {
  switch (node.kind) {
    case RegexAst::Kind::Literal:
      os << node.symbol;
      break;
    case RegexAst::Kind::Concat:
      for (const RegexAst& child : node.children) {
        bool parens = child.kind == RegexAst::Kind::Union;
        if (parens) os << '(';
        print_ast(child, os);
        if (parens) os << ')';
      }
      break;
    case RegexAst::Kind::Union:
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) os << " + ";
        print_ast(node.children[i], os);
      }
      break;
    case RegexAst::Kind::Star:
    case RegexAst::Kind::Plus: {
      const RegexAst& child = node.children.front();
      bool parens = child.kind != RegexAst::Kind::Literal;
      if (parens) os << '(';
      print_ast(child, os);
      if (parens) os << ')';
      os << (node.kind == RegexAst::Kind::Star ? '*' : '+');
      break;
    }
  }
}

} // namespace

std::string to_string(const RegexAst& ast) {
  std::ostringstream os;
  print_ast(ast, os);
  return os.str();
}

// The solvable cores, before padding with outside holes.  Six alternatives:
// the lone peg, the two-peg boards with their one required hole, the family
// carrying a hole pair (with the pair's four possible resting places spelled
// out), and the two families that end in a spent pair on either side.  The
// last three alternatives (three or more pegs) are split out because they are
// also the blocks whose reductions never leave their own trimmed span.
RegexAst family_core_ast() {
  using namespace regex;
  return alt({
      cat({word("11"), star(word("01")),
           alt({word("00"),
                cat({word("00"), plus(word("11"))}),
                cat({plus(word("11")), word("00")}),
                cat({star(word("11")), word("1011")}),
                cat({word("1101"), star(word("11"))})}),
           star(word("10")), word("11")}),
      cat({word("11"), star(word("01")), star(word("11")), word("01")}),
      cat({word("10"), star(word("11")), star(word("10")), word("11")}),
  });
}

RegexAst language_core_ast() {
  using namespace regex;
  return alt({word("1"), word("011"), word("110"), family_core_ast()});
}

RegexAst solvable_language_ast() {
  using namespace regex;
  return cat({star(lit('0')), language_core_ast(), star(lit('0'))});
}

// ---------------------------------------------------------------------------
// Thompson construction (epsilon-NFA, internal only)
// ---------------------------------------------------------------------------

namespace {

struct EpsNfa {
  struct StateData {
    std::array<std::vector<State>, 2> symbol_targets;
    std::vector<State> eps_targets;
  };
  std::vector<StateData> states;
  State start = 0;
  State accept = 0;

  State add_state() {
    states.push_back({});
    return static_cast<State>(states.size() - 1);
  }
  void add_symbol_edge(State from, int symbol, State to) {
    states[static_cast<std::size_t>(from)].symbol_targets[static_cast<std::size_t>(symbol)]
        .push_back(to);
  }
  void add_eps_edge(State from, State to) {
    states[static_cast<std::size_t>(from)].eps_targets.push_back(to);
  }
};

struct Fragment {
  State start;
  State accept;
};

Fragment build_fragment(EpsNfa& nfa, const RegexAst& node) {
  switch (node.kind) {
    case RegexAst::Kind::Literal: {
      State s = nfa.add_state();
      State t = nfa.add_state();
      nfa.add_symbol_edge(s, node.symbol - '0', t);
      return {s, t};
    }
    case RegexAst::Kind::Concat: {
      if (node.children.empty()) { // empty concat accepts epsilon
        State s = nfa.add_state();
        return {s, s};
      }
      Fragment first = build_fragment(nfa, node.children.front());
      State tail = first.accept;
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        Fragment next = build_fragment(nfa, node.children[i]);
        nfa.add_eps_edge(tail, next.start);
        tail = next.accept;
      }
      return {first.start, tail};
    }
    case RegexAst::Kind::Union: {
      State s = nfa.add_state();
      State t = nfa.add_state();
      for (const RegexAst& child : node.children) {
        Fragment f = build_fragment(nfa, child);
        nfa.add_eps_edge(s, f.start);
        nfa.add_eps_edge(f.accept, t);
      }
      return {s, t};
    }
    case RegexAst::Kind::Star: {
      Fragment inner = build_fragment(nfa, node.children.front());
      State s = nfa.add_state();
      State t = nfa.add_state();
      nfa.add_eps_edge(s, inner.start);
      nfa.add_eps_edge(s, t); // zero repetitions
      nfa.add_eps_edge(inner.accept, inner.start);
      nfa.add_eps_edge(inner.accept, t);
      return {s, t};
    }
    case RegexAst::Kind::Plus: {
      // Lowered here, not in the AST: same wiring as star minus the skip edge.
      Fragment inner = build_fragment(nfa, node.children.front());
      State s = nfa.add_state();
      State t = nfa.add_state();
      nfa.add_eps_edge(s, inner.start);
      nfa.add_eps_edge(inner.accept, inner.start);
      nfa.add_eps_edge(inner.accept, t);
      return {s, t};
    }
  }
  throw InternalError("unreachable regex node kind");
}

std::vector<State> eps_closure(const EpsNfa& nfa, State q) {
  std::vector<std::uint8_t> seen(nfa.states.size(), 0);
  std::vector<State> stack{q}, out;
  seen[static_cast<std::size_t>(q)] = 1;
  while (!stack.empty()) {
    State p = stack.back();
    stack.pop_back();
    out.push_back(p);
    for (State r : nfa.states[static_cast<std::size_t>(p)].eps_targets) {
      if (!seen[static_cast<std::size_t>(r)]) {
        seen[static_cast<std::size_t>(r)] = 1;
        stack.push_back(r);
      }
    }
  }
  return out;
}

void sort_unique(std::vector<State>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Epsilon elimination, close-before-symbol convention: the new transition
// set of q on symbol c is everything reachable from q's closure by one
// c-edge, and q accepts when its closure touches the old accept state.
// Unreachable states are dropped and the rest renumbered in BFS order.
Nfa eliminate_epsilons(const EpsNfa& eps) {
  std::size_t n = eps.states.size();
  std::vector<std::array<std::vector<State>, 2>> delta(n);
  std::vector<std::uint8_t> accepting(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    for (State p : eps_closure(eps, static_cast<State>(q))) {
      const auto& data = eps.states[static_cast<std::size_t>(p)];
      for (int symbol = 0; symbol < 2; ++symbol) {
        auto& out = delta[q][static_cast<std::size_t>(symbol)];
        out.insert(out.end(), data.symbol_targets[static_cast<std::size_t>(symbol)].begin(),
                   data.symbol_targets[static_cast<std::size_t>(symbol)].end());
      }
      if (p == eps.accept) accepting[q] = 1;
    }
    sort_unique(delta[q][0]);
    sort_unique(delta[q][1]);
  }

  std::vector<State> order;
  std::vector<State> renumber(n, -1);
  std::deque<State> queue{eps.start};
  renumber[static_cast<std::size_t>(eps.start)] = 0;
  order.push_back(eps.start);
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (int symbol = 0; symbol < 2; ++symbol) {
      for (State t : delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(symbol)]) {
        if (renumber[static_cast<std::size_t>(t)] < 0) {
          renumber[static_cast<std::size_t>(t)] = static_cast<State>(order.size());
          order.push_back(t);
          queue.push_back(t);
        }
      }
    }
  }

  std::vector<std::array<std::vector<State>, 2>> out_delta(order.size());
  std::vector<std::uint8_t> out_accepting(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    State old = order[i];
    out_accepting[i] = accepting[static_cast<std::size_t>(old)];
    for (int symbol = 0; symbol < 2; ++symbol) {
      for (State t : delta[static_cast<std::size_t>(old)][static_cast<std::size_t>(symbol)])
        out_delta[i][static_cast<std::size_t>(symbol)].push_back(
            renumber[static_cast<std::size_t>(t)]);
      sort_unique(out_delta[i][static_cast<std::size_t>(symbol)]);
    }
  }
  return Nfa(0, std::move(out_accepting), std::move(out_delta));
}

} // namespace

// ---------------------------------------------------------------------------
// Nfa
// ---------------------------------------------------------------------------

Nfa::Nfa(State start, std::vector<std::uint8_t> accepting,
         std::vector<std::array<std::vector<State>, 2>> transitions)
    : start_(start), accepting_(std::move(accepting)), transitions_(std::move(transitions)) {
  if (accepting_.size() != transitions_.size())
    throw InternalError("automaton state tables disagree in size");
  if (start_ < 0 || start_ >= state_count()) throw InternalError("automaton start state out of range");
}

std::size_t Nfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : transitions_) n += row[0].size() + row[1].size();
  return n;
}

namespace {

int symbol_of(char ch) {
  if (ch == '0') return 0;
  if (ch == '1') return 1;
  throw ParseError(std::string("bad word character '") + ch + "'");
}

} // namespace

bool Nfa::accepts(std::string_view word) const {
  std::vector<Cell> cells;
  cells.reserve(word.size());
  for (char ch : word) cells.push_back(symbol_of(ch) ? Cell::Peg : Cell::Hole);
  return accepts_cells(cells);
}

bool Nfa::accepts_cells(std::span<const Cell> cells) const {
  std::size_t words = (static_cast<std::size_t>(state_count()) + 63) / 64;
  std::vector<std::uint64_t> frontier(words, 0), next(words, 0);
  frontier[static_cast<std::size_t>(start_) / 64] |= 1ull << (static_cast<std::size_t>(start_) % 64);
  for (Cell cell : cells) {
    int symbol = cell == Cell::Peg ? 1 : 0;
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        std::size_t q = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        for (State t : transitions_[q][static_cast<std::size_t>(symbol)]) {
          next[static_cast<std::size_t>(t) / 64] |= 1ull << (static_cast<std::size_t>(t) % 64);
          any = true;
        }
      }
    }
    if (!any) return false;
    std::swap(frontier, next);
  }
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = frontier[w];
    while (bits) {
      std::size_t q = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      if (accepting_[q]) return true;
    }
  }
  return false;
}

Nfa Nfa::reversed() const {
  std::size_t n = static_cast<std::size_t>(state_count());
  std::vector<std::array<std::vector<State>, 2>> delta(n + 1);
  // Arrow reversal: original a --c--> b becomes b --c--> a.
  for (std::size_t a = 0; a < n; ++a) {
    for (int symbol = 0; symbol < 2; ++symbol) {
      for (State b : transitions_[a][static_cast<std::size_t>(symbol)])
        delta[static_cast<std::size_t>(b)][static_cast<std::size_t>(symbol)].push_back(
            static_cast<State>(a));
    }
  }
  // Fresh start state standing in for the set of old accepting states.
  State fresh = static_cast<State>(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (!accepting_[t]) continue;
    for (int symbol = 0; symbol < 2; ++symbol) {
      auto& out = delta[static_cast<std::size_t>(fresh)][static_cast<std::size_t>(symbol)];
      out.insert(out.end(), delta[t][static_cast<std::size_t>(symbol)].begin(),
                 delta[t][static_cast<std::size_t>(symbol)].end());
    }
  }
  for (auto& row : delta) {
    sort_unique(row[0]);
    sort_unique(row[1]);
  }
  std::vector<std::uint8_t> accepting(n + 1, 0);
  accepting[static_cast<std::size_t>(start_)] = 1;
  // The empty word is in the reversed language iff it was in the original.
  accepting[static_cast<std::size_t>(fresh)] = accepting_[static_cast<std::size_t>(start_)];
  return Nfa(fresh, std::move(accepting), std::move(delta));
}

namespace {

std::string transition_table_impl(State start, std::size_t count,
                                  const std::vector<std::uint8_t>& accepting,
                                  auto&& for_each_target) {
  std::ostringstream os;
  os << "# states: " << count << "\n";
  os << "# start: " << start << "\n";
  os << "# accepting:";
  for (std::size_t q = 0; q < count; ++q)
    if (accepting[q]) os << ' ' << q;
  os << "\n";
  for (std::size_t q = 0; q < count; ++q)
    for (int symbol = 0; symbol < 2; ++symbol)
      for_each_target(static_cast<State>(q), symbol,
                      [&](State t) { os << q << ' ' << symbol << ' ' << t << "\n"; });
  return os.str();
}

} // namespace

std::string Nfa::transition_table() const {
  return transition_table_impl(start_, static_cast<std::size_t>(state_count()), accepting_,
                               [&](State q, int symbol, auto&& emit) {
                                 for (State t : targets(q, symbol)) emit(t);
                               });
}

// ---------------------------------------------------------------------------
// Dfa
// ---------------------------------------------------------------------------

Dfa::Dfa(State start, std::vector<std::uint8_t> accepting,
         std::vector<std::array<State, 2>> transitions)
    : start_(start), accepting_(std::move(accepting)), transitions_(std::move(transitions)) {
  if (accepting_.size() != transitions_.size())
    throw InternalError("automaton state tables disagree in size");
  if (start_ < 0 || start_ >= state_count()) throw InternalError("automaton start state out of range");
}

bool Dfa::accepts(std::string_view word) const {
  State q = start_;
  for (char ch : word) q = next(q, symbol_of(ch));
  return accepting(q);
}

bool Dfa::accepts_cells(std::span<const Cell> cells) const {
  State q = start_;
  for (Cell cell : cells) q = next(q, cell == Cell::Peg ? 1 : 0);
  return accepting(q);
}

std::string Dfa::transition_table() const {
  return transition_table_impl(start_, static_cast<std::size_t>(state_count()), accepting_,
                               [&](State q, int symbol, auto&& emit) { emit(next(q, symbol)); });
}

// ---------------------------------------------------------------------------
// Construction pipeline
// ---------------------------------------------------------------------------

Nfa build_nfa(const RegexAst& ast) {
  EpsNfa eps;
  Fragment f = build_fragment(eps, ast);
  eps.start = f.start;
  eps.accept = f.accept;
  return eliminate_epsilons(eps);
}

Nfa build_language_nfa() { return build_nfa(solvable_language_ast()); }

namespace {

struct SubsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

Dfa determinize(const Nfa& nfa) {
  std::size_t words = (static_cast<std::size_t>(nfa.state_count()) + 63) / 64;
  auto set_bit = [](std::vector<std::uint64_t>& v, State q) {
    v[static_cast<std::size_t>(q) / 64] |= 1ull << (static_cast<std::size_t>(q) % 64);
  };

  std::unordered_map<std::vector<std::uint64_t>, State, SubsetHash> ids;
  std::vector<std::vector<std::uint64_t>> subsets;
  std::vector<std::array<State, 2>> delta;
  std::vector<std::uint8_t> accepting;

  auto intern = [&](std::vector<std::uint64_t> subset) {
    auto [it, inserted] = ids.try_emplace(std::move(subset), static_cast<State>(subsets.size()));
    if (inserted) {
      subsets.push_back(it->first);
      delta.push_back({-1, -1});
      bool acc = false;
      for (std::size_t w = 0; w < words && !acc; ++w) {
        std::uint64_t bits = it->first[w];
        while (bits) {
          std::size_t q = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          if (nfa.accepting(static_cast<State>(q))) {
            acc = true;
            break;
          }
        }
      }
      accepting.push_back(acc ? 1 : 0);
    }
    return it->second;
  };

  std::vector<std::uint64_t> start_subset(words, 0);
  set_bit(start_subset, nfa.start());
  State start_id = intern(std::move(start_subset));

  for (State current = start_id; static_cast<std::size_t>(current) < subsets.size(); ++current) {
    std::vector<std::uint64_t> subset = subsets[static_cast<std::size_t>(current)];
    for (int symbol = 0; symbol < 2; ++symbol) {
      std::vector<std::uint64_t> image(words, 0);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = subset[w];
        while (bits) {
          std::size_t q = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          for (State t : nfa.targets(static_cast<State>(q), symbol)) set_bit(image, t);
        }
      }
      State target = intern(std::move(image)); // the empty subset becomes the sink
      delta[static_cast<std::size_t>(current)][static_cast<std::size_t>(symbol)] = target;
    }
  }
  return Dfa(start_id, std::move(accepting), std::move(delta));
}

namespace {

// Breadth-first renumbering from the start state ('0' edge explored first):
// two minimal automata for the same language come out structurally identical.
Dfa canonical_renumber(const Dfa& dfa) {
  std::vector<State> renumber(static_cast<std::size_t>(dfa.state_count()), -1);
  std::vector<State> order;
  std::deque<State> queue{dfa.start()};
  renumber[static_cast<std::size_t>(dfa.start())] = 0;
  order.push_back(dfa.start());
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (int symbol = 0; symbol < 2; ++symbol) {
      State t = dfa.next(q, symbol);
      if (renumber[static_cast<std::size_t>(t)] < 0) {
        renumber[static_cast<std::size_t>(t)] = static_cast<State>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::vector<std::array<State, 2>> delta(order.size());
  std::vector<std::uint8_t> accepting(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    State old = order[i];
    accepting[i] = dfa.accepting(old) ? 1 : 0;
    for (int symbol = 0; symbol < 2; ++symbol)
      delta[i][static_cast<std::size_t>(symbol)] =
          renumber[static_cast<std::size_t>(dfa.next(old, symbol))];
  }
  return Dfa(0, std::move(accepting), std::move(delta));
}

} // namespace

Dfa minimize(const Dfa& dfa) {
  std::size_t n = static_cast<std::size_t>(dfa.state_count());
  // Iterated partition refinement on the complete automaton.
  std::vector<State> block(n);
  for (std::size_t q = 0; q < n; ++q) block[q] = dfa.accepting(static_cast<State>(q)) ? 1 : 0;
  std::size_t block_count = 2;

  for (;;) {
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<State> next_block(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::uint64_t sig = static_cast<std::uint64_t>(block[q]);
      sig = sig * 1000003u + static_cast<std::uint64_t>(
                                 block[static_cast<std::size_t>(dfa.next(static_cast<State>(q), 0))]);
      sig = sig * 1000003u + static_cast<std::uint64_t>(
                                 block[static_cast<std::size_t>(dfa.next(static_cast<State>(q), 1))]);
      auto [it, inserted] = ids.try_emplace(sig, static_cast<State>(ids.size()));
      next_block[q] = it->second;
    }
    bool stable = ids.size() == block_count;
    block_count = ids.size();
    block.swap(next_block);
    if (stable) break;
  }

  std::vector<std::array<State, 2>> delta(block_count, {-1, -1});
  std::vector<std::uint8_t> accepting(block_count, 0);
  for (std::size_t q = 0; q < n; ++q) {
    State b = block[q];
    accepting[static_cast<std::size_t>(b)] = dfa.accepting(static_cast<State>(q)) ? 1 : 0;
    for (int symbol = 0; symbol < 2; ++symbol)
      delta[static_cast<std::size_t>(b)][static_cast<std::size_t>(symbol)] =
          block[static_cast<std::size_t>(dfa.next(static_cast<State>(q), symbol))];
  }
  Dfa quotient(block[static_cast<std::size_t>(dfa.start())], std::move(accepting), std::move(delta));
  return canonical_renumber(quotient);
}

Dfa determinize_minimize(const Nfa& nfa) { return minimize(determinize(nfa)); }

// ---------------------------------------------------------------------------
// Product walks
// ---------------------------------------------------------------------------

namespace {

// Breadth-first search over the product automaton for the first pair
// satisfying `goal`; returns the word leading there.
std::optional<std::string> product_search(const Dfa& a, const Dfa& b, auto&& goal) {
  struct Node {
    State qa, qb;
    std::int64_t parent;
    char symbol;
  };
  auto key = [&](State qa, State qb) {
    return static_cast<std::uint64_t>(qa) * static_cast<std::uint64_t>(b.state_count()) +
           static_cast<std::uint64_t>(qb);
  };
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<Node> nodes{{a.start(), b.start(), -1, ' '}};
  seen.emplace(key(a.start(), b.start()), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Node node = nodes[i];
    if (goal(node.qa, node.qb)) {
      std::string word;
      for (std::int64_t j = static_cast<std::int64_t>(i); nodes[static_cast<std::size_t>(j)].parent >= 0;
           j = nodes[static_cast<std::size_t>(j)].parent)
        word.push_back(nodes[static_cast<std::size_t>(j)].symbol);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (int symbol = 0; symbol < 2; ++symbol) {
      State qa = a.next(node.qa, symbol);
      State qb = b.next(node.qb, symbol);
      if (seen.emplace(key(qa, qb), nodes.size()).second)
        nodes.push_back({qa, qb, static_cast<std::int64_t>(i), static_cast<char>('0' + symbol)});
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<std::string> dfa_difference(const Dfa& a, const Dfa& b) {
  return product_search(a, b, [&](State qa, State qb) { return a.accepting(qa) != b.accepting(qb); });
}

std::optional<std::string> dfa_intersection_witness(const Dfa& a, const Dfa& b) {
  return product_search(a, b, [&](State qa, State qb) { return a.accepting(qa) && b.accepting(qb); });
}

// ---------------------------------------------------------------------------
// Shared instances
// ---------------------------------------------------------------------------

const Nfa& solvable_nfa() {
  static const Nfa instance = build_language_nfa();
  return instance;
}

const Dfa& solvable_dfa() {
  static const Dfa instance = determinize_minimize(solvable_nfa());
  return instance;
}

// ---------------------------------------------------------------------------
// Counting and enumeration
// ---------------------------------------------------------------------------

namespace {

// States from which some accepting state is reachable.  Walking only live
// states keeps the counting table equal to the number of genuine prefixes.
std::vector<std::uint8_t> live_states(const Dfa& dfa) {
  std::size_t n = static_cast<std::size_t>(dfa.state_count());
  std::vector<std::vector<State>> reverse_edges(n);
  for (std::size_t q = 0; q < n; ++q)
    for (int symbol = 0; symbol < 2; ++symbol)
      reverse_edges[static_cast<std::size_t>(dfa.next(static_cast<State>(q), symbol))].push_back(
          static_cast<State>(q));
  std::vector<std::uint8_t> live(n, 0);
  std::deque<State> queue;
  for (std::size_t q = 0; q < n; ++q) {
    if (dfa.accepting(static_cast<State>(q))) {
      live[q] = 1;
      queue.push_back(static_cast<State>(q));
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : reverse_edges[static_cast<std::size_t>(q)]) {
      if (!live[static_cast<std::size_t>(p)]) {
        live[static_cast<std::size_t>(p)] = 1;
        queue.push_back(p);
      }
    }
  }
  return live;
}

// Longest word that needs considering when looking for n pegs: every
// solvable class with n pegs fits in 2n + 2 cells (tests pin this bound
// against exhaustive search).
Index length_cap(int n) { return 2 * static_cast<Index>(n) + 2; }

// feasible[l][q][o] - from state q, can some nonempty suffix of length <= l
// with exactly o pegs, ending in a peg, reach acceptance?
std::vector<std::vector<std::vector<std::uint8_t>>> suffix_feasibility(const Dfa& dfa, int n,
                                                                       Index cap) {
  std::size_t states = static_cast<std::size_t>(dfa.state_count());
  std::vector feasible(static_cast<std::size_t>(cap) + 1,
                       std::vector(states, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1, 0)));
  for (std::size_t l = 1; l <= static_cast<std::size_t>(cap); ++l) {
    for (std::size_t q = 0; q < states; ++q) {
      State on_peg = dfa.next(static_cast<State>(q), 1);
      State on_hole = dfa.next(static_cast<State>(q), 0);
      for (std::size_t o = 0; o <= static_cast<std::size_t>(n); ++o) {
        bool ok = false;
        if (o >= 1 && o == 1 && dfa.accepting(on_peg)) ok = true; // the suffix "1"
        if (!ok && o >= 1 && feasible[l - 1][static_cast<std::size_t>(on_peg)][o - 1]) ok = true;
        if (!ok && feasible[l - 1][static_cast<std::size_t>(on_hole)][o]) ok = true;
        feasible[l][q][o] = ok ? 1 : 0;
      }
    }
  }
  return feasible;
}

void enumerate_dfs(const Dfa& dfa, int n, Index cap,
                   const std::vector<std::vector<std::vector<std::uint8_t>>>& feasible, State q,
                   int ones, std::string& word, std::vector<Configuration>& out) {
  if (ones == n && word.back() == '1' && dfa.accepting(q))
    out.push_back(Configuration::parse(word));
  if (static_cast<Index>(word.size()) == cap) return;
  Index remaining = cap - static_cast<Index>(word.size()) - 1;
  for (int symbol = 0; symbol < 2; ++symbol) {
    State next = dfa.next(q, symbol);
    int next_ones = ones + symbol;
    if (next_ones > n) continue;
    int still_needed = n - next_ones;
    bool can_emit_at_child = symbol == 1 && next_ones == n && dfa.accepting(next);
    bool can_complete_later =
        feasible[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(next)]
                [static_cast<std::size_t>(still_needed)] != 0;
    if (!can_emit_at_child && !can_complete_later) continue;
    word.push_back(static_cast<char>('0' + symbol));
    enumerate_dfs(dfa, n, cap, feasible, next, next_ones, word, out);
    word.pop_back();
  }
}

} // namespace

std::vector<Configuration> enumerate_solvable(int n) {
  if (n < 1) throw DomainError("peg count must be at least 1");
  if (n == 2) return {Configuration::parse("11")}; // the 011/110 class, trimmed
  const Dfa& dfa = solvable_dfa();
  Index cap = length_cap(n);
  auto feasible = suffix_feasibility(dfa, n, cap);
  std::vector<Configuration> out;
  // Trimmed words start with a peg; the DFS keeps them ending with one too.
  std::string word = "1";
  enumerate_dfs(dfa, n, cap, feasible, dfa.next(dfa.start(), 1), 1, word, out);
  return out;
}

std::uint64_t count_solvable(int n) {
  if (n < 1) throw DomainError("peg count must be at least 1");
  if (n == 1) return 1;
  if (n == 2) return 1; // 011 and 110 are one class
  const Dfa& dfa = solvable_dfa();
  std::vector<std::uint8_t> live = live_states(dfa);
  std::size_t states = static_cast<std::size_t>(dfa.state_count());
  Index cap = length_cap(n);

  // ways[q][o]: distinct peg-leading prefixes of the current length with o
  // pegs sitting in live state q.
  std::vector ways(states, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::uint64_t total = 0;
  State first = dfa.next(dfa.start(), 1);
  if (live[static_cast<std::size_t>(first)])
    ways[static_cast<std::size_t>(first)][1] = 1;

  for (Index len = 2; len <= cap; ++len) {
    std::vector next(states, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (std::size_t q = 0; q < states; ++q) {
      for (std::size_t o = 1; o <= static_cast<std::size_t>(n); ++o) {
        std::uint64_t w = ways[q][o];
        if (!w) continue;
        State on_hole = dfa.next(static_cast<State>(q), 0);
        if (live[static_cast<std::size_t>(on_hole)])
          next[static_cast<std::size_t>(on_hole)][o] += w;
        if (o < static_cast<std::size_t>(n)) {
          State on_peg = dfa.next(static_cast<State>(q), 1);
          if (live[static_cast<std::size_t>(on_peg)]) {
            next[static_cast<std::size_t>(on_peg)][o + 1] += w;
            if (o + 1 == static_cast<std::size_t>(n) && dfa.accepting(on_peg))
              total += w; // a whole word ends here, on a peg
          }
        }
      }
    }
    ways.swap(next);
  }
  return total;
}

} // namespace pegsol
