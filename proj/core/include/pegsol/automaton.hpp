#ifndef PEGSOL_AUTOMATON_HPP
#define PEGSOL_AUTOMATON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pegsol/board.hpp"

namespace pegsol {

// ---------------------------------------------------------------------------
// Regular expressions over the two-letter alphabet {'0','1'}.
// Union, concatenation, star and plus are all first-class nodes; plus is
// lowered only when the automaton is built.  No parser: expressions are
// assembled with the builder helpers below.
// ---------------------------------------------------------------------------

struct RegexAst {
  enum class Kind { Literal, Concat, Union, Star, Plus };
  Kind kind = Kind::Literal;
  char symbol = '0';             // Literal only
  std::vector<RegexAst> children; // Concat/Union: n-ary; Star/Plus: exactly one
};

namespace regex {
RegexAst lit(char symbol);
RegexAst word(std::string_view symbols);       // concatenation of literals
RegexAst cat(std::vector<RegexAst> children);  // r1 r2 ... rk
RegexAst alt(std::vector<RegexAst> children);  // r1 + r2 + ... + rk
RegexAst star(RegexAst inner);                 // r*
RegexAst plus(RegexAst inner);                 // r+
} // namespace regex

// Display form with '+', '*', juxtaposition and parentheses.
std::string to_string(const RegexAst& ast);

// The language of trimmed-or-padded boards reducible to a single peg.
// solvable_language_ast() wraps language_core_ast() in leading/trailing 0*.
// family_core_ast() is the subset of cores with three or more pegs: exactly
// the patterns the constructive solver classifies into families, and the
// blocks that never need a cell outside their own trimmed span.
RegexAst language_core_ast();
RegexAst family_core_ast();
RegexAst solvable_language_ast();

// ---------------------------------------------------------------------------
// Automata.  Nfa is epsilon-free by construction: the type cannot represent
// an epsilon transition.  States are 0-based; transitions are kept per state
// and symbol.
// ---------------------------------------------------------------------------

using State = std::int32_t;

class Nfa {
public:
  Nfa(State start, std::vector<std::uint8_t> accepting,
      std::vector<std::array<std::vector<State>, 2>> transitions);

  State start() const { return start_; }
  State state_count() const { return static_cast<State>(transitions_.size()); }
  bool accepting(State q) const { return accepting_[static_cast<std::size_t>(q)] != 0; }
  const std::vector<State>& targets(State q, int symbol) const {
    return transitions_[static_cast<std::size_t>(q)][static_cast<std::size_t>(symbol)];
  }
  std::size_t transition_count() const;

  bool accepts(std::string_view word) const;
  bool accepts(const Configuration& c) const { return accepts_cells(c.cells()); }
  bool accepts_cells(std::span<const Cell> cells) const;

  // Arrow-reversed automaton accepting the mirror language (single fresh
  // start state standing in for the old accepting set).
  Nfa reversed() const;

  // One transition per line ("state symbol state"), accepting states and the
  // start state listed in a comment header.
  std::string transition_table() const;

private:
  State start_;
  std::vector<std::uint8_t> accepting_;
  std::vector<std::array<std::vector<State>, 2>> transitions_;
};

class Dfa {
public:
  Dfa(State start, std::vector<std::uint8_t> accepting,
      std::vector<std::array<State, 2>> transitions);

  State start() const { return start_; }
  State state_count() const { return static_cast<State>(transitions_.size()); }
  bool accepting(State q) const { return accepting_[static_cast<std::size_t>(q)] != 0; }
  State next(State q, int symbol) const {
    return transitions_[static_cast<std::size_t>(q)][static_cast<std::size_t>(symbol)];
  }

  bool accepts(std::string_view word) const;
  bool accepts(const Configuration& c) const { return accepts_cells(c.cells()); }
  bool accepts_cells(std::span<const Cell> cells) const;

  std::string transition_table() const;

private:
  State start_;
  std::vector<std::uint8_t> accepting_;
  std::vector<std::array<State, 2>> transitions_;
};

// AST -> Thompson epsilon-NFA -> epsilon elimination -> reachable trim.
Nfa build_nfa(const RegexAst& ast);

// The automaton for solvable_language_ast(); pinned examples in the tests
// pin its behavior ("1011" in, "11" and "" out).
Nfa build_language_nfa();

// Subset construction (complete, with a sink for the empty subset).
Dfa determinize(const Nfa& nfa);

// Partition refinement, then canonical breadth-first renumbering (start
// state first, '0' edges explored before '1') so equal languages yield
// structurally identical automata.
Dfa minimize(const Dfa& dfa);

Dfa determinize_minimize(const Nfa& nfa);

// nullopt when the two automata agree; otherwise a shortest witness word
// accepted by exactly one of them.
std::optional<std::string> dfa_difference(const Dfa& a, const Dfa& b);

// A shortest word accepted by both, or nullopt when the intersection is empty.
std::optional<std::string> dfa_intersection_witness(const Dfa& a, const Dfa& b);

// Process-wide immutable instances (built on first use).
const Nfa& solvable_nfa();
const Dfa& solvable_dfa();

inline bool accepts(const Configuration& c) { return solvable_dfa().accepts(c); }

// ---------------------------------------------------------------------------
// Counting and enumeration of solvable configurations by peg count, in
// trimmed form.  The two-peg class ("011"/"110", trimmed "11") counts once.
// ---------------------------------------------------------------------------

// Number of distinct trimmed solvable classes with exactly n pegs
// (DomainError for n < 1).
std::uint64_t count_solvable(int n);

// The classes themselves, lexicographically sorted; n = 2 yields {"11"}.
std::vector<Configuration> enumerate_solvable(int n);

} // namespace pegsol

#endif
