#pragma once

#include <memory>
#include <stdexcept>
#include <variant>

#include "tbt/element.hpp"

namespace tbt {

// Expression over the named generators.  Atom payloads are kept as text and
// resolved against an action at evaluation time.
struct Word;
using WordPtr = std::shared_ptr<const Word>;

struct Word {
  enum class Kind { kX, kTau, kPerm, kId, kIota0, kIota1, kCompose, kDirectSum, kInverse };

  Kind kind;
  std::string color_text;              // kX, kIota1
  std::string gelem_text;              // kTau, kIota0, kIota1
  std::vector<std::vector<int>> cycles;  // kPerm
  int n = 0;                           // kPerm, kId
  WordPtr lhs, rhs;                    // kCompose, kDirectSum; kInverse uses lhs
};

// Syntax error, with the byte offset of the offending token.
struct WordParseError : std::runtime_error {
  WordParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// word := term (('•'|'*') term)*;  term := factor (('⊕'|'+') factor)*;
// factor := atom | '(' word ')' | factor '^-1';
// atoms: x[color], tau[g], p[cycles,n], id[n], iota0[g], iota1[color,g].
WordPtr parse_word(std::string_view text);

// Canonical text; parse_word(print_word(w)) reproduces w.
std::string print_word(const Word& w);

// Structure homomorphism into the groupoid.  Throws std::invalid_argument on
// unresolvable literals or dimension mismatches.
Element evaluate(const Word& w, const ActionPtr& action);

Element iota0(const ActionPtr& action, const GroupElem& g);
// iota1(s, g) = x_s^-1 (id_1 + tau_g) x_s: the twist g localized to the
// s=1 half of the cube.
Element iota1(const ActionPtr& action, const Color& s, const GroupElem& g);

// Product of SV elements and localized twists; composition is left to right
// in function order, atoms[0] applied last.
struct FactorWord {
  Color s;
  std::vector<std::variant<Element, GroupElem>> atoms;
};

// Writes h as v * prod_i a_i iota1(s, g_i) a_i^-1 with untwisted v, a_i.
// Requires rank = corank = 1.
FactorWord factorize(const Element& h, const Color& s);
Element evaluate_factor_word(const ActionPtr& action, const FactorWord& fw);

struct GeneratingGraph {
  std::vector<Color> vertices;
  std::vector<std::pair<Color, Color>> edges;
};

// Representative edges {s1, si} over orbit representatives and {s1, g*s1}
// over generators, self-loops dropped.
GeneratingGraph generating_graph(const ActionPtr& action);

// Germinal twist at the basepoint (all-zeros by default).  Requires
// rank = corank = 1.
GroupElem rho(const Element& h, const PointPrefix& basepoint = PointPrefix());

}  // namespace tbt
