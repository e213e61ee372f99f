#include "tbt/words.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace tbt {
namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";  // U+2022
constexpr std::string_view kOplus = "\xE2\x8A\x95";   // U+2295

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  bool try_consume(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Offset of the first (or last) comma outside any parentheses or braces.
std::size_t top_level_comma(std::string_view s, bool last) {
  std::size_t found = std::string_view::npos;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    else if (ch == ')' || ch == '}' || ch == ']') --depth;
    else if (ch == ',' && depth == 0) {
      found = i;
      if (!last) return found;
    }
  }
  return found;
}

int parse_int_strict(std::string_view s, std::size_t err_pos, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1)
    throw WordParseError(std::string("expected a positive integer for ") + what, err_pos);
  return value;
}

std::vector<std::vector<int>> parse_cycles(std::string_view s, std::size_t err_pos) {
  s = trim(s);
  std::vector<std::vector<int>> cycles;
  if (s.empty() || s == "e") return cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i >= s.size()) break;
    if (s[i] != '(') throw WordParseError("expected '(' in cycle list", err_pos + i);
    std::size_t close = s.find(')', i);
    if (close == std::string_view::npos)
      throw WordParseError("unterminated cycle", err_pos + i);
    std::string_view body = s.substr(i + 1, close - i - 1);
    std::vector<int> cycle;
    std::size_t j = 0;
    while (j < body.size()) {
      while (j < body.size() && (body[j] == ' ' || body[j] == ',')) ++j;
      if (j >= body.size()) break;
      std::size_t k = j;
      while (k < body.size() && body[k] >= '0' && body[k] <= '9') ++k;
      if (k == j) throw WordParseError("expected an integer in cycle", err_pos + i + 1 + j);
      cycle.push_back(parse_int_strict(body.substr(j, k - j), err_pos + i + 1 + j, "cycle entry"));
      j = k;
    }
    if (cycle.empty()) throw WordParseError("empty cycle", err_pos + i);
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return cycles;
}

WordPtr parse_word_expr(Cursor& cur);

WordPtr parse_atom(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  std::size_t i = cur.pos;
  while (i < cur.text.size() &&
         ((cur.text[i] >= 'a' && cur.text[i] <= 'z') || (cur.text[i] >= '0' && cur.text[i] <= '9')))
    ++i;
  std::string name(cur.text.substr(cur.pos, i - cur.pos));
  if (name.empty()) throw WordParseError("expected an atom", start);
  cur.pos = i;
  if (cur.peek() != '[') throw WordParseError("expected '[' after atom name", cur.pos);
  ++cur.pos;
  std::size_t payload_start = cur.pos;
  int depth = 1;
  while (cur.pos < cur.text.size() && depth > 0) {
    char ch = cur.text[cur.pos];
    if (ch == '[') ++depth;
    else if (ch == ']') --depth;
    if (depth > 0) ++cur.pos;
  }
  if (depth != 0) throw WordParseError("unterminated atom payload", payload_start);
  std::string_view payload = cur.text.substr(payload_start, cur.pos - payload_start);
  ++cur.pos;  // past ']'

  auto node = std::make_shared<Word>();
  if (name == "x") {
    node->kind = Word::Kind::kX;
    node->color_text = trim(payload);
    if (node->color_text.empty()) throw WordParseError("x atom needs a color", payload_start);
  } else if (name == "tau" || name == "iota0") {
    node->kind = name == "tau" ? Word::Kind::kTau : Word::Kind::kIota0;
    node->gelem_text = trim(payload);
    if (node->gelem_text.empty())
      throw WordParseError(name + " atom needs a group element", payload_start);
  } else if (name == "id") {
    node->kind = Word::Kind::kId;
    node->n = parse_int_strict(payload, payload_start, "id size");
  } else if (name == "p") {
    node->kind = Word::Kind::kPerm;
    std::size_t comma = top_level_comma(payload, /*last=*/true);
    if (comma == std::string_view::npos)
      throw WordParseError("p atom needs 'cycles,n'", payload_start);
    node->cycles = parse_cycles(payload.substr(0, comma), payload_start);
    node->n = parse_int_strict(payload.substr(comma + 1), payload_start + comma + 1, "p size");
  } else if (name == "iota1") {
    node->kind = Word::Kind::kIota1;
    std::size_t comma = top_level_comma(payload, /*last=*/false);
    if (comma == std::string_view::npos)
      throw WordParseError("iota1 atom needs 'color,g'", payload_start);
    node->color_text = trim(payload.substr(0, comma));
    node->gelem_text = trim(payload.substr(comma + 1));
    if (node->color_text.empty() || node->gelem_text.empty())
      throw WordParseError("iota1 atom needs 'color,g'", payload_start);
  } else {
    throw WordParseError("unknown atom '" + name + "'", start);
  }
  return node;
}

WordPtr parse_factor(Cursor& cur) {
  WordPtr base;
  if (cur.peek() == '(') {
    ++cur.pos;
    base = parse_word_expr(cur);
    if (!cur.try_consume(")")) throw WordParseError("expected ')'", cur.pos);
  } else {
    base = parse_atom(cur);
  }
  while (true) {
    cur.skip_ws();
    if (cur.text.substr(cur.pos, 1) != "^") break;
    std::size_t caret = cur.pos;
    ++cur.pos;
    if (!cur.try_consume("-1")) throw WordParseError("expected '-1' after '^'", caret);
    auto node = std::make_shared<Word>();
    node->kind = Word::Kind::kInverse;
    node->lhs = base;
    base = node;
  }
  return base;
}

WordPtr parse_term(Cursor& cur) {
  WordPtr lhs = parse_factor(cur);
  while (cur.try_consume(kOplus) || cur.try_consume("+")) {
    auto node = std::make_shared<Word>();
    node->kind = Word::Kind::kDirectSum;
    node->lhs = lhs;
    node->rhs = parse_factor(cur);
    lhs = node;
  }
  return lhs;
}

WordPtr parse_word_expr(Cursor& cur) {
  WordPtr lhs = parse_term(cur);
  while (cur.try_consume(kBullet) || cur.try_consume("*")) {
    auto node = std::make_shared<Word>();
    node->kind = Word::Kind::kCompose;
    node->lhs = lhs;
    node->rhs = parse_term(cur);
    lhs = node;
  }
  return lhs;
}

// Precedence: compose 0, direct sum 1, inverse 2, atoms 3.
int level_of(const Word& w) {
  switch (w.kind) {
    case Word::Kind::kCompose: return 0;
    case Word::Kind::kDirectSum: return 1;
    case Word::Kind::kInverse: return 2;
    default: return 3;
  }
}

void print_rec(const Word& w, int min_level, std::string& out) {
  bool wrap = level_of(w) < min_level;
  if (wrap) out += '(';
  switch (w.kind) {
    case Word::Kind::kX:
      out += "x[" + w.color_text + "]";
      break;
    case Word::Kind::kTau:
      out += "tau[" + w.gelem_text + "]";
      break;
    case Word::Kind::kIota0:
      out += "iota0[" + w.gelem_text + "]";
      break;
    case Word::Kind::kIota1:
      out += "iota1[" + w.color_text + "," + w.gelem_text + "]";
      break;
    case Word::Kind::kId:
      out += "id[" + std::to_string(w.n) + "]";
      break;
    case Word::Kind::kPerm: {
      out += "p[";
      if (w.cycles.empty()) out += "e";
      for (const auto& cycle : w.cycles) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          if (i) out += ' ';
          out += std::to_string(cycle[i]);
        }
        out += ')';
      }
      out += "," + std::to_string(w.n) + "]";
      break;
    }
    case Word::Kind::kInverse:
      print_rec(*w.lhs, 3, out);
      out += "^-1";
      break;
    case Word::Kind::kCompose:
      print_rec(*w.lhs, 0, out);
      out += " ";
      out += kBullet;
      out += " ";
      print_rec(*w.rhs, 1, out);
      break;
    case Word::Kind::kDirectSum:
      print_rec(*w.lhs, 1, out);
      out += " ";
      out += kOplus;
      out += " ";
      print_rec(*w.rhs, 2, out);
      break;
  }
  if (wrap) out += ')';
}

Color resolve_color(const ActionPtr& action, const std::string& text) {
  auto c = action->parse_color(text);
  if (!c)
    throw std::invalid_argument("unknown color '" + text + "' for action " + action->name());
  return *c;
}

GroupElem resolve_gelem(const ActionPtr& action, const std::string& text) {
  auto g = action->parse_elem(text);
  if (!g)
    throw std::invalid_argument("unknown group element '" + text + "' for action " +
                                action->name());
  return *g;
}

std::vector<int> cycles_to_sigma(const std::vector<std::vector<int>>& cycles, int n) {
  std::vector<int> sigma(n);
  std::vector<char> moved(n, 0);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n)
        throw std::invalid_argument("p atom: cycle entry " + std::to_string(from) +
                                    " outside 1.." + std::to_string(n));
      if (moved[from - 1])
        throw std::invalid_argument("p atom: index " + std::to_string(from) + " moved twice");
      moved[from - 1] = 1;
      sigma[from - 1] = to;
    }
  }
  return sigma;
}

}  // namespace

WordPtr parse_word(std::string_view text) {
  Cursor cur{text};
  WordPtr w = parse_word_expr(cur);
  if (!cur.at_end()) throw WordParseError("unexpected trailing input", cur.pos);
  return w;
}

std::string print_word(const Word& w) {
  std::string out;
  print_rec(w, 0, out);
  return out;
}

Element evaluate(const Word& w, const ActionPtr& action) {
  switch (w.kind) {
    case Word::Kind::kX:
      return make_splitter(action, resolve_color(action, w.color_text));
    case Word::Kind::kTau:
    case Word::Kind::kIota0:
      return make_twist(action, resolve_gelem(action, w.gelem_text));
    case Word::Kind::kIota1:
      return iota1(action, resolve_color(action, w.color_text),
                   resolve_gelem(action, w.gelem_text));
    case Word::Kind::kId:
      return identity_elem(action, w.n);
    case Word::Kind::kPerm:
      return make_perm(action, cycles_to_sigma(w.cycles, w.n));
    case Word::Kind::kInverse:
      return invert(evaluate(*w.lhs, action));
    case Word::Kind::kCompose:
      return compose(evaluate(*w.lhs, action), evaluate(*w.rhs, action));
    case Word::Kind::kDirectSum:
      return direct_sum(evaluate(*w.lhs, action), evaluate(*w.rhs, action));
  }
  throw std::logic_error("evaluate: unhandled word node");
}

Element iota0(const ActionPtr& action, const GroupElem& g) { return make_twist(action, g); }

Element iota1(const ActionPtr& action, const Color& s, const GroupElem& g) {
  Element xs = make_splitter(action, s);
  Element mid = direct_sum(identity_elem(action, 1), make_twist(action, g));
  return compose(invert(xs), compose(mid, xs));
}

namespace {

// Partition of B_{s,0} into `count` bricks: a ladder along s.
std::vector<Brick> ladder_bricks(const Color& s, int count) {
  std::vector<Brick> out;
  std::string prefix = "0";
  for (int j = 0; j + 1 < count; ++j) {
    out.push_back(Brick(1, {{s, BinaryWord(prefix + "0")}}));
    prefix += "1";
  }
  out.push_back(Brick(1, {{s, BinaryWord(prefix)}}));
  return out;
}

// Untwisted element of SV(1) carrying B_{s,1} onto `target`, with the
// leftover bricks of both sides paired in sorted order.
Element carrier_to(const ActionPtr& action, const Color& s, const Brick& target) {
  std::vector<Brick> ran_rest = complement_bricks(target);
  std::vector<Brick> dom_rest = ladder_bricks(s, int(ran_rest.size()));
  std::sort(ran_rest.begin(), ran_rest.end());
  std::sort(dom_rest.begin(), dom_rest.end());
  std::vector<Piece> pieces;
  pieces.push_back(Piece{Brick(1, {{s, BinaryWord("1")}}), target, action->identity()});
  for (std::size_t i = 0; i < ran_rest.size(); ++i)
    pieces.push_back(Piece{dom_rest[i], ran_rest[i], action->identity()});
  return Element::make(action, 1, 1, std::move(pieces));
}

}  // namespace

FactorWord factorize(const Element& h, const Color& s) {
  const ActionPtr& action = h.action();
  if (h.rank() != 1 || h.corank() != 1)
    throw std::invalid_argument("factorize: requires rank = corank = 1");
  if (!action->contains_color(s)) throw std::invalid_argument("factorize: color not in S");

  // A whole-cube twisted piece cannot be carried onto B_{s,1}; cut it first.
  Element work = h;
  if (work.pieces().size() == 1 && !action->is_identity(work.pieces()[0].twist)) {
    Element xs = make_splitter(action, s);
    work = compose(work, compose(invert(xs), xs));
  }

  FactorWord fw{s, {}};
  std::vector<Element> conjugates;
  for (const Piece& p : work.pieces()) {
    if (action->is_identity(p.twist)) continue;
    Element a = carrier_to(action, s, p.dom);
    conjugates.push_back(compose(a, compose(iota1(action, s, p.twist), invert(a))));
    Element ident = identity_elem(action, 1);
    if (!equal(a, ident)) {
      fw.atoms.emplace_back(std::in_place_type<Element>, a);
      fw.atoms.emplace_back(std::in_place_type<GroupElem>, p.twist);
      fw.atoms.emplace_back(std::in_place_type<Element>, invert(a));
    } else {
      fw.atoms.emplace_back(std::in_place_type<GroupElem>, p.twist);
    }
  }
  Element u = identity_elem(action, 1);
  for (const Element& c : conjugates) u = compose(u, c);
  Element v = compose(work, invert(u));
  if (!is_untwisted(v)) throw std::logic_error("factorize: residual is twisted");
  if (!equal(v, identity_elem(action, 1)) || fw.atoms.empty())
    fw.atoms.insert(fw.atoms.begin(), std::variant<Element, GroupElem>(v));
  return fw;
}

Element evaluate_factor_word(const ActionPtr& action, const FactorWord& fw) {
  Element out = identity_elem(action, 1);
  for (const auto& atom : fw.atoms) {
    if (std::holds_alternative<Element>(atom))
      out = compose(out, std::get<Element>(atom));
    else
      out = compose(out, iota1(action, fw.s, std::get<GroupElem>(atom)));
  }
  return out;
}

GeneratingGraph generating_graph(const ActionPtr& action) {
  if (!action->has_metadata())
    throw std::invalid_argument("generating_graph: action lacks orbit/generator metadata");
  std::vector<Color> reps = action->orbit_representatives();
  if (reps.empty()) throw std::logic_error("generating_graph: no orbit representatives");
  const Color& s1 = reps[0];

  GeneratingGraph graph;
  std::set<Color> vertices(reps.begin(), reps.end());
  std::set<std::pair<Color, Color>> edges;
  auto add_edge = [&](const Color& a, const Color& b) {
    if (a == b) return;
    edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  };
  for (std::size_t i = 1; i < reps.size(); ++i) add_edge(s1, reps[i]);
  for (const GroupElem& g : action->generators()) {
    Color image = action->apply(g, s1);
    vertices.insert(image);
    add_edge(s1, image);
  }
  graph.vertices.assign(vertices.begin(), vertices.end());
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

GroupElem rho(const Element& h, const PointPrefix& basepoint) {
  if (h.rank() != 1 || h.corank() != 1)
    throw std::invalid_argument("rho: requires rank = corank = 1");
  return germinal_twist(h, basepoint);
}

}  // namespace tbt
