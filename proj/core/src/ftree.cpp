#include "tbt/ftree.hpp"

namespace tbt {

FTreePtr ftree_leaf() {
  static const FTreePtr leaf = std::make_shared<FTree>();
  return leaf;
}

FTreePtr ftree_node(FTreePtr l, FTreePtr r) {
  auto t = std::make_shared<FTree>();
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

int ftree_leaves(const FTreePtr& t) {
  if (t->is_leaf()) return 1;
  return ftree_leaves(t->left) + ftree_leaves(t->right);
}

bool ftree_equal(const FTreePtr& a, const FTreePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_leaf() || b->is_leaf()) return a->is_leaf() == b->is_leaf();
  return ftree_equal(a->left, b->left) && ftree_equal(a->right, b->right);
}

std::string ftree_str(const FTreePtr& t) {
  if (t->is_leaf()) return ".";
  return "(" + ftree_str(t->left) + ftree_str(t->right) + ")";
}

namespace {
FTreePtr parse_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) return nullptr;
  if (text[pos] == '.') { ++pos; return ftree_leaf(); }
  if (text[pos] != '(') return nullptr;
  ++pos;
  FTreePtr l = parse_at(text, pos);
  if (!l) return nullptr;
  FTreePtr r = parse_at(text, pos);
  if (!r) return nullptr;
  if (pos >= text.size() || text[pos] != ')') return nullptr;
  ++pos;
  return ftree_node(std::move(l), std::move(r));
}
}  // namespace

std::optional<FTreePtr> ftree_parse(std::string_view text) {
  std::size_t pos = 0;
  FTreePtr t = parse_at(text, pos);
  if (!t || pos != text.size()) return std::nullopt;
  return t;
}

}  // namespace tbt
