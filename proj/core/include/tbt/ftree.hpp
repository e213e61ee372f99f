#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace tbt {

// Immutable finite binary tree; a node with no children is a leaf.  Shared
// subtrees are fine, all traversal is structural.
struct FTree;
using FTreePtr = std::shared_ptr<const FTree>;

struct FTree {
  FTreePtr left, right;
  bool is_leaf() const { return !left; }
};

FTreePtr ftree_leaf();
FTreePtr ftree_node(FTreePtr l, FTreePtr r);
int ftree_leaves(const FTreePtr& t);
bool ftree_equal(const FTreePtr& a, const FTreePtr& b);

// "." for a leaf, "(LR)" for a node; e.g. "(.(..))".
std::string ftree_str(const FTreePtr& t);
std::optional<FTreePtr> ftree_parse(std::string_view text);

// Tree pair diagram for an element of Thompson's group F, domain tree first.
// Stored reduced (no caret is a caret in both trees at the same leaf pair),
// which makes structural equality decide the group's word problem.
struct FElem {
  FTreePtr dom, ran;
  friend bool operator==(const FElem& a, const FElem& b) {
    return ftree_equal(a.dom, b.dom) && ftree_equal(a.ran, b.ran);
  }
};

}  // namespace tbt
