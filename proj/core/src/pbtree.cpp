#include "dendrifam/pbtree.hpp"

#include <algorithm>

#include "dendrifam/errors.hpp"

namespace dendrifam {

namespace {

void check_edge(const ExtElem& type, const BinTree& child, const char* side) {
  if (type.is_identity() != child.is_leaf()) {
    throw TypingViolation(std::string(side) + (child.is_leaf() ? " leaf edge must carry the identity 1"
                                                                : " internal edge must carry a semigroup element"));
  }
}

}  // namespace

BinTree BinTree::graft(BinTree left, Symbol x, ExtElem left_type, ExtElem right_type, BinTree right) {
  check_edge(left_type, left, "left");
  check_edge(right_type, right, "right");
  auto node = std::make_shared<Node>();
  node->leaves = left.leaves() + right.leaves();
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->dec = x;
  node->left_type = std::move(left_type);
  node->right_type = std::move(right_type);
  node->left = std::move(left);
  node->right = std::move(right);
  BinTree t;
  t.node_ = std::move(node);
  return t;
}

const BinTree::Node& BinTree::get() const {
  if (!node_) throw TypingViolation("the leaf | has no root vertex");
  return *node_;
}

bool operator==(const BinTree& a, const BinTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.leaves == y.leaves && x.dec == y.dec && x.left_type == y.left_type && x.right_type == y.right_type &&
         x.left == y.left && x.right == y.right;
}

std::strong_ordering operator<=>(const BinTree& a, const BinTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.leaves() <=> b.leaves(); c != 0) return c;
  // Equal leaf counts and distinct pointers: both are Nodes.
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.dec <=> y.dec; c != 0) return c;
  if (auto c = x.left_type <=> y.left_type; c != 0) return c;
  if (auto c = x.left <=> y.left; c != 0) return c;
  if (auto c = x.right_type <=> y.right_type; c != 0) return c;
  return x.right <=> y.right;
}

void BasisTraits<BinTree>::check(const BinTree& t) {
  if (t.is_leaf()) throw TypingViolation("the leaf | is not a basis element of a span");
}

BinDecomposition decompose(const BinTree& t) {
  if (t.is_leaf()) throw TypingViolation("cannot decompose the leaf |");
  return BinDecomposition{t.left(), t.decoration(), t.left_type(), t.right_type(), t.right()};
}

BinTree bin_generator(Symbol x) { return BinTree::graft(BinTree(), x, ExtElem(), ExtElem(), BinTree()); }

std::vector<BinTree> enumerate_bin(std::size_t n, const Alphabet& alphabet, const std::vector<OmegaElem>& edge_types) {
  if (n == 0) throw std::invalid_argument("enumerate_bin needs at least one internal vertex");
  // by_size[k]: all trees with k internal vertices (k = 0 is the Leaf).
  std::vector<std::vector<BinTree>> by_size{{BinTree()}};
  const auto types_for = [&](const BinTree& child) {
    std::vector<ExtElem> out;
    if (child.is_leaf()) {
      out.emplace_back();
    } else {
      out.assign(edge_types.begin(), edge_types.end());
    }
    return out;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<BinTree> level;
    for (std::size_t l = 0; l < k; ++l) {
      for (const auto& left : by_size[l]) {
        for (const auto& right : by_size[k - 1 - l]) {
          for (Symbol x : alphabet.symbols()) {
            for (const auto& a1 : types_for(left)) {
              for (const auto& a2 : types_for(right)) level.push_back(BinTree::graft(left, x, a1, a2, right));
            }
          }
        }
      }
    }
    std::sort(level.begin(), level.end());
    by_size.push_back(std::move(level));
  }
  return by_size[n];
}

std::vector<BinTree> enumerate_bin(std::size_t n, const Alphabet& alphabet, const Semigroup& omega) {
  return enumerate_bin(n, alphabet, omega.elements());
}

std::vector<BinTree> enumerate_bin_up_to(std::size_t max_leaves, const Alphabet& alphabet, const Semigroup& omega) {
  return enumerate_bin_up_to(max_leaves, alphabet, omega.elements());
}

std::vector<BinTree> enumerate_bin_up_to(std::size_t max_leaves, const Alphabet& alphabet,
                                         const std::vector<OmegaElem>& edge_types) {
  std::vector<BinTree> out;
  for (std::size_t n = 1; n + 1 <= max_leaves; ++n) {
    auto level = enumerate_bin(n, alphabet, edge_types);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace dendrifam
