#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "dendrifam/alphabet.hpp"
#include "dendrifam/lincomb.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// Decorated typed planar binary tree.
///
/// A default-constructed tree is the Leaf `|`. Nodes are immutable and shared.
/// Invariant: an edge carries the identity exactly when its child is a Leaf.
class BinTree {
 public:
  BinTree() = default;

  static BinTree leaf() { return BinTree(); }
  /// Grafting over a fresh vertex; throws TypingViolation on an ill-typed edge.
  static BinTree graft(BinTree left, Symbol x, ExtElem left_type, ExtElem right_type, BinTree right);

  bool is_leaf() const { return node_ == nullptr; }
  bool is_node() const { return node_ != nullptr; }

  // Accessors require a Node.
  Symbol decoration() const;
  const ExtElem& left_type() const;
  const ExtElem& right_type() const;
  const BinTree& left() const;
  const BinTree& right() const;

  std::size_t leaves() const;
  std::size_t vertices() const { return leaves() - 1; }
  std::size_t depth() const;

  friend bool operator==(const BinTree& a, const BinTree& b);
  /// Canonical basis order: leaf count, then decoration, left type, left
  /// subtree, right type, right subtree.
  friend std::strong_ordering operator<=>(const BinTree& a, const BinTree& b);

 private:
  struct Node;

  const Node& get() const;

  std::shared_ptr<const Node> node_;
};

struct BinTree::Node {
  Symbol dec;
  ExtElem left_type;
  ExtElem right_type;
  BinTree left;
  BinTree right;
  std::size_t leaves = 1;
  std::size_t depth = 0;
};

inline Symbol BinTree::decoration() const { return get().dec; }
inline const ExtElem& BinTree::left_type() const { return get().left_type; }
inline const ExtElem& BinTree::right_type() const { return get().right_type; }
inline const BinTree& BinTree::left() const { return get().left; }
inline const BinTree& BinTree::right() const { return get().right; }
inline std::size_t BinTree::leaves() const { return node_ ? node_->leaves : 1; }
inline std::size_t BinTree::depth() const { return node_ ? node_->depth : 0; }

template <>
struct BasisTraits<BinTree> {
  static void check(const BinTree& t);
};

using SpanB = LinComb<BinTree>;

inline BinTree graft_binary(BinTree left, Symbol x, ExtElem a1, ExtElem a2, BinTree right) {
  return BinTree::graft(std::move(left), x, std::move(a1), std::move(a2), std::move(right));
}

struct BinDecomposition {
  BinTree left;
  Symbol x;
  ExtElem left_type;
  ExtElem right_type;
  BinTree right;
};

/// Unique decomposition of a Node; throws TypingViolation for a Leaf.
BinDecomposition decompose(const BinTree& t);

inline std::size_t depth(const BinTree& t) { return t.depth(); }

/// The single-vertex tree carrying x.
BinTree bin_generator(Symbol x);

/// Every tree with n internal vertices (n + 1 leaves), canonically ordered.
/// Throws InfiniteSemigroup for free semigroups.
std::vector<BinTree> enumerate_bin(std::size_t n, const Alphabet& alphabet, const Semigroup& omega);
/// Same, with internal edges drawn from an explicit finite set of types
/// (used for truncated free semigroups).
std::vector<BinTree> enumerate_bin(std::size_t n, const Alphabet& alphabet, const std::vector<OmegaElem>& edge_types);

/// All trees with between 2 and max_leaves leaves, canonically ordered.
std::vector<BinTree> enumerate_bin_up_to(std::size_t max_leaves, const Alphabet& alphabet, const Semigroup& omega);
std::vector<BinTree> enumerate_bin_up_to(std::size_t max_leaves, const Alphabet& alphabet,
                                         const std::vector<OmegaElem>& edge_types);

inline std::strong_ordering tree_cmp(const BinTree& a, const BinTree& b) { return a <=> b; }

}  // namespace dendrifam
