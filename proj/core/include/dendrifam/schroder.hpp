#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "dendrifam/alphabet.hpp"
#include "dendrifam/lincomb.hpp"
#include "dendrifam/pbtree.hpp"
#include "dendrifam/semigroup.hpp"

namespace dendrifam {

/// Typed valently decorated Schröder tree.
///
/// A vertex with k + 1 children carries k decorations. Default construction
/// gives the Leaf. Leaf edges carry the identity, internal edges an Omega
/// element.
class SchroderTree {
 public:
  struct Edge;

  SchroderTree() = default;

  static SchroderTree leaf() { return SchroderTree(); }
  /// Throws ArityMismatch unless |children| = |types| = |decs| + 1 with
  /// |decs| >= 1, and TypingViolation on an ill-typed edge.
  static SchroderTree graft(std::vector<SchroderTree> children, std::vector<Symbol> decs, std::vector<ExtElem> types);

  bool is_leaf() const { return node_ == nullptr; }
  bool is_node() const { return node_ != nullptr; }

  const std::vector<Symbol>& decorations() const { return get().decs; }
  const std::vector<Edge>& edges() const { return get().edges; }
  const SchroderTree& child(std::size_t i) const;
  const ExtElem& type(std::size_t i) const;

  /// Arity of the root vertex; requires a Node.
  std::size_t breadth() const;
  std::size_t leaves() const { return node_ ? node_->leaves : 1; }
  std::size_t depth() const { return node_ ? node_->depth : 0; }
  /// Total number of decorations (equals leaves - 1).
  std::size_t decoration_count() const;

  friend bool operator==(const SchroderTree& a, const SchroderTree& b);
  /// Canonical order: leaf count, breadth, decorations, edge types, then children left to right.
  friend std::strong_ordering operator<=>(const SchroderTree& a, const SchroderTree& b);

 private:
  struct Node {
    std::vector<Symbol> decs;
    std::vector<Edge> edges;
    std::size_t leaves = 1;
    std::size_t depth = 0;
  };

  const Node& get() const;

  std::shared_ptr<const Node> node_;
};

struct SchroderTree::Edge {
  ExtElem type;
  SchroderTree child;
};

template <>
struct BasisTraits<SchroderTree> {
  static void check(const SchroderTree& t);
};

using SpanS = LinComb<SchroderTree>;

inline SchroderTree graft_nary(std::vector<SchroderTree> children, std::vector<Symbol> decs,
                               std::vector<ExtElem> types) {
  return SchroderTree::graft(std::move(children), std::move(decs), std::move(types));
}

struct NaryDecomposition {
  std::vector<SchroderTree> children;
  std::vector<Symbol> decs;
  std::vector<ExtElem> types;
};

/// Inverse of graft_nary; throws TypingViolation for a Leaf.
NaryDecomposition decompose_nary(const SchroderTree& t);

inline std::size_t breadth(const SchroderTree& t) { return t.breadth(); }
inline std::size_t depth(const SchroderTree& t) { return t.depth(); }

/// The single binary vertex carrying x.
SchroderTree sch_generator(Symbol x);
/// The corolla with decorations xs (breadth |xs| + 1, all edges leaves).
SchroderTree sch_corolla(const std::vector<Symbol>& xs);

/// Every tree with n + 1 leaves, canonically ordered. Throws InfiniteSemigroup for free semigroups.
std::vector<SchroderTree> enumerate_sch(std::size_t n, const Alphabet& alphabet, const Semigroup& omega);
std::vector<SchroderTree> enumerate_sch(std::size_t n, const Alphabet& alphabet,
                                        const std::vector<OmegaElem>& edge_types);
std::vector<SchroderTree> enumerate_sch_up_to(std::size_t max_leaves, const Alphabet& alphabet, const Semigroup& omega);
std::vector<SchroderTree> enumerate_sch_up_to(std::size_t max_leaves, const Alphabet& alphabet,
                                              const std::vector<OmegaElem>& edge_types);

/// Binary trees embed as Schröder trees whose vertices all have arity 2.
SchroderTree to_schroder(const BinTree& t);
/// Throws ArityMismatch when some vertex is not binary.
BinTree to_binary(const SchroderTree& t);
bool is_binary(const SchroderTree& t);

}  // namespace dendrifam
