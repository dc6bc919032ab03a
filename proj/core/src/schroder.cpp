#include "dendrifam/schroder.hpp"

#include <algorithm>
#include <functional>

#include "dendrifam/errors.hpp"

namespace dendrifam {

SchroderTree SchroderTree::graft(std::vector<SchroderTree> children, std::vector<Symbol> decs,
                                 std::vector<ExtElem> types) {
  if (decs.empty()) throw ArityMismatch("a Schröder vertex needs at least one decoration");
  if (children.size() != decs.size() + 1 || types.size() != children.size()) {
    throw ArityMismatch("a vertex with " + std::to_string(decs.size()) + " decorations needs " +
                        std::to_string(decs.size() + 1) + " children and edge types, got " +
                        std::to_string(children.size()) + " and " + std::to_string(types.size()));
  }
  auto node = std::make_shared<Node>();
  node->leaves = 0;
  std::size_t deepest = 0;
  node->edges.reserve(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (types[i].is_identity() != children[i].is_leaf()) {
      throw TypingViolation("edge " + std::to_string(i) +
                            (children[i].is_leaf() ? ": leaf edge must carry the identity 1"
                                                   : ": internal edge must carry a semigroup element"));
    }
    node->leaves += children[i].leaves();
    deepest = std::max(deepest, children[i].depth());
    node->edges.push_back(Edge{std::move(types[i]), std::move(children[i])});
  }
  node->depth = deepest + 1;
  node->decs = std::move(decs);
  SchroderTree t;
  t.node_ = std::move(node);
  return t;
}

const SchroderTree::Node& SchroderTree::get() const {
  if (!node_) throw TypingViolation("the leaf | has no root vertex");
  return *node_;
}

const SchroderTree& SchroderTree::child(std::size_t i) const { return get().edges.at(i).child; }
const ExtElem& SchroderTree::type(std::size_t i) const { return get().edges.at(i).type; }
std::size_t SchroderTree::breadth() const { return get().edges.size(); }

std::size_t SchroderTree::decoration_count() const {
  if (!node_) return 0;
  std::size_t n = node_->decs.size();
  for (const auto& e : node_->edges) n += e.child.decoration_count();
  return n;
}

bool operator==(const SchroderTree& a, const SchroderTree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.leaves != y.leaves || x.decs != y.decs || x.edges.size() != y.edges.size()) return false;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    if (x.edges[i].type != y.edges[i].type || !(x.edges[i].child == y.edges[i].child)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const SchroderTree& a, const SchroderTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.leaves() <=> b.leaves(); c != 0) return c;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.edges.size() <=> y.edges.size(); c != 0) return c;
  if (auto c = x.decs <=> y.decs; c != 0) return c;
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    if (auto c = x.edges[i].type <=> y.edges[i].type; c != 0) return c;
  }
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    if (auto c = x.edges[i].child <=> y.edges[i].child; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void BasisTraits<SchroderTree>::check(const SchroderTree& t) {
  if (t.is_leaf()) throw TypingViolation("the leaf | is not a basis element of a span");
}

NaryDecomposition decompose_nary(const SchroderTree& t) {
  if (t.is_leaf()) throw TypingViolation("cannot decompose the leaf |");
  NaryDecomposition d;
  d.decs = t.decorations();
  for (const auto& e : t.edges()) {
    d.children.push_back(e.child);
    d.types.push_back(e.type);
  }
  return d;
}

SchroderTree sch_generator(Symbol x) { return sch_corolla({x}); }

SchroderTree sch_corolla(const std::vector<Symbol>& xs) {
  return SchroderTree::graft(std::vector<SchroderTree>(xs.size() + 1), xs, std::vector<ExtElem>(xs.size() + 1));
}

std::vector<SchroderTree> enumerate_sch(std::size_t n, const Alphabet& alphabet,
                                        const std::vector<OmegaElem>& edge_types) {
  if (n == 0) throw std::invalid_argument("enumerate_sch needs at least one decoration");
  const auto symbols = alphabet.symbols();
  // by_size[k]: all trees with k + 1 leaves (k = 0 is the Leaf).
  std::vector<std::vector<SchroderTree>> by_size{{SchroderTree()}};

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t total_leaves = k + 1;
    std::vector<SchroderTree> level;
    std::vector<SchroderTree> children;
    std::vector<ExtElem> types;

    // Emits every decoration word of the given length for the assembled children.
    const auto emit = [&](std::size_t arity) {
      std::vector<Symbol> decs(arity - 1, symbols.front());
      std::vector<std::size_t> digits(arity - 1, 0);
      while (true) {
        for (std::size_t i = 0; i < digits.size(); ++i) decs[i] = symbols[digits[i]];
        level.push_back(SchroderTree::graft(children, decs, types));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == symbols.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
    };

    // Chooses children left to right until `remaining` leaves are used up.
    std::function<void(std::size_t)> place = [&](std::size_t remaining) {
      if (remaining == 0) {
        if (children.size() >= 2) emit(children.size());
        return;
      }
      for (std::size_t l = 1; l <= remaining; ++l) {
        if (l == total_leaves) continue;  // a single child would make a unary vertex
        for (const auto& c : by_size[l - 1]) {
          if (c.is_leaf()) {
            children.push_back(c);
            types.emplace_back();
            place(remaining - l);
            children.pop_back();
            types.pop_back();
          } else {
            for (const auto& t : edge_types) {
              children.push_back(c);
              types.emplace_back(t);
              place(remaining - l);
              children.pop_back();
              types.pop_back();
            }
          }
        }
      }
    };
    place(total_leaves);
    std::sort(level.begin(), level.end());
    by_size.push_back(std::move(level));
  }
  return by_size[n];
}

std::vector<SchroderTree> enumerate_sch(std::size_t n, const Alphabet& alphabet, const Semigroup& omega) {
  return enumerate_sch(n, alphabet, omega.elements());
}

std::vector<SchroderTree> enumerate_sch_up_to(std::size_t max_leaves, const Alphabet& alphabet,
                                              const std::vector<OmegaElem>& edge_types) {
  std::vector<SchroderTree> out;
  for (std::size_t n = 1; n + 1 <= max_leaves; ++n) {
    auto level = enumerate_sch(n, alphabet, edge_types);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<SchroderTree> enumerate_sch_up_to(std::size_t max_leaves, const Alphabet& alphabet,
                                              const Semigroup& omega) {
  return enumerate_sch_up_to(max_leaves, alphabet, omega.elements());
}

SchroderTree to_schroder(const BinTree& t) {
  if (t.is_leaf()) return SchroderTree();
  return SchroderTree::graft({to_schroder(t.left()), to_schroder(t.right())}, {t.decoration()},
                             {t.left_type(), t.right_type()});
}

bool is_binary(const SchroderTree& t) {
  if (t.is_leaf()) return true;
  if (t.breadth() != 2) return false;
  return is_binary(t.child(0)) && is_binary(t.child(1));
}

BinTree to_binary(const SchroderTree& t) {
  if (t.is_leaf()) return BinTree();
  if (t.breadth() != 2) throw ArityMismatch("vertex of arity " + std::to_string(t.breadth()) + " is not binary");
  return BinTree::graft(to_binary(t.child(0)), t.decorations().front(), t.type(0), t.type(1), to_binary(t.child(1)));
}

}  // namespace dendrifam
