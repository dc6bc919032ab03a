#pragma once

#include <string>
#include <vector>

#include "dendrifam/pbtree.hpp"
#include "dendrifam/rotabaxter.hpp"
#include "dendrifam/schroder.hpp"

namespace fixtures {

inline dendrifam::Alphabet letters(std::size_t n) {
  static const std::vector<std::string> names = {"x", "y", "z", "u"};
  return dendrifam::Alphabet(std::vector<std::string>(names.begin(), names.begin() + n));
}

template <class Tree>
std::vector<dendrifam::LinComb<Tree>> singletons(const std::vector<Tree>& trees) {
  std::vector<dendrifam::LinComb<Tree>> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.emplace_back(t);
  return out;
}

/// Generator images on k^3: x -> (1, 0, 0), y -> (0, 1/2, -1), z -> (2, 0, 1), u -> (0, 0, 3).
inline dendrifam::Vector image(dendrifam::Symbol s) {
  using dendrifam::Coefficient;
  switch (s.index) {
    case 0:
      return {Coefficient(1), Coefficient(0), Coefficient(0)};
    case 1:
      return {Coefficient(0), Coefficient(1, 2), Coefficient(-1)};
    case 2:
      return {Coefficient(2), Coefficient(0), Coefficient(1)};
    default:
      return {Coefficient(0), Coefficient(0), Coefficient(3)};
  }
}

/// The two families used for the universal property: constant -id and the cascaded sum, both on k^3 with weight 1.
inline std::vector<std::pair<std::string, dendrifam::RBFamily>> rb_targets() {
  using namespace dendrifam;
  return {{"negative identity", RBFamily::negative_lambda_identity(FiniteAlgebra::pointwise(3), Coefficient(1))},
          {"cascaded sum", RBFamily::cascaded_sum(3, Coefficient(1))}};
}

}  // namespace fixtures
