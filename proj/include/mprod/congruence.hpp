#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "partition.hpp"

namespace mprod {

  using ElementPair = std::pair<Element, Element>;

  inline constexpr std::size_t kDefaultCongruenceLimit = 8;

  bool is_congruence(FiniteAlgebra const& A, Partition const& pi);

  // Least congruence containing the pairs. Every merge of two classes is
  // queued and pushed through each basic translation
  // omega(c_1, .., x, .., c_k) until nothing new merges.
  Partition congruence_generated(FiniteAlgebra const&            A,
                                 std::vector<ElementPair> const& pairs);

  // Delta plus all principal congruences, closed under join. Sorted by
  // decreasing number of blocks, then by representative vector, so Delta
  // comes first and Nabla last.
  std::vector<Partition> all_congruences(FiniteAlgebra const& A,
                                         std::size_t limit
                                         = kDefaultCongruenceLimit);

}  // namespace mprod
