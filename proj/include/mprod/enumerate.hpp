#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "signature.hpp"
#include "term.hpp"

namespace mprod {

  // Every term over vars with at most max_size application nodes, ordered
  // by size and then lexicographically on the preorder traversal, where
  // variables come first (in the given order) and operations follow in
  // declaration order.
  std::vector<Term> enumerate_terms(Signature const&                sig,
                                    std::vector<std::string> const& vars,
                                    std::size_t                     max_size);

  // Number of terms enumerate_terms would return, without building them.
  std::size_t count_terms(Signature const& sig,
                          std::size_t      num_vars,
                          std::size_t      max_size);

}  // namespace mprod
