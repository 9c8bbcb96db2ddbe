#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "term.hpp"
#include "variety.hpp"

namespace mprod {

  // Visits every algebra of the given size satisfying the base, in
  // lexicographic order of the concatenated operation tables. Partial tables
  // are pruned as soon as a fully defined instance of a base identity
  // fails. The visitor returns false to stop; the function then returns
  // false.
  bool enumerate_models(Signature const&                                sig,
                        std::vector<Identity> const&                    base,
                        std::size_t                                     size,
                        std::function<bool(FiniteAlgebra const&)> const& visit);

  std::vector<FiniteAlgebra> all_models(Signature const&             sig,
                                        std::vector<Identity> const& base,
                                        std::size_t                  size);

  struct Countermodel {
    FiniteAlgebra model;
    Assignment    witness;
  };

  // First model of base(V), over sizes 1..max_size in enumeration order,
  // that falsifies id.
  std::optional<Countermodel> countermodel_search(VarietySpec const& V,
                                                  Identity const&    id,
                                                  std::size_t        max_size);

}  // namespace mprod
