#pragma once

#include <cstddef>
#include <vector>

#include "algebra.hpp"
#include "partition.hpp"
#include "variety.hpp"

namespace mprod {

  // Least congruence of A whose quotient lies in W: generated by the pairs
  // (p(d), q(d)) over base identities p = q of W and assignments d.
  Partition replica_congruence(FiniteAlgebra const& A, VarietySpec const& W);

  // The reflexive, symmetric relation of pairs (p(d), q(d)) where p and q are
  // W-equivalent terms over var_count variables with at most term_bound
  // operation nodes. Only an under-approximation of the unbounded relation.
  struct Rho0Relation {
    std::size_t                    term_bound = 0;
    std::size_t                    var_count  = 0;
    std::size_t                    terms      = 0;  // enumerated terms
    std::size_t                    classes    = 0;  // W-classes among them
    std::vector<std::vector<bool>> related;

    std::size_t num_pairs() const;
    Partition   transitive_closure() const;
  };

  Rho0Relation rho0_bounded(FiniteAlgebra const& A,
                            VarietySpec const&   W,
                            std::size_t          term_bound,
                            std::size_t          var_count = 2);

  struct BlockInfo {
    std::vector<Element> elements;
    bool                 is_subalgebra              = false;
    bool                 is_singleton               = false;
    bool                 is_idempotent_in_quotient  = false;
  };

  struct ClassStructureReport {
    Partition              partition;
    std::vector<BlockInfo> blocks;  // in the order of partition.blocks()
  };

  ClassStructureReport class_structure(FiniteAlgebra const& A, VarietySpec const& W);

}  // namespace mprod
