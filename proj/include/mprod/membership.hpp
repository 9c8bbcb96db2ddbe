#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "congruence.hpp"
#include "partition.hpp"
#include "variety.hpp"

namespace mprod {

  struct BlockMembership {
    std::vector<Element> elements;
    bool                 is_subalgebra = false;
    // For subalgebra blocks: result per base identity of V, in base order.
    std::vector<IdentityCheck> checks;
  };

  struct MembershipFailure {
    std::size_t block;     // index into blocks
    std::size_t identity;  // index into base(V)
    Assignment  witness;   // in elements of A
  };

  // Membership of A in the Mal'tsev product V o W: every replica class of
  // A for W that is a subalgebra lies in V. Exact, since both bases are
  // finite and each class is checked exhaustively.
  struct MembershipReport {
    bool                             member = true;
    Partition                        replica;
    std::vector<BlockMembership>     blocks;
    std::optional<MembershipFailure> failure;
  };

  MembershipReport member(FiniteAlgebra const& A, VarietySpec const& V, VarietySpec const& W);

  // Re-evaluates the failing identity on the failing block.
  bool recheck_failure(FiniteAlgebra const&    A,
                       VarietySpec const&      V,
                       MembershipReport const& report);

  struct QuotientMembership {
    Partition        theta;
    MembershipReport report;
  };

  // member(A/theta, V, W) for every congruence theta of A; violations first,
  // each group in the order of all_congruences.
  std::vector<QuotientMembership> h_closure_probe(FiniteAlgebra const& A,
                                                  VarietySpec const&   V,
                                                  VarietySpec const&   W,
                                                  std::size_t limit = kDefaultCongruenceLimit);

  std::size_t count_violations(std::vector<QuotientMembership> const& probe);

}  // namespace mprod
