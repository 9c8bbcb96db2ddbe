#pragma once

#include <cstddef>
#include <vector>

#include "term.hpp"
#include "variety.hpp"

namespace mprod {

  struct SigmaWEntry {
    Identity          identity;
    std::size_t       source;  // index into the input identities
    std::vector<Term> tuple;   // r_1..r_n, substituted for the source's variables
  };

  // A finite slice of Sigma^W: substitution instances u(r_1..r_n) = v(r_1..r_n)
  // where the r_i are pairwise W-equivalent and W |= omega(r_1..r_1) = r_1.
  struct SigmaWResult {
    std::vector<SigmaWEntry> identities;  // deduplicated up to renaming
    std::size_t              term_bound = 0;
    std::size_t              pool_vars  = 0;
    std::size_t              pool_terms = 0;
    std::size_t              idempotent_classes = 0;
    std::size_t              generated = 0;  // before deduplication
    std::size_t              trivial   = 0;  // instances with equal sides, dropped
    bool                     truncated = false;
  };

  // Pool: terms over pool_vars variables with at most term_bound operation
  // nodes. Stops after max_identities distinct identities.
  SigmaWResult sigma_w(std::vector<Identity> const& sigma,
                       VarietySpec const&           W,
                       std::size_t                  term_bound,
                       std::size_t                  pool_vars      = 2,
                       std::size_t                  max_identities = 500000);

}  // namespace mprod
