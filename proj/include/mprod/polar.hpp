#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "term.hpp"
#include "variety.hpp"

namespace mprod {

  // Unary terms t(x) over the single variable x with at most max_size
  // operation nodes such that W |= t(x) = t(y) and t is a term idempotent.
  std::vector<Term> find_polar_terms(VarietySpec const& W,
                                     std::size_t        max_size,
                                     Bounds const&      bounds = {});

  // Constancy of p together with omega(y1, .., p(x), .., yn) = p(x) for every
  // operation and position.
  Verdict is_zero_term(VarietySpec const& W, Term const& p, Bounds const& bounds = {});

  enum class Polarization { NotPolarized, Polarized, PurelyPolarized, Unknown };

  char const* to_string(Polarization p) noexcept;

  struct PolarCandidate {
    Term    term;
    Verdict constant;    // W |= t(x) = t(y)
    Verdict idempotent;  // t is a term idempotent of W
  };

  struct PolarDecomposition {
    Identity identity;  // a nontrivial base identity u = v
    Verdict  lhs;       // W |= u = p(x)
    Verdict  rhs;       // W |= v = p(x)
  };

  struct ZeroCheck {
    Term    term;
    Verdict verdict;
  };

  struct PolarizationReport {
    Polarization                    classification = Polarization::Unknown;
    std::size_t                     max_size       = 0;
    std::vector<Term>               polar_terms;
    std::vector<PolarCandidate>     candidates;  // every unary term examined
    std::vector<ZeroCheck>          zero_terms;
    std::vector<PolarDecomposition> decompositions;  // against the first polar term
    std::string                     reason;
  };

  PolarizationReport classify_polarization(VarietySpec const& W,
                                           std::size_t        max_size,
                                           Bounds const&      bounds = {});

}  // namespace mprod
