#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "signature.hpp"
#include "term.hpp"
#include "variety.hpp"

namespace mprod {

  // Placeholder variable used by normal forms of "saturated" classes, e.g.
  // the single class of non-variable terms in CS.
  inline constexpr char const* kMarkerVariable = "_c";

  // Builds a catalog variety. Trivial, Semilattice and ConstAlg accept any
  // signature (Semilattice needs a plural one); the others use their fixed
  // signature and ignore sig.
  VarietySpec catalog_variety(CatalogTag                      tag,
                              unsigned                        param = 0,
                              std::optional<Signature> const& sig   = std::nullopt);

  // Tag names: T, S, LZ, RZ, RB, RS, CS, CT, C<k> (k >= 2), U<n>, GRP.
  std::optional<VarietySpec>
  catalog_by_name(std::string const&              name,
                  std::optional<Signature> const& sig = std::nullopt);

  std::string catalog_name(CatalogDecision const& d);

  std::vector<std::string> catalog_names();

  Term catalog_normal_form(Signature const&       sig,
                           CatalogDecision const& d,
                           Term const&            t);

  struct CandidateModel {
    FiniteAlgebra model;
    // Set when the construction already knows a separating assignment;
    // otherwise all assignments are searched.
    std::optional<Assignment> witness;
  };

  // Algebras of the variety tried first when refuting u = v. Some are built
  // from the two sides (factor models for C_k, permutation groups for GRP).
  std::vector<CandidateModel> catalog_standard_models(VarietySpec const& V,
                                                      Term const&        u,
                                                      Term const&        v);

  bool catalog_is_idempotent(CatalogDecision const& d);

  // Finite groups as (mul, inv)-algebras.
  namespace groups {
    FiniteAlgebra cyclic(std::size_t n);
    FiniteAlgebra symmetric3();
    // Closure of the permutations under composition; empty if the group
    // would exceed max_order.
    std::optional<FiniteAlgebra>
    generated(std::string                              name,
              std::vector<std::vector<Element>> const& gens,
              std::size_t                              max_order);
  }  // namespace groups

  // Small named groupoids.
  namespace groupoids {
    FiniteAlgebra left_zero(std::size_t n);
    FiniteAlgebra right_zero(std::size_t n);
    // All products equal 0.
    FiniteAlgebra constant(std::size_t n);
    FiniteAlgebra semilattice2();
  }  // namespace groupoids

}  // namespace mprod
