#pragma once

#include <json.hpp>

#include "algebra.hpp"
#include "chain.hpp"
#include "hypotheses.hpp"
#include "membership.hpp"
#include "partition.hpp"
#include "polar.hpp"
#include "replica.hpp"
#include "sigma_w.hpp"
#include "variety.hpp"

namespace mprod::json {

  using nlohmann::json;

  json algebra(FiniteAlgebra const& A);
  json partition(Partition const& p, FiniteAlgebra const& A);
  json assignment(Assignment const& asg, FiniteAlgebra const& A);
  json verdict(Verdict const& v);
  json class_structure(ClassStructureReport const& r, FiniteAlgebra const& A);
  json rho0(Rho0Relation const& r, FiniteAlgebra const& A);
  json membership(MembershipReport const& r, FiniteAlgebra const& A, VarietySpec const& V);
  json probe(std::vector<QuotientMembership> const& probe,
             FiniteAlgebra const&                   A,
             VarietySpec const&                     V);
  json sigma_w(SigmaWResult const& r, Signature const& sig);
  json hypotheses(HypothesisReport const& r, Signature const& sig);
  json chain(ChainData const& d, ChainReport const& r, Signature const& sig);
  json polarization(PolarizationReport const& r, Signature const& sig);

}  // namespace mprod::json
