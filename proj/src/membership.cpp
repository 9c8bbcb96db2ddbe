#include "mprod/membership.hpp"

#include <algorithm>

#include "mprod/error.hpp"
#include "mprod/replica.hpp"

namespace mprod {

  MembershipReport member(FiniteAlgebra const& A, VarietySpec const& V, VarietySpec const& W) {
    if (!(A.signature() == V.signature())) {
      throw Error("algebra '" + A.name() + "' and variety '" + V.name()
                  + "' have different signatures");
    }
    MembershipReport report;
    report.replica = replica_congruence(A, W);
    auto blocks    = report.replica.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      BlockMembership bm;
      bm.elements      = blocks[b];
      bm.is_subalgebra = is_subuniverse(A, blocks[b]);
      if (bm.is_subalgebra) {
        FiniteAlgebra C = subalgebra(A, blocks[b]);
        for (std::size_t i = 0; i < V.base().size(); ++i) {
          IdentityCheck check = satisfies_identity(C, V.base()[i]);
          if (check.witness) {
            for (auto& [var, e] : *check.witness) {
              e = blocks[b][e];
            }
          }
          if (!check.holds && !report.failure) {
            report.member  = false;
            report.failure = MembershipFailure{b, i, *check.witness};
          }
          bm.checks.push_back(std::move(check));
        }
      }
      report.blocks.push_back(std::move(bm));
    }
    return report;
  }

  bool recheck_failure(FiniteAlgebra const&    A,
                       VarietySpec const&      V,
                       MembershipReport const& report) {
    if (!report.failure) {
      return false;
    }
    auto const& f     = *report.failure;
    auto const& block = report.blocks.at(f.block).elements;
    auto const& id    = V.base().at(f.identity);
    for (auto const& [var, e] : f.witness) {
      if (std::find(block.begin(), block.end(), e) == block.end()) {
        return false;
      }
    }
    return is_subuniverse(A, block)
        && evaluate(A, id.lhs(), f.witness) != evaluate(A, id.rhs(), f.witness);
  }

  std::vector<QuotientMembership> h_closure_probe(FiniteAlgebra const& A,
                                                  VarietySpec const&   V,
                                                  VarietySpec const&   W,
                                                  std::size_t          limit) {
    std::vector<QuotientMembership> out;
    for (auto const& theta : all_congruences(A, limit)) {
      FiniteAlgebra Q = quotient_algebra(A, theta);
      out.push_back({theta, member(Q, V, W)});
    }
    std::stable_partition(out.begin(), out.end(), [](QuotientMembership const& q) {
      return !q.report.member;
    });
    return out;
  }

  std::size_t count_violations(std::vector<QuotientMembership> const& probe) {
    return static_cast<std::size_t>(
        std::count_if(probe.begin(), probe.end(), [](QuotientMembership const& q) {
          return !q.report.member;
        }));
  }

}  // namespace mprod
