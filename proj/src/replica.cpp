#include "mprod/replica.hpp"

#include <algorithm>
#include <map>

#include "mprod/congruence.hpp"
#include "mprod/enumerate.hpp"
#include "mprod/error.hpp"
#include "mprod/program.hpp"

namespace mprod {

  namespace {
    void require_same_type(FiniteAlgebra const& A, VarietySpec const& W) {
      if (!(A.signature() == W.signature())) {
        throw Error("algebra '" + A.name() + "' and variety '" + W.name()
                    + "' have different signatures");
      }
    }
  }  // namespace

  Partition replica_congruence(FiniteAlgebra const& A, VarietySpec const& W) {
    require_same_type(A, W);
    std::vector<ElementPair> pairs;
    std::vector<Element>     stack;
    for (auto const& id : W.base()) {
      if (id.is_trivial()) {
        continue;
      }
      auto        vars = id.variables();
      TermProgram lhs(id.lhs(), vars), rhs(id.rhs(), vars);
      for_each_tuple(A.size(), vars.size(), [&](std::span<Element const> d) {
        Element a = lhs.run(A, d, stack);
        Element b = rhs.run(A, d, stack);
        if (a != b) {
          pairs.emplace_back(a, b);
        }
        return true;
      });
    }
    return congruence_generated(A, pairs);
  }

  std::size_t Rho0Relation::num_pairs() const {
    std::size_t n = 0;
    for (auto const& row : related) {
      for (bool b : row) {
        n += b;
      }
    }
    return n;
  }

  Partition Rho0Relation::transitive_closure() const {
    DisjointSet ds(related.size());
    for (std::size_t a = 0; a < related.size(); ++a) {
      for (std::size_t b = a + 1; b < related.size(); ++b) {
        if (related[a][b]) {
          ds.unite(static_cast<Element>(a), static_cast<Element>(b));
        }
      }
    }
    return Partition::from(ds);
  }

  Rho0Relation rho0_bounded(FiniteAlgebra const& A,
                            VarietySpec const&   W,
                            std::size_t          term_bound,
                            std::size_t          var_count) {
    require_same_type(A, W);
    if (!W.has_decidable_equivalence()) {
      throw Error("variety '" + W.name() + "' has no decision procedure for term equivalence");
    }
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < var_count; ++i) {
      vars.push_back(canonical_variable(i));
    }
    auto terms = enumerate_terms(W.signature(), vars, term_bound);

    std::map<Term, std::vector<std::size_t>, TermLess> classes;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      classes[equivalence_key(W, terms[i])].push_back(i);
    }

    Rho0Relation out;
    out.term_bound = term_bound;
    out.var_count  = var_count;
    out.terms      = terms.size();
    out.classes    = classes.size();
    std::size_t n  = A.size();
    out.related.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      out.related[a][a] = true;
    }

    std::vector<Element> stack;
    for (auto const& [key, members] : classes) {
      if (members.size() < 2) {
        continue;
      }
      std::vector<TermProgram> progs;
      for (auto i : members) {
        progs.emplace_back(terms[i], vars);
      }
      std::vector<bool> hit(n);
      std::vector<Element> values;
      for_each_tuple(n, var_count, [&](std::span<Element const> d) {
        values.clear();
        std::fill(hit.begin(), hit.end(), false);
        for (auto const& p : progs) {
          Element v = p.run(A, d, stack);
          if (!hit[v]) {
            hit[v] = true;
            values.push_back(v);
          }
        }
        for (auto a : values) {
          for (auto b : values) {
            out.related[a][b] = true;
          }
        }
        return true;
      });
    }
    return out;
  }

  ClassStructureReport class_structure(FiniteAlgebra const& A, VarietySpec const& W) {
    ClassStructureReport report;
    report.partition = replica_congruence(A, W);
    FiniteAlgebra Q  = quotient_algebra(A, report.partition);
    auto          idem = idempotent_elements(Q);
    auto          blocks = report.partition.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      BlockInfo info;
      info.elements      = blocks[i];
      info.is_subalgebra = is_subuniverse(A, blocks[i]);
      info.is_singleton  = blocks[i].size() == 1;
      info.is_idempotent_in_quotient =
          std::find(idem.begin(), idem.end(), static_cast<Element>(i)) != idem.end();
      report.blocks.push_back(std::move(info));
    }
    return report;
  }

}  // namespace mprod
