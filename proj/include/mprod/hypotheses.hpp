#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "term.hpp"
#include "variety.hpp"

namespace mprod {

  // Terms f, g in the variables x, y, z. When neither mentions z they are
  // read as binary terms f(x,y), g(x,y) and lifted to ternary terms that
  // ignore the middle argument: F(x,y,z) = f(x,z).
  struct HypothesisReport {
    Term f;  // ternary forms
    Term g;
    bool binary = false;

    Verdict a1;  // V |= F(x,y,y) = x
    Verdict a2;  // V |= G(x,x,y) = y
    Verdict b;   // W |= F(x,x,y) = G(x,x,y)
    Verdict c;   // F(x,x,y) is a term idempotent of W

    // Special situations that give the conclusion through a simpler
    // statement: "binary", "independence", "maltsev", "idempotent-outer".
    std::vector<std::string> special_cases;

    bool all_proved() const {
      return a1.is_proved() && a2.is_proved() && b.is_proved() && c.is_proved();
    }
  };

  HypothesisReport check_theorem_hypotheses(VarietySpec const& V,
                                            VarietySpec const& W,
                                            Term const&        f,
                                            Term const&        g,
                                            Bounds const&      bounds = {});

  // F(x,y,z) for the given argument terms.
  Term apply_ternary(Term const& F, Term const& a, Term const& b, Term const& c);

  // Ternary form of a term pair as used by the report.
  std::pair<Term, Term> ternary_forms(Term const& f, Term const& g);

  struct FgCandidate {
    Term             f;
    Term             g;
    HypothesisReport report;
  };

  // All pairs of terms over {x, y, z} with at most max_size operation nodes
  // each whose four conditions are Proved, ordered by size f + size g, then
  // f, then g. Conditions (a1) and (a2) are screened with proof attempts
  // only; an empty result is bounded evidence, not impossibility.
  std::vector<FgCandidate> search_fg(VarietySpec const& V,
                                     VarietySpec const& W,
                                     std::size_t        max_size,
                                     Bounds const&      bounds = {});

}  // namespace mprod
