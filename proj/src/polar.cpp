#include "mprod/polar.hpp"

#include <algorithm>

#include "mprod/enumerate.hpp"
#include "mprod/error.hpp"

namespace mprod {

  namespace {

    Term at(Term const& p, std::string const& v) {
      return substitute(p, {{"x", Term::variable(v)}});
    }

    void require_unary(Term const& p) {
      auto vars = variables_of(p);
      if (vars.size() != 1 || *vars.begin() != "x") {
        throw Error("expected a unary term in the variable x");
      }
    }

    PolarCandidate examine(VarietySpec const& W, Term const& t, Bounds const& bounds) {
      Verdict constant = decide_identity(W, t, at(t, "y"), bounds);
      Verdict idem     = constant.is_refuted() ? Verdict::unknown("not examined", 0)
                                               : is_term_idempotent(W, t, bounds);
      return {t, std::move(constant), std::move(idem)};
    }

  }  // namespace

  char const* to_string(Polarization p) noexcept {
    switch (p) {
      case Polarization::NotPolarized: return "NotPolarized";
      case Polarization::Polarized: return "Polarized";
      case Polarization::PurelyPolarized: return "PurelyPolarized";
      case Polarization::Unknown: return "Unknown";
    }
    return "?";
  }

  std::vector<Term> find_polar_terms(VarietySpec const& W,
                                     std::size_t        max_size,
                                     Bounds const&      bounds) {
    std::vector<Term> out;
    for (auto const& t : enumerate_terms(W.signature(), {"x"}, max_size)) {
      auto c = examine(W, t, bounds);
      if (c.constant.is_proved() && c.idempotent.is_proved()) {
        out.push_back(t);
      }
    }
    return out;
  }

  Verdict is_zero_term(VarietySpec const& W, Term const& p, Bounds const& bounds) {
    require_unary(p);
    Signature const&     sig = W.signature();
    std::vector<Verdict> parts;
    Verdict constant = decide_identity(W, p, at(p, "y"), bounds);
    if (constant.is_refuted()) {
      return constant;
    }
    parts.push_back(std::move(constant));
    for (OpIndex op = 0; op < sig.size(); ++op) {
      unsigned k = sig.arity(op);
      for (unsigned i = 0; i < k; ++i) {
        std::vector<Term> args;
        for (unsigned j = 0; j < k; ++j) {
          args.push_back(j == i ? p : Term::variable("y" + std::to_string(j + 1)));
        }
        Verdict v = decide_identity(W, Term::apply(op, std::move(args)), p, bounds);
        if (v.is_refuted()) {
          return v;
        }
        parts.push_back(std::move(v));
      }
    }
    return conjunction(parts, "zero term");
  }

  PolarizationReport classify_polarization(VarietySpec const& W,
                                           std::size_t        max_size,
                                           Bounds const&      bounds) {
    PolarizationReport r;
    r.max_size = max_size;
    for (auto const& t : enumerate_terms(W.signature(), {"x"}, max_size)) {
      auto c = examine(W, t, bounds);
      if (c.constant.is_proved() && c.idempotent.is_proved()) {
        r.polar_terms.push_back(t);
      }
      r.candidates.push_back(std::move(c));
    }

    if (r.polar_terms.empty()) {
      bool all_refuted = true;
      for (auto const& c : r.candidates) {
        all_refuted = all_refuted && (c.constant.is_refuted() || c.idempotent.is_refuted());
      }
      if (all_refuted) {
        r.classification = Polarization::NotPolarized;
        r.reason = "every unary term up to size " + std::to_string(max_size)
                 + " is refuted as constant or as term idempotent";
      } else {
        r.reason = "some unary candidate could be neither proved nor refuted";
      }
      return r;
    }

    bool zero_proved  = false;
    bool zero_refuted = false;
    for (auto const& p : r.polar_terms) {
      Verdict v = is_zero_term(W, p, bounds);
      zero_proved  = zero_proved || v.is_proved();
      zero_refuted = zero_refuted || v.is_refuted();
      r.zero_terms.push_back({p, std::move(v)});
    }

    Term const& p0            = r.polar_terms.front();
    bool        all_decompose = true;
    bool        decomp_refuted = false;
    for (auto const& id : W.base()) {
      if (id.is_trivial()) {
        continue;
      }
      // A variable of the identity named x would be captured by p(x).
      std::string fresh = "x";
      auto        vars  = id.variables();
      while (std::find(vars.begin(), vars.end(), fresh) != vars.end()) {
        fresh += "_";
      }
      Term    px = at(p0, fresh);
      Verdict l  = decide_identity(W, id.lhs(), px, bounds);
      Verdict rr = decide_identity(W, id.rhs(), px, bounds);
      all_decompose  = all_decompose && l.is_proved() && rr.is_proved();
      decomp_refuted = decomp_refuted || l.is_refuted() || rr.is_refuted();
      r.decompositions.push_back({id, std::move(l), std::move(rr)});
    }

    if (zero_refuted || decomp_refuted) {
      r.classification = Polarization::Polarized;
      r.reason = zero_refuted ? "a polar term is not a zero term"
                              : "a nontrivial base identity is not polar";
    } else if (zero_proved && all_decompose) {
      r.classification = Polarization::PurelyPolarized;
      r.reason = "zero term found and every nontrivial base identity is polar";
    } else {
      r.reason = "polar term found but purity could be neither proved nor refuted";
    }
    return r;
  }

}  // namespace mprod
