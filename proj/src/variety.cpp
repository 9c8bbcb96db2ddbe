#include "mprod/variety.hpp"

#include <algorithm>
#include <limits>

#include "mprod/catalog.hpp"
#include "mprod/error.hpp"
#include "mprod/models.hpp"
#include "mprod/parse.hpp"

namespace mprod {

  namespace {

    constexpr std::size_t kRewriteStepLimit   = 100000;
    constexpr std::size_t kExhaustiveEvalCap = 200000;

    // Matches the pair (l, r) against (u, v) with one shared substitution.
    // The operation index used for pairing never reaches evaluation.
    std::optional<Substitution> match_pair(Term const& l,
                                           Term const& r,
                                           Term const& u,
                                           Term const& v) {
      constexpr OpIndex pair = std::numeric_limits<OpIndex>::max();
      return match_instance(Term::apply(pair, {l, r}), Term::apply(pair, {u, v}));
    }

    // u and v differ by replacing one instance of a base side with the
    // matching instance of the other side.
    std::optional<std::string> one_step(VarietySpec const& V,
                                        Term const&        u,
                                        Term const&        v) {
      if (u == v) {
        return std::nullopt;
      }
      for (std::size_t i = 0; i < V.base().size(); ++i) {
        auto const& id = V.base()[i];
        if (match_pair(id.lhs(), id.rhs(), u, v) || match_pair(id.rhs(), id.lhs(), u, v)) {
          return "base identity " + std::to_string(i + 1) + ": "
               + to_string(id, V.signature());
        }
      }
      if (u.is_variable() || v.is_variable() || u.op() != v.op()) {
        return std::nullopt;
      }
      std::optional<std::size_t> differing;
      for (std::size_t k = 0; k < u.args().size(); ++k) {
        if (!(u.arg(k) == v.arg(k))) {
          if (differing) {
            return std::nullopt;
          }
          differing = k;
        }
      }
      return one_step(V, u.arg(*differing), v.arg(*differing));
    }

    Term rewrite_normalize(std::vector<RewriteRule> const& rules,
                           Term const&                     t,
                           std::size_t&                    steps) {
      Term cur = t;
      if (!cur.is_variable()) {
        std::vector<Term> args;
        bool              changed = false;
        for (auto const& a : cur.args()) {
          args.push_back(rewrite_normalize(rules, a, steps));
          changed = changed || !(args.back() == a);
        }
        if (changed) {
          cur = Term::apply(cur.op(), std::move(args));
        }
      }
      for (auto const& rule : rules) {
        if (auto s = match_instance(rule.lhs, cur)) {
          if (++steps > kRewriteStepLimit) {
            throw Error("rewriting did not terminate within "
                        + std::to_string(kRewriteStepLimit) + " steps");
          }
          return rewrite_normalize(rules, substitute(rule.rhs, *s), steps);
        }
      }
      return cur;
    }

    std::optional<Verdict> refute_with_standard_models(VarietySpec const& V,
                                                       Term const&        u,
                                                       Term const&        v) {
      Identity id(u, v);
      auto     vars = id.variables();
      for (auto& cand : catalog_standard_models(V, u, v)) {
        if (cand.witness) {
          Assignment asg;
          for (auto const& x : vars) {
            auto it = cand.witness->find(x);
            asg[x]  = it == cand.witness->end() ? 0 : it->second;
          }
          if (evaluate(cand.model, u, asg) != evaluate(cand.model, v, asg)) {
            return Verdict::refuted(std::move(cand.model), asg, "standard model");
          }
          continue;
        }
        double evals = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          evals *= static_cast<double>(cand.model.size());
        }
        if (evals > kExhaustiveEvalCap) {
          continue;
        }
        auto check = satisfies_identity(cand.model, id);
        if (!check.holds) {
          return Verdict::refuted(std::move(cand.model), *check.witness, "standard model");
        }
      }
      return std::nullopt;
    }

    Verdict search_or_unknown(VarietySpec const& V,
                              Term const&        u,
                              Term const&        v,
                              Bounds const&      bounds,
                              std::string        reason) {
      if (auto cm = countermodel_search(V, Identity(u, v), bounds.model_bound)) {
        return Verdict::refuted(std::move(cm->model), cm->witness, "countermodel search");
      }
      return Verdict::unknown(std::move(reason) + "; no countermodel up to size "
                                  + std::to_string(bounds.model_bound),
                              bounds.model_bound);
    }

  }  // namespace

  VarietySpec::VarietySpec(std::string           name,
                           Signature             sig,
                           std::vector<Identity> base,
                           Decision              decision)
      : name_(std::move(name)),
        sig_(std::move(sig)),
        base_(std::move(base)),
        decision_(std::move(decision)) {
    for (auto const& id : base_) {
      if (!conforms(id.lhs(), sig_) || !conforms(id.rhs(), sig_)) {
        throw Error("base identity of '" + name_ + "' does not match its signature");
      }
    }
    if (auto const* rw = std::get_if<AssertedRewrite>(&decision_)) {
      for (auto const& r : rw->rules) {
        if (!conforms(r.lhs, sig_) || !conforms(r.rhs, sig_)) {
          throw Error("rewrite rule of '" + name_ + "' does not match its signature");
        }
        if (r.lhs.is_variable()) {
          throw Error("rewrite rule of '" + name_ + "' has a variable left side");
        }
        auto lv = variables_of(r.lhs);
        for (auto const& x : variables_of(r.rhs)) {
          if (!lv.count(x)) {
            throw Error("rewrite rule of '" + name_ + "' introduces variable '" + x + "'");
          }
        }
        // Rules are identities of V; countermodels must respect them too.
        Identity id(r.lhs, r.rhs);
        if (std::find(base_.begin(), base_.end(), id) == base_.end()) {
          base_.push_back(id);
        }
      }
    }
  }

  std::optional<CatalogDecision> VarietySpec::catalog() const {
    if (auto const* c = std::get_if<CatalogDecision>(&decision_)) {
      return *c;
    }
    return std::nullopt;
  }

  bool VarietySpec::has_decidable_equivalence() const noexcept {
    return !std::holds_alternative<GenericDecision>(decision_);
  }

  char const* to_string(VerdictKind k) noexcept {
    switch (k) {
      case VerdictKind::Proved: return "Proved";
      case VerdictKind::Refuted: return "Refuted";
      case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
  }

  Verdict Verdict::proved(std::string method, std::vector<std::string> trace) {
    Verdict v;
    v.kind   = VerdictKind::Proved;
    v.method = std::move(method);
    v.trace  = std::move(trace);
    return v;
  }

  Verdict Verdict::refuted(FiniteAlgebra model, Assignment witness, std::string method) {
    Verdict v;
    v.kind    = VerdictKind::Refuted;
    v.method  = std::move(method);
    v.model   = std::move(model);
    v.witness = std::move(witness);
    return v;
  }

  Verdict Verdict::unknown(std::string reason, std::size_t model_bound) {
    Verdict v;
    v.kind        = VerdictKind::Unknown;
    v.method      = std::move(reason);
    v.model_bound = model_bound;
    return v;
  }

  Verdict conjunction(std::vector<Verdict> const& parts, std::string method) {
    Verdict const* unknown = nullptr;
    std::vector<std::string> trace;
    for (auto const& p : parts) {
      if (p.is_refuted()) {
        return p;
      }
      if (p.is_unknown() && !unknown) {
        unknown = &p;
      }
      trace.push_back(p.method);
    }
    if (unknown) {
      return *unknown;
    }
    return Verdict::proved(std::move(method), std::move(trace));
  }

  Term normal_form(VarietySpec const& V, Term const& t) {
    auto d = V.catalog();
    if (!d) {
      throw Error("variety '" + V.name() + "' has no catalog procedure");
    }
    if (!conforms(t, V.signature())) {
      throw Error("term does not match the signature of '" + V.name() + "'");
    }
    return catalog_normal_form(V.signature(), *d, t);
  }

  Term equivalence_key(VarietySpec const& V, Term const& t) {
    if (V.catalog()) {
      return normal_form(V, t);
    }
    if (auto const* rw = std::get_if<AssertedRewrite>(&V.decision())) {
      std::size_t steps = 0;
      return rewrite_normalize(rw->rules, t, steps);
    }
    throw Error("variety '" + V.name() + "' has no decision procedure for equivalence");
  }

  Verdict decide_identity(VarietySpec const& V,
                          Term const&        u,
                          Term const&        v,
                          Bounds const&      bounds) {
    Signature const& sig = V.signature();
    if (!conforms(u, sig) || !conforms(v, sig)) {
      throw Error("identity does not match the signature of '" + V.name() + "'");
    }
    if (u == v) {
      return Verdict::proved("syntactic equality");
    }
    if (auto d = V.catalog()) {
      Term nu = catalog_normal_form(sig, *d, u);
      Term nv = catalog_normal_form(sig, *d, v);
      if (nu == nv) {
        return Verdict::proved("normal forms in " + catalog_name(*d),
                               {to_string(u, sig) + " ~> " + to_string(nu, sig),
                                to_string(v, sig) + " ~> " + to_string(nv, sig)});
      }
      if (auto r = refute_with_standard_models(V, u, v)) {
        return *r;
      }
      return search_or_unknown(V, u, v, bounds, "normal forms differ");
    }
    if (auto const* rw = std::get_if<AssertedRewrite>(&V.decision())) {
      Term nu = u, nv = v;
      try {
        std::size_t steps = 0;
        nu = rewrite_normalize(rw->rules, u, steps);
        nv = rewrite_normalize(rw->rules, v, steps);
      } catch (Error const& e) {
        return Verdict::unknown(e.what(), 0);
      }
      if (nu == nv) {
        return Verdict::proved("asserted rewrite system (sound if the asserted "
                               "convergence holds)",
                               {to_string(u, sig) + " ~> " + to_string(nu, sig),
                                to_string(v, sig) + " ~> " + to_string(nv, sig)});
      }
      return search_or_unknown(V, u, v, bounds, "rewrite normal forms differ");
    }
    if (auto step = one_step(V, u, v)) {
      return Verdict::proved("single base-instance step", {*step});
    }
    return search_or_unknown(V, u, v, bounds, "no proof found");
  }

  Verdict decide_identity(VarietySpec const& V, Identity const& id, Bounds const& bounds) {
    return decide_identity(V, id.lhs(), id.rhs(), bounds);
  }

  Verdict is_term_idempotent(VarietySpec const& V, Term const& t, Bounds const& bounds) {
    std::vector<Verdict> parts;
    for (OpIndex op = 0; op < V.signature().size(); ++op) {
      Verdict v = decide_identity(V, diagonal(V.signature(), op, t), t, bounds);
      if (v.is_refuted()) {
        return v;
      }
      parts.push_back(std::move(v));
    }
    return conjunction(parts, "term idempotent");
  }

  bool provable_quickly(VarietySpec const& V, Term const& u, Term const& v) {
    if (u == v) {
      return true;
    }
    if (V.has_decidable_equivalence()) {
      try {
        return equivalence_key(V, u) == equivalence_key(V, v);
      } catch (Error const&) {
        return false;
      }
    }
    return one_step(V, u, v).has_value();
  }

  bool verify_refutation(VarietySpec const& V,
                         Term const&        u,
                         Term const&        v,
                         Verdict const&     verdict) {
    if (!verdict.is_refuted() || !verdict.model) {
      return false;
    }
    auto const& A = *verdict.model;
    if (!(A.signature() == V.signature()) || !satisfies_all(A, V.base())) {
      return false;
    }
    try {
      return evaluate(A, u, verdict.witness) != evaluate(A, v, verdict.witness);
    } catch (Error const&) {
      return false;
    }
  }

}  // namespace mprod
