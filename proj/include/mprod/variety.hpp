#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "signature.hpp"
#include "term.hpp"

namespace mprod {

  enum class CatalogTag {
    Trivial,
    Semilattice,
    LeftZero,
    RightZero,
    RectBand,
    RS,
    CS,
    ConstAlg,
    Ck,
    Un,
    Grp
  };

  struct CatalogDecision {
    CatalogTag tag;
    unsigned   param = 0;  // k for Ck, n for Un
  };

  struct RewriteRule {
    Term lhs;
    Term rhs;
  };

  // Oriented rules the user asserts to be terminating and confluent for
  // the variety's equational theory.
  struct AssertedRewrite {
    std::vector<RewriteRule> rules;
  };

  struct GenericDecision {};

  using Decision = std::variant<GenericDecision, CatalogDecision, AssertedRewrite>;

  // A finitely based variety together with the procedure used to decide
  // its identities.
  class VarietySpec {
   public:
    VarietySpec(std::string           name,
                Signature             sig,
                std::vector<Identity> base,
                Decision              decision = GenericDecision{});

    std::string const& name() const noexcept {
      return name_;
    }
    Signature const& signature() const noexcept {
      return sig_;
    }
    std::vector<Identity> const& base() const noexcept {
      return base_;
    }
    Decision const& decision() const noexcept {
      return decision_;
    }
    std::optional<CatalogDecision> catalog() const;

    // Catalog or asserted rewrite: equivalence of terms can be decided.
    bool has_decidable_equivalence() const noexcept;

   private:
    std::string           name_;
    Signature             sig_;
    std::vector<Identity> base_;
    Decision              decision_;
  };

  struct Bounds {
    std::size_t model_bound = 4;
    std::size_t term_bound  = 6;
  };

  enum class VerdictKind { Proved, Refuted, Unknown };

  char const* to_string(VerdictKind k) noexcept;

  // Three-valued answer to "does V satisfy u = v", with evidence.
  //
  // Proved carries the method and a human-readable trace (normal forms or
  // rewrite steps). Refuted carries a finite model of the base and an
  // assignment separating the two sides. Unknown records the bound that
  // was exhausted.
  struct Verdict {
    VerdictKind                  kind = VerdictKind::Unknown;
    std::string                  method;
    std::vector<std::string>     trace;
    std::optional<FiniteAlgebra> model;
    Assignment                   witness;
    std::size_t                  model_bound = 0;

    static Verdict proved(std::string method, std::vector<std::string> trace = {});
    static Verdict refuted(FiniteAlgebra model, Assignment witness, std::string method);
    static Verdict unknown(std::string reason, std::size_t model_bound);

    bool is_proved() const noexcept {
      return kind == VerdictKind::Proved;
    }
    bool is_refuted() const noexcept {
      return kind == VerdictKind::Refuted;
    }
    bool is_unknown() const noexcept {
      return kind == VerdictKind::Unknown;
    }
  };

  // All Proved -> Proved; any Refuted -> first Refuted; otherwise Unknown.
  Verdict conjunction(std::vector<Verdict> const& parts, std::string method);

  Verdict decide_identity(VarietySpec const& V,
                          Term const&        u,
                          Term const&        v,
                          Bounds const&      bounds = {});

  Verdict decide_identity(VarietySpec const& V,
                          Identity const&    id,
                          Bounds const&      bounds = {});

  // Canonical representative under a catalog decision; throws for other
  // decisions.
  Term normal_form(VarietySpec const& V, Term const& t);

  // Normal form under the catalog or the asserted rewrite rules.
  Term equivalence_key(VarietySpec const& V, Term const& t);

  // V |= omega(t, ..., t) = t for every operation omega.
  Verdict is_term_idempotent(VarietySpec const& V,
                             Term const&        t,
                             Bounds const&      bounds = {});

  // Attempts only proofs: normal forms or a single base-instance step.
  // Never runs a countermodel search.
  bool provable_quickly(VarietySpec const& V, Term const& u, Term const& v);

  // True when the refutation re-checks: the model satisfies the base and
  // the witness separates u and v.
  bool verify_refutation(VarietySpec const& V,
                         Term const&        u,
                         Term const&        v,
                         Verdict const&     verdict);

}  // namespace mprod
