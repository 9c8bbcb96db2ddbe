#include "mprod/sigma_w.hpp"

#include <map>
#include <unordered_set>

#include "mprod/enumerate.hpp"
#include "mprod/error.hpp"

namespace mprod {

  SigmaWResult sigma_w(std::vector<Identity> const& sigma,
                       VarietySpec const&           W,
                       std::size_t                  term_bound,
                       std::size_t                  pool_vars,
                       std::size_t                  max_identities) {
    if (!W.has_decidable_equivalence()) {
      throw Error("variety '" + W.name() + "' has no decision procedure for term equivalence");
    }
    Signature const& sig = W.signature();
    for (auto const& id : sigma) {
      if (!conforms(id.lhs(), sig) || !conforms(id.rhs(), sig)) {
        throw Error("identity does not match the signature of '" + W.name() + "'");
      }
    }
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < pool_vars; ++i) {
      vars.push_back(canonical_variable(i));
    }
    auto pool = enumerate_terms(sig, vars, term_bound);

    SigmaWResult out;
    out.term_bound = term_bound;
    out.pool_vars  = pool_vars;
    out.pool_terms = pool.size();

    // W-classes of the pool, each split into members that are term
    // idempotents (only those may serve as r_1) and all members.
    struct Class {
      std::vector<Term> members;
      std::vector<bool> idempotent;
    };
    std::map<Term, Class, TermLess> classes;
    for (auto const& t : pool) {
      Term key  = equivalence_key(W, t);
      bool idem = true;
      for (OpIndex op = 0; op < sig.size() && idem; ++op) {
        idem = equivalence_key(W, diagonal(sig, op, t)) == key;
      }
      auto& c = classes[key];
      c.members.push_back(t);
      c.idempotent.push_back(idem);
    }

    std::unordered_set<Identity, IdentityHash> seen;
    for (auto const& [key, c] : classes) {
      bool any = false;
      for (bool b : c.idempotent) {
        any = any || b;
      }
      if (!any) {
        continue;
      }
      ++out.idempotent_classes;
      std::size_t m = c.members.size();
      for (std::size_t s = 0; s < sigma.size(); ++s) {
        auto src_vars = sigma[s].variables();
        std::size_t n = src_vars.size();
        bool done = for_each_tuple(m, n, [&](std::span<Element const> idx) {
          if (n > 0 && !c.idempotent[idx[0]]) {
            return true;
          }
          Substitution      sub;
          std::vector<Term> tuple;
          for (std::size_t i = 0; i < n; ++i) {
            sub.emplace(src_vars[i], c.members[idx[i]]);
            tuple.push_back(c.members[idx[i]]);
          }
          Identity inst(substitute(sigma[s].lhs(), sub), substitute(sigma[s].rhs(), sub));
          ++out.generated;
          if (inst.is_trivial()) {
            ++out.trivial;
            return true;
          }
          if (seen.insert(inst).second) {
            out.identities.push_back({inst, s, std::move(tuple)});
            if (out.identities.size() >= max_identities) {
              out.truncated = true;
              return false;
            }
          }
          return true;
        });
        if (!done) {
          return out;
        }
      }
    }
    return out;
  }

}  // namespace mprod
