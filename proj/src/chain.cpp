#include "mprod/chain.hpp"

#include <algorithm>

#include "mprod/error.hpp"
#include "mprod/hypotheses.hpp"

namespace mprod {

  ChainData build_chain_terms(Term const& f, Term const& g, std::vector<Identity> const& chain) {
    for (Term const* t : {&f, &g}) {
      for (auto const& v : variables_of(*t)) {
        if (v != "x" && v != "y" && v != "z") {
          throw Error("chain terms f and g may only use the variables x, y, z");
        }
      }
    }
    auto [F, G] = ternary_forms(f, g);
    ChainData data{F, G, {}, {}, {}};

    for (std::size_t i = 0; i < chain.size(); ++i) {
      Substitution                       sub;
      std::map<std::string, std::string> names;
      auto                               vars = chain[i].variables();
      for (std::size_t k = 0; k < vars.size(); ++k) {
        std::string nm = "z" + std::to_string(i + 1) + "_" + std::to_string(k + 1);
        names[vars[k]] = nm;
        sub.emplace(vars[k], Term::variable(nm));
      }
      data.links.emplace_back(substitute(chain[i].lhs(), sub), substitute(chain[i].rhs(), sub));
      data.renaming.push_back(std::move(names));
    }

    std::size_t n = chain.size() + 1;
    Term        p1 = chain.empty() ? Term::variable("z1_1") : data.links[0].lhs();
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<Term> row{p1};
      for (std::size_t j = 1; j < n; ++j) {
        Term const& p = data.links[j - 1].lhs();
        Term const& q = data.links[j - 1].rhs();
        if (j < i) {
          row.push_back(apply_ternary(F, q, p, row.back()));
        } else {
          row.push_back(apply_ternary(G, q, q, row.back()));
        }
      }
      data.t.push_back(std::move(row));
    }
    return data;
  }

  bool ChainReport::links_ok() const {
    return std::all_of(links.begin(), links.end(), [](Verdict const& v) { return v.is_proved(); });
  }

  bool ChainReport::c_ok() const {
    return std::all_of(part_c.begin(), part_c.end(), [](Verdict const& v) { return v.is_proved(); });
  }

  bool ChainReport::e_ok() const {
    auto all = [](std::vector<bool> const& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return has_elements && all(premises) && all(part_e);
  }

  ChainReport verify_chain(VarietySpec const&                  W,
                           VarietySpec const&                  V,
                           ChainData const&                    data,
                           std::optional<ChainElements> const& elements,
                           Bounds const&                       bounds) {
    if (!(V.signature() == W.signature())) {
      throw Error("varieties '" + V.name() + "' and '" + W.name()
                  + "' have different signatures");
    }
    Term x = Term::variable("x"), y = Term::variable("y");
    ChainReport r{{},
                  decide_identity(V, apply_ternary(data.f, x, y, y), x, bounds),
                  decide_identity(V, apply_ternary(data.g, x, x, y), y, bounds),
                  {},
                  Verdict::proved("vacuous for a chain of length 1"),
                  false,
                  {},
                  {},
                  {}};
    for (auto const& link : data.links) {
      r.links.push_back(decide_identity(W, link, bounds));
    }
    std::size_t n = data.length();
    for (std::size_t i = 1; i < n; ++i) {
      r.part_c.push_back(decide_identity(W, data.term(i), data.term(i + 1), bounds));
    }
    if (n > 1) {
      r.part_d = is_term_idempotent(W, data.term(1), bounds);
    }

    if (!elements) {
      return r;
    }
    auto const& E = *elements;
    if (E.a.size() != n || E.c.size() != data.links.size()) {
      throw Error("chain of length " + std::to_string(n) + " needs " + std::to_string(n)
                  + " elements and " + std::to_string(n - 1) + " assignments");
    }
    r.has_elements = true;
    Assignment merged;
    for (std::size_t i = 0; i < data.links.size(); ++i) {
      Assignment renamed;
      for (auto const& [orig, fresh] : data.renaming[i]) {
        auto it = E.c[i].find(orig);
        if (it == E.c[i].end()) {
          throw Error("assignment " + std::to_string(i + 1) + " misses variable '" + orig + "'");
        }
        renamed[fresh] = it->second;
        merged[fresh]  = it->second;
      }
      auto const& link = data.links[i];
      r.premises.push_back(evaluate(E.algebra, link.lhs(), renamed) == E.a[i]
                           && evaluate(E.algebra, link.rhs(), renamed) == E.a[i + 1]);
    }
    if (data.links.empty()) {
      merged["z1_1"] = E.a[0];
    }
    for (std::size_t i = 1; i <= n; ++i) {
      Element v = evaluate(E.algebra, data.term(i), merged);
      r.values.push_back(v);
      r.part_e.push_back(v == E.a[i - 1]);
    }
    return r;
  }

}  // namespace mprod
