#include "mprod/report_json.hpp"

#include "mprod/congruence.hpp"
#include "mprod/parse.hpp"

namespace mprod::json {

  namespace {
    json blocks(std::vector<std::vector<Element>> const& bs, FiniteAlgebra const& A) {
      json out = json::array();
      for (auto const& b : bs) {
        json block = json::array();
        for (auto e : b) {
          block.push_back(A.element_name(e));
        }
        out.push_back(block);
      }
      return out;
    }

    json terms(std::vector<Term> const& ts, Signature const& sig) {
      json out = json::array();
      for (auto const& t : ts) {
        out.push_back(to_string(t, sig));
      }
      return out;
    }
  }  // namespace

  json algebra(FiniteAlgebra const& A) {
    json tables = json::object();
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      json tab = json::array();
      for (auto e : A.table(op)) {
        tab.push_back(A.element_name(e));
      }
      tables[A.signature().symbol(op)] = tab;
    }
    json names = json::array();
    for (Element e = 0; e < A.size(); ++e) {
      names.push_back(A.element_name(e));
    }
    return {{"name", A.name()}, {"size", A.size()}, {"elements", names}, {"tables", tables}};
  }

  json partition(Partition const& p, FiniteAlgebra const& A) {
    return blocks(p.blocks(), A);
  }

  json assignment(Assignment const& asg, FiniteAlgebra const& A) {
    json out = json::object();
    for (auto const& [v, e] : asg) {
      out[v] = A.element_name(e);
    }
    return out;
  }

  json verdict(Verdict const& v) {
    json out{{"kind", to_string(v.kind)}, {"method", v.method}};
    if (!v.trace.empty()) {
      out["trace"] = v.trace;
    }
    if (v.is_refuted() && v.model) {
      out["model"]   = algebra(*v.model);
      out["witness"] = assignment(v.witness, *v.model);
    }
    if (v.is_unknown()) {
      out["model_bound"] = v.model_bound;
    }
    return out;
  }

  json class_structure(ClassStructureReport const& r, FiniteAlgebra const& A) {
    json bs = json::array();
    for (auto const& b : r.blocks) {
      bs.push_back({{"elements", blocks({b.elements}, A)[0]},
                    {"is_subalgebra", b.is_subalgebra},
                    {"is_singleton", b.is_singleton},
                    {"is_idempotent_in_quotient", b.is_idempotent_in_quotient}});
    }
    return {{"partition", partition(r.partition, A)}, {"blocks", bs}};
  }

  json rho0(Rho0Relation const& r, FiniteAlgebra const& A) {
    json pairs = json::array();
    for (Element a = 0; a < r.related.size(); ++a) {
      for (Element b = a + 1; b < r.related.size(); ++b) {
        if (r.related[a][b]) {
          pairs.push_back({A.element_name(a), A.element_name(b)});
        }
      }
    }
    return {{"term_bound", r.term_bound},
            {"var_count", r.var_count},
            {"terms", r.terms},
            {"classes", r.classes},
            {"pairs", pairs},
            {"closure", partition(r.transitive_closure(), A)}};
  }

  json membership(MembershipReport const& r, FiniteAlgebra const& A, VarietySpec const& V) {
    json bs = json::array();
    for (auto const& b : r.blocks) {
      json checks = json::array();
      for (std::size_t i = 0; i < b.checks.size(); ++i) {
        json c{{"identity", to_string(V.base()[i], V.signature())}, {"holds", b.checks[i].holds}};
        if (b.checks[i].witness) {
          c["witness"] = assignment(*b.checks[i].witness, A);
        }
        checks.push_back(c);
      }
      bs.push_back({{"elements", blocks({b.elements}, A)[0]},
                    {"is_subalgebra", b.is_subalgebra},
                    {"checks", checks}});
    }
    json out{{"verdict", r.member ? "member" : "not-member"},
             {"exact", true},
             {"replica", partition(r.replica, A)},
             {"blocks", bs}};
    if (r.failure) {
      out["failure"] = {{"block", blocks({r.blocks[r.failure->block].elements}, A)[0]},
                        {"identity", to_string(V.base()[r.failure->identity], V.signature())},
                        {"witness", assignment(r.failure->witness, A)}};
    }
    return out;
  }

  json probe(std::vector<QuotientMembership> const& probe,
             FiniteAlgebra const&                   A,
             VarietySpec const&                     V) {
    json out = json::array();
    for (auto const& q : probe) {
      FiniteAlgebra Q = quotient_algebra(A, q.theta);
      out.push_back({{"theta", partition(q.theta, A)},
                     {"member", q.report.member},
                     {"report", membership(q.report, Q, V)}});
    }
    return {{"violations", count_violations(probe)}, {"quotients", out}};
  }

  json sigma_w(SigmaWResult const& r, Signature const& sig) {
    json ids = json::array();
    for (auto const& e : r.identities) {
      ids.push_back({{"identity", to_string(e.identity, sig)},
                     {"source", e.source},
                     {"tuple", terms(e.tuple, sig)}});
    }
    return {{"term_bound", r.term_bound},
            {"pool_vars", r.pool_vars},
            {"pool_terms", r.pool_terms},
            {"idempotent_classes", r.idempotent_classes},
            {"generated", r.generated},
            {"trivial", r.trivial},
            {"truncated", r.truncated},
            {"identities", ids}};
  }

  json hypotheses(HypothesisReport const& r, Signature const& sig) {
    return {{"f", to_string(r.f, sig)},
            {"g", to_string(r.g, sig)},
            {"binary", r.binary},
            {"a1", verdict(r.a1)},
            {"a2", verdict(r.a2)},
            {"b", verdict(r.b)},
            {"c", verdict(r.c)},
            {"all_proved", r.all_proved()},
            {"special_cases", r.special_cases}};
  }

  json chain(ChainData const& d, ChainReport const& r, Signature const& sig) {
    json links = json::array();
    for (std::size_t i = 0; i < d.links.size(); ++i) {
      links.push_back({{"identity", to_string(d.links[i], sig)}, {"verdict", verdict(r.links[i])}});
    }
    json ts = json::array();
    for (std::size_t i = 1; i <= d.length(); ++i) {
      ts.push_back(to_string(d.term(i), sig));
    }
    json c = json::array();
    for (auto const& v : r.part_c) {
      c.push_back(verdict(v));
    }
    json out{{"f", to_string(d.f, sig)},
             {"g", to_string(d.g, sig)},
             {"links", links},
             {"terms", ts},
             {"a1", verdict(r.a1)},
             {"a2", verdict(r.a2)},
             {"part_c", c},
             {"part_d", verdict(r.part_d)},
             {"ok", {{"links", r.links_ok()}, {"c", r.c_ok()}, {"d", r.d_ok()}}}};
    if (r.has_elements) {
      out["part_e"] = {{"premises", r.premises}, {"values", r.values}, {"matches", r.part_e}};
      out["ok"]["e"] = r.e_ok();
    }
    return out;
  }

  json polarization(PolarizationReport const& r, Signature const& sig) {
    json cands = json::array();
    for (auto const& c : r.candidates) {
      cands.push_back({{"term", to_string(c.term, sig)},
                       {"constant", verdict(c.constant)},
                       {"idempotent", verdict(c.idempotent)}});
    }
    json zeros = json::array();
    for (auto const& z : r.zero_terms) {
      zeros.push_back({{"term", to_string(z.term, sig)}, {"verdict", verdict(z.verdict)}});
    }
    json decs = json::array();
    for (auto const& d : r.decompositions) {
      decs.push_back({{"identity", to_string(d.identity, sig)},
                      {"lhs", verdict(d.lhs)},
                      {"rhs", verdict(d.rhs)}});
    }
    return {{"classification", to_string(r.classification)},
            {"max_size", r.max_size},
            {"reason", r.reason},
            {"polar_terms", terms(r.polar_terms, sig)},
            {"zero_terms", zeros},
            {"decompositions", decs},
            {"candidates", cands}};
  }

}  // namespace mprod::json
