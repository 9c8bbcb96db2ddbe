#include <doctest.h>

#include <unordered_set>

#include "mprod/catalog.hpp"
#include "mprod/chain.hpp"
#include "mprod/enumerate.hpp"
#include "mprod/hypotheses.hpp"
#include "mprod/models.hpp"
#include "mprod/parse.hpp"
#include "mprod/polar.hpp"
#include "mprod/sigma_w.hpp"
#include "mprod/variety_io.hpp"

using namespace mprod;

namespace {
  Signature const G  = signatures::groupoid();
  Signature const Gr = signatures::group();

  VarietySpec cat(char const* name) {
    return *catalog_by_name(name);
  }

  Term P(std::string_view s, Signature const& sig = G) {
    return parse_term(s, sig);
  }

  VarietySpec v5() {
    return read_variety("variety V5\nsignature\nop mul 2\n"
                        "identity mul(mul(x,x),y) = y\nidentity mul(y,mul(x,x)) = y\n");
  }

  std::unordered_set<Identity, IdentityHash> as_set(SigmaWResult const& r) {
    std::unordered_set<Identity, IdentityHash> out;
    for (auto const& e : r.identities) {
      out.insert(e.identity);
    }
    return out;
  }

  bool contains(SigmaWResult const& r, Identity const& id) {
    return as_set(r).count(id) > 0;
  }
}  // namespace

TEST_SUITE("maltsev") {
  TEST_CASE("sigma_w over semilattices") {
    std::vector<Identity> lz{parse_identity("mul(x,y) = x", G)};
    auto r = sigma_w(lz, cat("S"), 2);
    CHECK_FALSE(r.truncated);
    CHECK(contains(r, parse_identity("mul(mul(x,y),mul(y,x)) = mul(x,y)", G)));
    CHECK(contains(r, parse_identity("mul(x,x) = x", G)));
    CHECK_FALSE(contains(r, parse_identity("mul(x,y) = x", G)));

    // Oracle: every pair (r1, r2) of pool terms with S |= r1 = r2, applied
    // directly. Every semilattice term is idempotent.
    auto pool = enumerate_terms(G, {"x1", "x2"}, 2);
    std::unordered_set<Identity, IdentityHash> expected;
    for (auto const& a : pool) {
      for (auto const& b : pool) {
        if (decide_identity(cat("S"), a, b).is_proved()) {
          Identity inst(make_term(G, "mul", {a, b}), a);
          if (!inst.is_trivial()) {
            expected.insert(inst);
          }
        }
      }
    }
    CHECK(as_set(r) == expected);
  }

  TEST_CASE("sigma_w over the trivial variety takes every instance") {
    std::vector<Identity> comm{parse_identity("mul(x,y) = mul(y,x)", G)};
    auto r    = sigma_w(comm, cat("T"), 1);
    auto pool = enumerate_terms(G, {"x1", "x2"}, 1);
    std::unordered_set<Identity, IdentityHash> expected;
    for (auto const& a : pool) {
      for (auto const& b : pool) {
        Identity inst(make_term(G, "mul", {a, b}), make_term(G, "mul", {b, a}));
        if (!inst.is_trivial()) {
          expected.insert(inst);
        }
      }
    }
    CHECK(as_set(r) == expected);
  }

  TEST_CASE("every r_i of a sigma_w tuple is a term idempotent, not only r_1") {
    std::vector<Identity> sigma{parse_identity("mul(x,mul(y,z)) = mul(z,x)", G)};
    for (auto const& w : {"CS", "RS", "C2", "LZ"}) {
      auto W = cat(w);
      auto r = sigma_w(sigma, W, 2);
      CHECK(r.identities.size() > 0);
      for (auto const& e : r.identities) {
        for (auto const& t : e.tuple) {
          CHECK(is_term_idempotent(W, t).is_proved());
          CHECK(decide_identity(W, t, e.tuple.front()).is_proved());
        }
      }
    }
  }

  TEST_CASE("sigma_w stops at the identity cap") {
    std::vector<Identity> sigma{parse_identity("mul(x,y) = mul(y,x)", G)};
    auto r = sigma_w(sigma, cat("T"), 2, 2, 10);
    CHECK(r.truncated);
    CHECK(r.identities.size() == 10);
  }

  TEST_CASE("hypotheses for the V5 example") {
    auto rep = check_theorem_hypotheses(v5(), cat("RS"), P("mul(x,mul(y,y))"), P("mul(mul(x,x),y)"));
    CHECK(rep.all_proved());
    CHECK(rep.binary);
    CHECK(to_string(rep.f, G) == "mul(x,mul(z,z))");
  }

  TEST_CASE("hypotheses for independent varieties") {
    auto rep = check_theorem_hypotheses(cat("LZ"), cat("RZ"), P("mul(x,y)"), P("y"));
    CHECK(rep.all_proved());
    CHECK(std::find(rep.special_cases.begin(), rep.special_cases.end(), "independence")
          != rep.special_cases.end());
    auto same = check_theorem_hypotheses(cat("LZ"), cat("RZ"), P("mul(x,y)"), P("mul(x,y)"));
    CHECK(same.a1.is_proved());
    CHECK(same.a2.is_refuted());
  }

  TEST_CASE("hypotheses fail for CS and S") {
    auto rep = check_theorem_hypotheses(cat("CS"), cat("S"), P("mul(x,y)"), P("mul(x,y)"));
    REQUIRE(rep.a1.is_refuted());
    CHECK(satisfies_all(*rep.a1.model, cat("CS").base()));
    CHECK_FALSE(rep.all_proved());
  }

  TEST_CASE("Mal'tsev terms for groups over semilattices") {
    auto S   = *catalog_by_name("S", Gr);
    auto m   = P("mul(mul(x,inv(y)),z)", Gr);
    auto rep = check_theorem_hypotheses(cat("GRP"), S, m, m);
    CHECK(rep.all_proved());
    CHECK(std::find(rep.special_cases.begin(), rep.special_cases.end(), "maltsev")
          != rep.special_cases.end());
  }

  TEST_CASE("search for f and g") {
    auto found = search_fg(v5(), cat("RS"), 3);
    REQUIRE_FALSE(found.empty());
    CHECK(found.front().f == P("mul(x,mul(y,y))"));
    CHECK(found.front().g == P("mul(mul(x,x),y)"));
    for (auto const& c : found) {
      CHECK(c.report.all_proved());
    }
    CHECK(search_fg(cat("CS"), cat("S"), 3).empty());
    auto lr = search_fg(cat("LZ"), cat("RZ"), 1);
    CHECK(std::any_of(lr.begin(), lr.end(), [](FgCandidate const& c) {
      return c.f == P("mul(x,y)") && c.g == P("y");
    }));
  }

  TEST_CASE("chain terms unfold the recursion") {
    Signature sig("F", {{"f1", 3}, {"g1", 3}, {"mul", 2}});
    auto      f  = parse_term("f1(x,y,z)", sig);
    auto      g  = parse_term("g1(x,y,z)", sig);
    auto      d2 = build_chain_terms(f, g, {parse_identity("mul(x,y) = x", sig)});
    REQUIRE(d2.length() == 2);
    CHECK(to_string(d2.term(1), sig) == "g1(z1_1,z1_1,mul(z1_1,z1_2))");
    CHECK(to_string(d2.term(2), sig) == "f1(z1_1,mul(z1_1,z1_2),mul(z1_1,z1_2))");

    auto d3 = build_chain_terms(f, g, {parse_identity("mul(x,y) = x", sig),
                                       parse_identity("mul(y,x) = y", sig)});
    REQUIRE(d3.length() == 3);
    std::string p1 = "mul(z1_1,z1_2)", q1 = "z1_1";
    std::string p2 = "mul(z2_1,z2_2)", q2 = "z2_1";
    CHECK(to_string(d3.term(1), sig) == "g1(" + q2 + "," + q2 + ",g1(" + q1 + "," + q1 + "," + p1 + "))");
    CHECK(to_string(d3.term(2), sig) == "g1(" + q2 + "," + q2 + ",f1(" + q1 + "," + p1 + "," + p1 + "))");
    CHECK(to_string(d3.term(3), sig) == "f1(" + q2 + "," + p2 + ",f1(" + q1 + "," + p1 + "," + p1 + "))");
  }

  TEST_CASE("group chain over Z3") {
    auto S   = *catalog_by_name("S", Gr);
    auto m   = P("mul(mul(x,inv(y)),z)", Gr);
    auto grp = cat("GRP");
    auto d1  = build_chain_terms(m, m, {parse_identity("mul(x,mul(y,inv(y))) = x", Gr)});
    CHECK(normal_form(grp, d1.term(1)) == normal_form(grp, d1.term(2)));
    // over groups themselves t_1 is not idempotent
    CHECK(verify_chain(grp, grp, d1).part_d.is_refuted());

    auto d = build_chain_terms(m, m, {parse_identity("mul(x,mul(y,inv(x))) = mul(y,x)", Gr)});
    auto Z3 = groups::cyclic(3);
    // x = 1, y = 2: p_1 = 1 + 2 - 1 = 2, q_1 = 2 + 1 = 0
    ChainElements el{Z3, {2, 0}, {Assignment{{"x", 1}, {"y", 2}}}};
    auto rep = verify_chain(S, grp, d, el);
    CHECK(rep.links_ok());
    CHECK(rep.c_ok());
    CHECK(rep.d_ok());
    CHECK(rep.e_ok());
    ChainElements bad{Z3, {2, 1}, {Assignment{{"x", 1}, {"y", 2}}}};
    CHECK_FALSE(verify_chain(S, grp, d, bad).e_ok());
  }

  TEST_CASE("V5 chain over RS") {
    auto rs = cat("RS");
    auto d  = build_chain_terms(P("mul(x,mul(y,y))"), P("mul(mul(x,x),y)"),
                                {parse_identity("mul(mul(x,y),z) = mul(x,z)", G)});
    auto rep = verify_chain(rs, v5(), d);
    CHECK(rep.links_ok());
    CHECK(rep.c_ok());
    CHECK(rep.d_ok());
  }

  TEST_CASE("an empty chain is vacuous") {
    auto d = build_chain_terms(P("mul(x,z)"), P("z"), {});
    CHECK(d.length() == 1);
    auto rep = verify_chain(cat("S"), cat("LZ"), d);
    CHECK(rep.c_ok());
    CHECK(rep.d_ok());
  }

  TEST_CASE("polar terms and zero terms") {
    auto grp   = cat("GRP");
    auto polar = find_polar_terms(grp, 2);
    CHECK(std::find(polar.begin(), polar.end(), P("mul(x,inv(x))", Gr)) != polar.end());
    auto cs = find_polar_terms(cat("CS"), 2);
    CHECK(std::find(cs.begin(), cs.end(), P("mul(x,x)")) != cs.end());
    CHECK(find_polar_terms(cat("RS"), 3).empty());

    CHECK(is_zero_term(cat("CS"), P("mul(x,x)")).is_proved());
    auto z = is_zero_term(grp, P("mul(x,inv(x))", Gr));
    REQUIRE(z.is_refuted());
    CHECK(satisfies_all(*z.model, grp.base()));
    CHECK(is_zero_term(cat("C3"), P("mul(mul(x,x),x)")).is_proved());
  }

  TEST_CASE("polarization classes") {
    CHECK(classify_polarization(cat("CS"), 2).classification == Polarization::PurelyPolarized);
    CHECK(classify_polarization(cat("C3"), 3).classification == Polarization::PurelyPolarized);
    CHECK(classify_polarization(cat("GRP"), 2).classification == Polarization::Polarized);
    CHECK(classify_polarization(cat("RS"), 2).classification == Polarization::NotPolarized);
    CHECK(classify_polarization(cat("CT"), 2).classification == Polarization::PurelyPolarized);
  }
}
