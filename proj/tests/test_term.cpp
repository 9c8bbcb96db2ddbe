#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "mprod/enumerate.hpp"
#include "mprod/error.hpp"
#include "mprod/parse.hpp"
#include "mprod/term.hpp"

using namespace mprod;

namespace {

  Signature const G = signatures::groupoid();

  Term P(std::string_view s, Signature const& sig = G) {
    return parse_term(s, sig);
  }

  // All terms with exactly s application nodes, built top-down.
  std::vector<Term> exact_size(Signature const& sig, std::vector<std::string> const& vars, std::size_t s) {
    std::vector<Term> out;
    if (s == 0) {
      for (auto const& v : vars) {
        out.push_back(Term::variable(v));
      }
      return out;
    }
    for (OpIndex op = 0; op < sig.size(); ++op) {
      unsigned                                       k = sig.arity(op);
      std::function<void(unsigned, std::size_t, std::vector<Term>&)> fill =
          [&](unsigned i, std::size_t left, std::vector<Term>& args) {
            if (i == k) {
              if (left == 0) {
                out.push_back(Term::apply(op, args));
              }
              return;
            }
            for (std::size_t part = 0; part <= left; ++part) {
              for (auto const& child : exact_size(sig, vars, part)) {
                args.push_back(child);
                fill(i + 1, left - part, args);
                args.pop_back();
              }
            }
          };
      std::vector<Term> args;
      fill(0, s - 1, args);
    }
    return out;
  }

  // Preorder token ranks: variables by list position, then operations.
  void tokens(Term const& t, std::vector<std::string> const& vars, std::vector<std::size_t>& out) {
    if (t.is_variable()) {
      out.push_back(std::find(vars.begin(), vars.end(), t.name()) - vars.begin());
      return;
    }
    out.push_back(vars.size() + t.op());
    for (auto const& a : t.args()) {
      tokens(a, vars, out);
    }
  }

}  // namespace

TEST_SUITE("sig-term") {
  TEST_CASE("signatures reject nullary, duplicate and reserved symbols") {
    CHECK_THROWS_AS(Signature("s", {{"c", 0}}), Error);
    CHECK_THROWS_AS(Signature("s", {{"f", 1}, {"f", 2}}), Error);
    CHECK_THROWS_AS(Signature("s", {{"x1", 2}}), Error);
    CHECK_THROWS_AS(Signature("s", {{"_m", 2}}), Error);
    CHECK(G.is_plural());
    CHECK_FALSE(signatures::monounary().is_plural());
    CHECK(signatures::group().max_arity() == 2);
  }

  TEST_CASE("parse and print round trip") {
    for (auto s : {"x", "mul(x,y)", "mul(mul(x,x),mul(y,mul(z,x)))"}) {
      CHECK(to_string(P(s), G) == s);
    }
    CHECK(to_string(P(" mul( x , y ) "), G) == "mul(x,y)");
    auto id = parse_identity("mul(x,y) = x", G);
    CHECK(to_string(id, G) == "mul(x,y) = x");
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(P("foo(x)"), ParseError);
    CHECK_THROWS_AS(P("mul(x)"), ParseError);
    CHECK_THROWS_AS(P("mul"), ParseError);
    CHECK_THROWS_AS(P("mul(x,y) z"), ParseError);
    CHECK_THROWS_AS(parse_identity("mul(x,y)", G), ParseError);
  }

  TEST_CASE("size counts operation nodes") {
    CHECK(P("x").size() == 0);
    CHECK(P("mul(x,mul(y,y))").size() == 2);
    CHECK(node_count(P("mul(x,mul(y,y))")) == 5);
  }

  TEST_CASE("identities compare up to renaming") {
    auto a = parse_identity("mul(y,x) = y", G);
    auto b = parse_identity("mul(u,v) = u", G);
    auto c = parse_identity("mul(x,y) = y", G);
    CHECK(to_string(a.canonical(), G) == "mul(x1,x2) = x1");
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(IdentityHash{}(a) == IdentityHash{}(b));
    CHECK(parse_identity("x = x", G).is_trivial());
  }

  TEST_CASE("substitution and instance matching") {
    Term p = P("mul(x,mul(y,y))");
    Term q = P("mul(mul(z,z),mul(x,x))");
    auto s = match_instance(p, q);
    REQUIRE(s);
    CHECK(substitute(p, *s) == q);
    CHECK_FALSE(match_instance(P("mul(x,x)"), P("mul(x,y)")));
    CHECK(variables_in_order(q) == std::vector<std::string>{"z", "x"});
    CHECK(first_variable(q) == "z");
    CHECK(last_variable(q) == "x");
  }

  TEST_CASE("enumeration matches a top-down generator in count and order") {
    Signature const mixed("m", {{"f", 1}, {"g", 2}, {"h", 3}});
    for (Signature const* sig : {&G, &mixed}) {
      std::vector<std::string> vars{"x", "y"};
      auto                     terms = enumerate_terms(*sig, vars, 4);
      std::set<std::vector<std::size_t>> expected;
      std::size_t                        total = 0;
      for (std::size_t s = 0; s <= 4; ++s) {
        for (auto const& t : exact_size(*sig, vars, s)) {
          std::vector<std::size_t> tok;
          tokens(t, vars, tok);
          expected.insert(tok);
          ++total;
        }
      }
      REQUIRE(terms.size() == total);
      CHECK(count_terms(*sig, 2, 4) == total);
      std::set<std::vector<std::size_t>> got;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<std::size_t> tok;
        tokens(terms[i], vars, tok);
        got.insert(tok);
        if (i > 0) {
          std::vector<std::size_t> prev;
          tokens(terms[i - 1], vars, prev);
          bool ordered = terms[i - 1].size() < terms[i].size()
                      || (terms[i - 1].size() == terms[i].size() && prev < tok);
          CHECK(ordered);
        }
      }
      CHECK(got == expected);
    }
  }

  TEST_CASE("first terms over x, y in the groupoid signature") {
    auto terms = enumerate_terms(G, {"x", "y"}, 1);
    std::vector<std::string> shown;
    for (auto const& t : terms) {
      shown.push_back(to_string(t, G));
    }
    CHECK(shown == std::vector<std::string>{"x", "y", "mul(x,x)", "mul(x,y)", "mul(y,x)", "mul(y,y)"});
  }
}
