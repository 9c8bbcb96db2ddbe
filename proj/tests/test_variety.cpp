#include <doctest.h>

#include "mprod/catalog.hpp"
#include "mprod/enumerate.hpp"
#include "mprod/error.hpp"
#include "mprod/models.hpp"
#include "mprod/parse.hpp"
#include "mprod/variety_io.hpp"
#include "support.hpp"

using namespace mprod;

namespace {
  Signature const G = signatures::groupoid();

  VarietySpec cat(char const* name) {
    return *catalog_by_name(name);
  }

  Identity I(VarietySpec const& V, std::string_view s) {
    return parse_identity(s, V.signature());
  }

  // Every table of the given size, filtered by the base.
  std::size_t brute_models(Signature const& sig, std::vector<Identity> const& base, std::size_t n) {
    std::size_t count = 0;
    std::size_t cells = n * n;
    for_each_tuple(n, cells, [&](std::span<Element const> t) {
      FiniteAlgebra A("B", sig, n, {std::vector<Element>(t.begin(), t.end())});
      if (satisfies_all(A, base)) {
        ++count;
      }
      return true;
    });
    return count;
  }

  std::string const kV5 = "variety V5\nsignature\nop mul 2\n"
                          "identity mul(mul(x,x),y) = y\nidentity mul(y,mul(x,x)) = y\n";
}  // namespace

TEST_SUITE("variety") {
  TEST_CASE("model enumeration matches brute force") {
    std::vector<Identity> assoc{parse_identity("mul(mul(x,y),z) = mul(x,mul(y,z))", G)};
    CHECK(all_models(G, assoc, 2).size() == 8);
    CHECK(all_models(G, assoc, 2).size() == brute_models(G, assoc, 2));
    std::vector<Identity> sl{parse_identity("mul(x,x) = x", G),
                             parse_identity("mul(x,y) = mul(y,x)", G)};
    CHECK(all_models(G, sl, 3).size() == brute_models(G, sl, 3));
    for (auto const& A : all_models(G, sl, 3)) {
      CHECK(satisfies_all(A, sl));
    }
  }

  TEST_CASE("catalog names resolve case-insensitively") {
    for (auto const& n : catalog_names()) {
      auto V = catalog_by_name(n);
      REQUIRE(V);
      CHECK(catalog_name(*V->catalog()) == n);
    }
    CHECK(catalog_by_name("rs"));
    CHECK(catalog_by_name("C7")->catalog()->param == 7);
    CHECK_FALSE(catalog_by_name("C1"));
    CHECK_FALSE(catalog_by_name("nope"));
  }

  TEST_CASE("catalog decisions on known identities") {
    CHECK(decide_identity(cat("RS"), I(cat("RS"), "mul(mul(x,y),z) = mul(x,z)")).is_proved());
    CHECK(decide_identity(cat("RS"), I(cat("RS"), "mul(x,mul(y,z)) = mul(x,z)")).is_proved());
    CHECK(decide_identity(cat("RB"), I(cat("RB"), "mul(mul(x,y),x) = x")).is_proved());
    CHECK(decide_identity(cat("S"), I(cat("S"), "mul(y,mul(x,y)) = mul(x,y)")).is_proved());
    CHECK(decide_identity(cat("CS"), I(cat("CS"), "mul(x,y) = mul(z,z)")).is_proved());
    CHECK(decide_identity(cat("C3"), I(cat("C3"), "mul(mul(x,y),z) = mul(mul(y,y),y)")).is_proved());
    CHECK(decide_identity(cat("C3"), I(cat("C3"), "mul(x,y) = mul(y,x)")).is_refuted());
    CHECK(decide_identity(cat("U2"), I(cat("U2"), "f(f(f(f(x)))) = f(f(x))")).is_proved());
    CHECK(decide_identity(cat("GRP"), I(cat("GRP"), "mul(x,inv(x)) = mul(y,inv(y))")).is_proved());
    CHECK(decide_identity(cat("GRP"), I(cat("GRP"), "inv(inv(x)) = x")).is_proved());

    auto comm = decide_identity(cat("GRP"), I(cat("GRP"), "mul(x,y) = mul(y,x)"));
    REQUIRE(comm.is_refuted());
    CHECK(verify_refutation(cat("GRP"), parse_term("mul(x,y)", signatures::group()),
                            parse_term("mul(y,x)", signatures::group()), comm));
    auto u = decide_identity(cat("U2"), I(cat("U2"), "f(f(x)) = f(x)"));
    CHECK(u.is_refuted());
    CHECK(u.model->size() == 3);
  }

  TEST_CASE("every refutation ships a countermodel") {
    for (auto const& n : {"S", "LZ", "RZ", "RB", "RS", "CS", "CT", "C2"}) {
      auto V     = cat(n);
      auto terms = enumerate_terms(V.signature(), {"x", "y"}, 2);
      for (std::size_t i = 0; i < terms.size(); i += 3) {
        for (std::size_t j = i + 1; j < terms.size(); j += 5) {
          auto v = decide_identity(V, terms[i], terms[j]);
          CHECK_FALSE(v.is_unknown());
          if (v.is_refuted()) {
            CHECK(verify_refutation(V, terms[i], terms[j], v));
          }
        }
      }
    }
  }

  TEST_CASE("normal forms") {
    auto V = cat("U1");
    CHECK(to_string(normal_form(V, parse_term("f(f(f(x)))", V.signature())), V.signature()) == "f(x)");
    auto S = cat("S");
    CHECK(normal_form(S, parse_term("mul(y,mul(x,y))", G)) == normal_form(S, parse_term("mul(x,y)", G)));
    auto T = cat("T");
    CHECK(normal_form(T, parse_term("x", G)) == normal_form(T, parse_term("mul(y,z)", G)));
  }

  TEST_CASE("term idempotency") {
    auto S = cat("S");
    CHECK(is_term_idempotent(S, parse_term("mul(x,mul(y,x))", G)).is_proved());
    CHECK(is_term_idempotent(cat("LZ"), parse_term("mul(y,x)", G)).is_proved());
    auto Gp = cat("GRP");
    CHECK(is_term_idempotent(Gp, parse_term("mul(x,y)", Gp.signature())).is_refuted());
    CHECK(is_term_idempotent(Gp, parse_term("mul(x,inv(x))", Gp.signature())).is_proved());
    CHECK(is_term_idempotent(cat("CS"), parse_term("mul(x,y)", G)).is_proved());
    CHECK(is_term_idempotent(cat("CS"), parse_term("x", G)).is_refuted());
  }

  TEST_CASE("generic varieties use one-step proofs and bounded search") {
    auto V = read_variety(kV5);
    CHECK(decide_identity(V, I(V, "mul(mul(x,x),mul(y,y)) = mul(y,y)")).is_proved());
    auto comm = decide_identity(V, I(V, "mul(x,y) = mul(y,x)"));
    REQUIRE(comm.is_refuted());
    CHECK(satisfies_all(*comm.model, V.base()));
    CHECK(decide_identity(V, I(V, "mul(x,x) = mul(y,y)"), Bounds{1, 6}).is_unknown());
  }

  TEST_CASE("asserted rewriting") {
    auto V = read_variety("variety I\nsignature\nop f 1\nrewrite f(f(x)) -> f(x)\n");
    CHECK(decide_identity(V, I(V, "f(f(f(x))) = f(x)")).is_proved());
    CHECK(decide_identity(V, I(V, "f(x) = x")).is_refuted());
    CHECK(V.base().size() == 1);
  }

  TEST_CASE(".var files round trip and reject bad input") {
    auto V = read_variety(kV5);
    CHECK(V.base().size() == 2);
    auto W = read_variety(write_variety(V));
    CHECK(W.name() == V.name());
    CHECK(W.base() == V.base());
    auto C = read_variety("variety MyS\nsignature\nop mul 2\ncatalog S\n");
    REQUIRE(C.catalog());
    CHECK(C.base().size() == 3);
    CHECK(read_variety(write_variety(cat("C3"))).catalog()->param == 3);
    CHECK_THROWS_AS(read_variety("variety X\nop mul 2\nidentity mul(x) = x\n"), Error);
    CHECK_THROWS_AS(read_variety("variety X\nop mul 2\nrewrite x -> mul(x,x)\n"), Error);
    CHECK_THROWS_AS(read_variety("variety X\ncatalog S\nrewrite mul(x,x) -> x\n"), Error);
    CHECK_THROWS_AS(read_variety("variety X\ncatalog Q\n"), Error);
    CHECK(load_variety(std::string(MPROD_SOURCE_DIR) + "/data/V5.var").base() == V.base());
  }
}
