#include <doctest.h>

#include "mprod/algebra_io.hpp"
#include "mprod/congruence.hpp"
#include "mprod/error.hpp"
#include "support.hpp"

using namespace mprod;

TEST_SUITE("congruence") {
  TEST_CASE("partitions are canonical by least member") {
    auto p = Partition::from_blocks(5, {{3, 1}, {0}, {4, 2}});
    CHECK(p.representatives() == std::vector<Element>{0, 1, 2, 1, 2});
    CHECK(p.num_blocks() == 3);
    CHECK(p.blocks() == std::vector<std::vector<Element>>{{0}, {1, 3}, {2, 4}});
    CHECK(p == Partition::from_labels({7, 3, 9, 3, 9}));
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), Error);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), Error);
  }

  TEST_CASE("join and meet against the refinement order") {
    auto parts = support::all_partitions(4);
    CHECK(parts.size() == 15);
    for (auto const& p : parts) {
      for (auto const& q : parts) {
        auto j = join(p, q);
        auto m = meet(p, q);
        CHECK(p.refines(j));
        CHECK(q.refines(j));
        CHECK(m.refines(p));
        CHECK(m.refines(q));
        for (auto const& r : parts) {
          if (p.refines(r) && q.refines(r)) {
            CHECK(j.refines(r));
          }
          if (r.refines(p) && r.refines(q)) {
            CHECK(r.refines(m));
          }
        }
      }
    }
  }

  TEST_CASE("is_congruence agrees with the tuple-pair oracle") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      auto A = support::random_algebra(signatures::group(), 4, rng);
      for (auto const& p : support::all_partitions(4)) {
        CHECK(is_congruence(A, p) == support::congruence_oracle(A, p));
      }
    }
  }

  TEST_CASE("generated congruence is the least congruence containing the pairs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 2 + trial % 4;
      auto        A = support::random_algebra(signatures::groupoid(), n, rng);
      std::vector<ElementPair>               pairs;
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      for (int k = trial % 3; k > 0; --k) {
        pairs.emplace_back(pick(rng), pick(rng));
      }
      Partition expected = Partition::total(n);
      for (auto const& p : support::all_partitions(n)) {
        bool contains = std::all_of(pairs.begin(), pairs.end(), [&](auto const& pr) {
          return p.related(pr.first, pr.second);
        });
        if (contains && support::congruence_oracle(A, p)) {
          expected = meet(expected, p);
        }
      }
      CHECK(congruence_generated(A, pairs) == expected);
    }
  }

  TEST_CASE("all_congruences lists exactly the congruences") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      auto A    = support::random_algebra(signatures::groupoid(), 4, rng);
      auto cons = all_congruences(A);
      std::vector<Partition> expected;
      for (auto const& p : support::all_partitions(4)) {
        if (support::congruence_oracle(A, p)) {
          expected.push_back(p);
        }
      }
      std::sort(expected.begin(), expected.end());
      auto sorted = cons;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == expected);
      CHECK(cons.front().is_discrete());
      CHECK(cons.back().is_total());
    }
    CHECK_THROWS_AS(all_congruences(support::random_algebra(signatures::groupoid(), 9, rng)), Error);
  }

  TEST_CASE("congruences of the four-element groupoid") {
    auto A    = builtin::counterexample_algebra();
    auto cons = all_congruences(A);
    CHECK(cons.size() == 6);
    auto theta = Partition::from_blocks(4, {{0}, {2}, {1, 3}});
    CHECK(std::find(cons.begin(), cons.end(), theta) != cons.end());
    CHECK(to_string(theta, &A) == "{{a},{e,f},{b}}");
  }
}
