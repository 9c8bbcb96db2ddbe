#include "mprod/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mprod/error.hpp"

namespace mprod {

  bool is_congruence(FiniteAlgebra const& A, Partition const& pi) {
    if (pi.universe_size() != A.size()) {
      throw Error("partition size does not match the algebra");
    }
    // Compatibility with every basic translation suffices: related tuples
    // differ position by position through a chain of one-place changes.
    std::vector<Element> args;
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      auto k = A.signature().arity(op);
      args.resize(k);
      for (std::size_t pos = 0; pos < k; ++pos) {
        bool ok = for_each_tuple(A.size(), k, [&](std::span<Element const> t) {
          Element a = t[pos];
          Element b = pi.representative(a);
          if (a == b) {
            return true;
          }
          std::copy(t.begin(), t.end(), args.begin());
          Element va = A.apply(op, args);
          args[pos]  = b;
          return pi.related(va, A.apply(op, args));
        });
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  Partition congruence_generated(FiniteAlgebra const&            A,
                                 std::vector<ElementPair> const& pairs) {
    DisjointSet             ds(A.size());
    std::deque<ElementPair> queue;
    for (auto [a, b] : pairs) {
      if (a >= A.size() || b >= A.size()) {
        throw Error("element out of range in generating pair");
      }
      if (ds.unite(a, b)) {
        queue.emplace_back(a, b);
      }
    }
    std::vector<Element> lhs, rhs;
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (OpIndex op = 0; op < A.signature().size(); ++op) {
        auto k = A.signature().arity(op);
        lhs.resize(k);
        rhs.resize(k);
        for (std::size_t pos = 0; pos < k; ++pos) {
          for_each_tuple(A.size(), k - 1, [&](std::span<Element const> rest) {
            for (std::size_t i = 0, j = 0; i < k; ++i) {
              if (i == pos) {
                lhs[i] = a;
                rhs[i] = b;
              } else {
                lhs[i] = rhs[i] = rest[j++];
              }
            }
            Element u = A.apply(op, lhs);
            Element v = A.apply(op, rhs);
            if (ds.unite(u, v)) {
              queue.emplace_back(u, v);
            }
            return true;
          });
        }
      }
    }
    return Partition::from(ds);
  }

  std::vector<Partition> all_congruences(FiniteAlgebra const& A, std::size_t limit) {
    if (A.size() > limit) {
      throw Error("algebra '" + A.name() + "' has " + std::to_string(A.size())
                  + " elements; congruence enumeration is limited to "
                  + std::to_string(limit));
    }
    std::set<Partition> found;
    found.insert(Partition::discrete(A.size()));
    std::vector<Partition> principal;
    for (Element a = 0; a < A.size(); ++a) {
      for (Element b = a + 1; b < A.size(); ++b) {
        auto cg = congruence_generated(A, {{a, b}});
        if (found.insert(cg).second) {
          principal.push_back(cg);
        }
      }
    }
    // Every congruence is a join of principal ones; close under joining
    // with principal congruences until no new partition appears.
    std::vector<Partition> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Partition> next;
      for (auto const& c : frontier) {
        for (auto const& p : principal) {
          auto j = join(c, p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Partition> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](Partition const& x, Partition const& y) {
      if (x.num_blocks() != y.num_blocks()) {
        return x.num_blocks() > y.num_blocks();
      }
      return x < y;
    });
    return out;
  }

}  // namespace mprod
