#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mprod/algebra.hpp"
#include "mprod/parse.hpp"
#include "mprod/partition.hpp"
#include "mprod/signature.hpp"

namespace support {

  using namespace mprod;

  inline FiniteAlgebra random_algebra(Signature const& sig,
                                      std::size_t      n,
                                      std::mt19937&    rng,
                                      std::string      name = "R") {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    std::vector<std::vector<Element>>      tables;
    for (OpIndex op = 0; op < sig.size(); ++op) {
      std::size_t cells = 1;
      for (unsigned i = 0; i < sig.arity(op); ++i) {
        cells *= n;
      }
      std::vector<Element> tab(cells);
      for (auto& e : tab) {
        e = pick(rng);
      }
      tables.push_back(std::move(tab));
    }
    return FiniteAlgebra(std::move(name), sig, n, std::move(tables));
  }

  // Every partition of {0..n-1}, from restricted growth strings.
  inline std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<Element>   rgs(n, 0);
    std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element max) {
      if (i == n) {
        out.push_back(Partition::from_labels(rgs));
        return;
      }
      for (Element v = 0; v <= max + 1; ++v) {
        rgs[i] = v;
        rec(i + 1, std::max(max, v));
      }
    };
    if (n > 0) {
      rgs[0] = 0;
      rec(1, 0);
    }
    return out;
  }

  // Compatibility checked on every pair of componentwise related tuples.
  inline bool congruence_oracle(FiniteAlgebra const& A, Partition const& p) {
    std::size_t n = A.size();
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      unsigned k  = A.signature().arity(op);
      bool     ok = for_each_tuple(n, 2 * k, [&](std::span<Element const> t) {
        for (unsigned i = 0; i < k; ++i) {
          if (!p.related(t[i], t[k + i])) {
            return true;
          }
        }
        return p.related(A.apply(op, t.subspan(0, k)), A.apply(op, t.subspan(k, k)));
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  // Inflates a random W-model Q: each idempotent element of Q becomes a
  // random V-model, every other element a singleton; products across
  // blocks land anywhere in the block Q prescribes. The block partition
  // is a congruence with quotient Q, so the result lies in V o W.
  inline FiniteAlgebra random_member(std::vector<FiniteAlgebra> const& inner,
                                     std::vector<FiniteAlgebra> const& outer,
                                     std::size_t                       max_size,
                                     std::mt19937&                     rng) {
    std::vector<FiniteAlgebra const*> qs;
    for (auto const& Q : outer) {
      if (Q.size() <= max_size) {
        qs.push_back(&Q);
      }
    }
    FiniteAlgebra const& Q = *qs[std::uniform_int_distribution<std::size_t>(0, qs.size() - 1)(rng)];
    auto idem = idempotent_elements(Q);

    std::vector<FiniteAlgebra const*> blocks(Q.size(), nullptr);
    std::vector<std::size_t>          offset(Q.size()), width(Q.size(), 1);
    std::size_t                       used = 0;
    for (Element q = 0; q < Q.size(); ++q) {
      offset[q]          = used;
      std::size_t budget = max_size - used - (Q.size() - q - 1);
      if (std::find(idem.begin(), idem.end(), q) != idem.end()) {
        std::vector<FiniteAlgebra const*> fit;
        for (auto const& B : inner) {
          if (B.size() <= budget) {
            fit.push_back(&B);
          }
        }
        blocks[q] = fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
        width[q]  = blocks[q]->size();
      }
      used += width[q];
    }

    Signature const&                  sig = Q.signature();
    std::vector<Element>              block_of(used), local(used);
    for (Element q = 0; q < Q.size(); ++q) {
      for (std::size_t i = 0; i < width[q]; ++i) {
        block_of[offset[q] + i] = q;
        local[offset[q] + i]    = static_cast<Element>(i);
      }
    }
    std::vector<std::vector<Element>> tables;
    for (OpIndex op = 0; op < sig.size(); ++op) {
      std::vector<Element> tab;
      for_each_tuple(used, sig.arity(op), [&](std::span<Element const> args) {
        std::vector<Element> qargs, largs;
        for (auto a : args) {
          qargs.push_back(block_of[a]);
          largs.push_back(local[a]);
        }
        Element target = Q.apply(op, qargs);
        bool    inside = std::all_of(qargs.begin(), qargs.end(), [&](Element q) {
          return q == target;
        });
        if (inside && blocks[target]) {
          tab.push_back(static_cast<Element>(offset[target] + blocks[target]->apply(op, largs)));
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, width[target] - 1);
          tab.push_back(static_cast<Element>(offset[target] + pick(rng)));
        }
        return true;
      });
      tables.push_back(std::move(tab));
    }
    return FiniteAlgebra("M", sig, used, std::move(tables));
  }

}  // namespace support
