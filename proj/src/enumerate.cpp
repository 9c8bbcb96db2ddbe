#include "mprod/enumerate.hpp"

#include <algorithm>
#include <map>

namespace mprod {

  namespace {
    // Token order for enumeration: variables by position in the caller's
    // list, then operations by declaration order.
    struct EnumerationOrder {
      std::map<std::string, std::size_t> rank;

      int compare(Term const& a, Term const& b) const {
        if (a.is_variable() || b.is_variable()) {
          if (a.is_variable() && b.is_variable()) {
            auto ra = rank.at(a.name());
            auto rb = rank.at(b.name());
            return ra < rb ? -1 : (ra > rb ? 1 : 0);
          }
          return a.is_variable() ? -1 : 1;
        }
        if (a.op() != b.op()) {
          return a.op() < b.op() ? -1 : 1;
        }
        for (std::size_t i = 0; i < a.args().size(); ++i) {
          if (int c = compare(a.args()[i], b.args()[i]); c != 0) {
            return c;
          }
        }
        return 0;
      }
    };

    // Appends to out every tuple of `arity` terms whose sizes sum to
    // `budget`, drawn from by_size.
    void tuples(std::vector<std::vector<Term>> const& by_size,
                unsigned                              arity,
                std::size_t                           budget,
                std::vector<Term>&                    prefix,
                std::vector<std::vector<Term>>&       out) {
      if (prefix.size() + 1 == arity) {
        for (auto const& t : by_size[budget]) {
          prefix.push_back(t);
          out.push_back(prefix);
          prefix.pop_back();
        }
        return;
      }
      for (std::size_t s = 0; s <= budget; ++s) {
        for (auto const& t : by_size[s]) {
          prefix.push_back(t);
          tuples(by_size, arity, budget - s, prefix, out);
          prefix.pop_back();
        }
      }
    }
  }  // namespace

  std::vector<Term> enumerate_terms(Signature const&                sig,
                                    std::vector<std::string> const& vars,
                                    std::size_t                     max_size) {
    EnumerationOrder order;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      order.rank.emplace(vars[i], i);
    }
    std::vector<std::vector<Term>> by_size(max_size + 1);
    for (auto const& v : vars) {
      by_size[0].push_back(Term::variable(v));
    }
    for (std::size_t s = 1; s <= max_size; ++s) {
      auto& level = by_size[s];
      for (OpIndex op = 0; op < sig.size(); ++op) {
        std::vector<std::vector<Term>> arg_lists;
        std::vector<Term>              prefix;
        tuples(by_size, sig.arity(op), s - 1, prefix, arg_lists);
        for (auto& args : arg_lists) {
          level.push_back(Term::apply(op, std::move(args)));
        }
      }
      std::sort(level.begin(), level.end(), [&](Term const& a, Term const& b) {
        return order.compare(a, b) < 0;
      });
    }
    std::vector<Term> out;
    for (auto& level : by_size) {
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::size_t count_terms(Signature const& sig,
                          std::size_t      num_vars,
                          std::size_t      max_size) {
    // exact[s] = number of terms of size exactly s
    std::vector<std::size_t> exact(max_size + 1, 0);
    exact[0] = num_vars;
    for (std::size_t s = 1; s <= max_size; ++s) {
      for (auto const& op : sig.operations()) {
        // ways[k][b]: tuples of length k with total size b
        std::vector<std::size_t> ways(s, 0);
        ways[0] = 1;
        for (unsigned k = 0; k < op.arity; ++k) {
          std::vector<std::size_t> next(s, 0);
          for (std::size_t b = 0; b < s; ++b) {
            for (std::size_t c = 0; b + c < s; ++c) {
              next[b + c] += ways[b] * exact[c];
            }
          }
          ways = std::move(next);
        }
        exact[s] += ways[s - 1];
      }
    }
    std::size_t total = 0;
    for (auto e : exact) {
      total += e;
    }
    return total;
  }

}  // namespace mprod
