#include "mprod/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mprod/congruence.hpp"
#include "mprod/error.hpp"
#include "mprod/partition.hpp"
#include "mprod/program.hpp"

namespace mprod {

  namespace {
    std::size_t power(std::size_t base, unsigned exp) {
      std::size_t r = 1;
      for (unsigned i = 0; i < exp; ++i) {
        r *= base;
      }
      return r;
    }
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(std::string                       name,
                               Signature                         sig,
                               std::size_t                       size,
                               std::vector<std::vector<Element>> tables,
                               std::vector<std::string>          names)
      : name_(std::move(name)),
        sig_(std::move(sig)),
        size_(size),
        tables_(std::move(tables)),
        names_(std::move(names)) {
    if (size_ == 0) {
      throw Error("algebra '" + name_ + "' must have at least one element");
    }
    if (tables_.size() != sig_.size()) {
      throw Error("algebra '" + name_ + "' has " + std::to_string(tables_.size())
                  + " tables for " + std::to_string(sig_.size())
                  + " operations");
    }
    for (OpIndex op = 0; op < sig_.size(); ++op) {
      auto expected = power(size_, sig_.arity(op));
      if (tables_[op].size() != expected) {
        throw Error("table of '" + sig_.symbol(op) + "' has "
                    + std::to_string(tables_[op].size()) + " entries, expected "
                    + std::to_string(expected));
      }
      for (auto v : tables_[op]) {
        if (v >= size_) {
          throw Error("table of '" + sig_.symbol(op) + "' has entry "
                      + std::to_string(v) + " outside the universe");
        }
      }
    }
    if (!names_.empty()) {
      if (names_.size() != size_) {
        throw Error("algebra '" + name_ + "' declares "
                    + std::to_string(names_.size()) + " names for "
                    + std::to_string(size_) + " elements");
      }
      std::set<std::string> distinct(names_.begin(), names_.end());
      if (distinct.size() != names_.size()) {
        throw Error("algebra '" + name_ + "' has duplicate element names");
      }
    }
  }

  std::string FiniteAlgebra::element_name(Element e) const {
    return names_.empty() ? std::to_string(e) : names_.at(e);
  }

  std::optional<Element> FiniteAlgebra::find_element(std::string const& label) const {
    for (Element e = 0; e < names_.size(); ++e) {
      if (names_[e] == label) {
        return e;
      }
    }
    if (!label.empty()
        && std::all_of(label.begin(), label.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      auto v = std::stoul(label);
      if (v < size_) {
        return static_cast<Element>(v);
      }
    }
    return std::nullopt;
  }

  Element evaluate(FiniteAlgebra const& A, Term const& t, Assignment const& asg) {
    if (t.is_variable()) {
      auto it = asg.find(t.name());
      if (it == asg.end()) {
        throw Error("unassigned variable '" + t.name() + "'");
      }
      if (it->second >= A.size()) {
        throw Error("variable '" + t.name() + "' assigned outside the universe");
      }
      return it->second;
    }
    if (t.op() >= A.signature().size()
        || A.signature().arity(t.op()) != t.args().size()) {
      throw Error("term does not match the signature of '" + A.name() + "'");
    }
    std::vector<Element> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(evaluate(A, a, asg));
    }
    return A.apply(t.op(), args);
  }

  IdentityCheck satisfies_identity(FiniteAlgebra const& A, Identity const& id) {
    if (!conforms(id.lhs(), A.signature()) || !conforms(id.rhs(), A.signature())) {
      throw Error("identity does not match the signature of '" + A.name() + "'");
    }
    auto                 vars = id.variables();
    TermProgram          lhs(id.lhs(), vars);
    TermProgram          rhs(id.rhs(), vars);
    std::vector<Element> stack;
    IdentityCheck        result;
    for_each_tuple(A.size(), vars.size(), [&](std::span<Element const> values) {
      if (lhs.run(A, values, stack) == rhs.run(A, values, stack)) {
        return true;
      }
      Assignment w;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        w.emplace(vars[i], values[i]);
      }
      result.holds   = false;
      result.witness = std::move(w);
      return false;
    });
    return result;
  }

  bool satisfies_all(FiniteAlgebra const& A, std::vector<Identity> const& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](Identity const& id) {
      return satisfies_identity(A, id).holds;
    });
  }

  std::vector<Element> idempotent_elements(FiniteAlgebra const& A) {
    std::vector<Element> out;
    std::vector<Element> args;
    for (Element c = 0; c < A.size(); ++c) {
      bool idem = true;
      for (OpIndex op = 0; op < A.signature().size() && idem; ++op) {
        args.assign(A.signature().arity(op), c);
        idem = A.apply(op, args) == c;
      }
      if (idem) {
        out.push_back(c);
      }
    }
    return out;
  }

  std::vector<Element> subuniverse_generated(FiniteAlgebra const&     A,
                                             std::span<Element const> gens) {
    std::vector<bool>    member(A.size(), false);
    std::vector<Element> elems;
    for (auto g : gens) {
      if (g >= A.size()) {
        throw Error("generator outside the universe");
      }
      if (!member[g]) {
        member[g] = true;
        elems.push_back(g);
      }
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (OpIndex op = 0; op < A.signature().size(); ++op) {
        auto               k = A.signature().arity(op);
        std::vector<Element> snapshot = elems;
        for_each_tuple(snapshot.size(), k, [&](std::span<Element const> idx) {
          std::vector<Element> args(k);
          for (std::size_t i = 0; i < k; ++i) {
            args[i] = snapshot[idx[i]];
          }
          Element v = A.apply(op, args);
          if (!member[v]) {
            member[v] = true;
            elems.push_back(v);
            grew = true;
          }
          return true;
        });
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  bool is_subuniverse(FiniteAlgebra const& A, std::span<Element const> subset) {
    if (subset.empty()) {
      return false;
    }
    std::vector<bool> member(A.size(), false);
    for (auto e : subset) {
      member.at(e) = true;
    }
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      auto                 k = A.signature().arity(op);
      std::vector<Element> args(k);
      bool closed = for_each_tuple(subset.size(), k, [&](std::span<Element const> idx) {
        for (std::size_t i = 0; i < k; ++i) {
          args[i] = subset[idx[i]];
        }
        return static_cast<bool>(member[A.apply(op, args)]);
      });
      if (!closed) {
        return false;
      }
    }
    return true;
  }

  FiniteAlgebra subalgebra(FiniteAlgebra const& A, std::span<Element const> subset) {
    std::vector<Element> elems(subset.begin(), subset.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_subuniverse(A, elems)) {
      throw Error("subset is not a subuniverse of '" + A.name() + "'");
    }
    std::vector<Element> index(A.size(), kUndefined);
    for (Element i = 0; i < elems.size(); ++i) {
      index[elems[i]] = i;
    }
    std::vector<std::vector<Element>> tables;
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      auto                 k = A.signature().arity(op);
      std::vector<Element> tab;
      std::vector<Element> args(k);
      for_each_tuple(elems.size(), k, [&](std::span<Element const> idx) {
        for (std::size_t i = 0; i < k; ++i) {
          args[i] = elems[idx[i]];
        }
        tab.push_back(index[A.apply(op, args)]);
        return true;
      });
      tables.push_back(std::move(tab));
    }
    std::vector<std::string> names;
    if (A.has_names()) {
      for (auto e : elems) {
        names.push_back(A.names()[e]);
      }
    }
    return FiniteAlgebra(A.name() + "|sub", A.signature(), elems.size(),
                         std::move(tables), std::move(names));
  }

  FiniteAlgebra quotient_algebra(FiniteAlgebra const& A, Partition const& theta) {
    if (theta.universe_size() != A.size()) {
      throw Error("partition size does not match the algebra");
    }
    if (!is_congruence(A, theta)) {
      throw Error("partition " + to_string(theta, &A)
                  + " is not a congruence of '" + A.name() + "'");
    }
    auto blocks = theta.blocks();
    auto index  = theta.block_indices();
    std::vector<std::vector<Element>> tables;
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      auto                 k = A.signature().arity(op);
      std::vector<Element> tab;
      std::vector<Element> args(k);
      for_each_tuple(blocks.size(), k, [&](std::span<Element const> idx) {
        for (std::size_t i = 0; i < k; ++i) {
          args[i] = blocks[idx[i]].front();
        }
        tab.push_back(static_cast<Element>(index[A.apply(op, args)]));
        return true;
      });
      tables.push_back(std::move(tab));
    }
    std::vector<std::string> names;
    for (auto const& b : blocks) {
      names.push_back(block_to_string(b, &A));
    }
    return FiniteAlgebra(A.name() + "/" + to_string(theta, &A), A.signature(),
                         blocks.size(), std::move(tables), std::move(names));
  }

  FiniteAlgebra direct_product(FiniteAlgebra const& A, FiniteAlgebra const& B) {
    if (!(A.signature() == B.signature())) {
      throw Error("direct product of algebras with different signatures");
    }
    std::size_t                       nb = B.size();
    std::vector<std::vector<Element>> tables;
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      auto                 k = A.signature().arity(op);
      std::vector<Element> tab;
      std::vector<Element> left(k), right(k);
      for_each_tuple(A.size() * nb, k, [&](std::span<Element const> pairs) {
        for (std::size_t i = 0; i < k; ++i) {
          left[i]  = static_cast<Element>(pairs[i] / nb);
          right[i] = static_cast<Element>(pairs[i] % nb);
        }
        tab.push_back(static_cast<Element>(A.apply(op, left) * nb + B.apply(op, right)));
        return true;
      });
      tables.push_back(std::move(tab));
    }
    std::vector<std::string> names;
    if (A.has_names() || B.has_names()) {
      for (Element i = 0; i < A.size(); ++i) {
        for (Element j = 0; j < nb; ++j) {
          names.push_back("(" + A.element_name(i) + "," + B.element_name(j) + ")");
        }
      }
    }
    return FiniteAlgebra(A.name() + "x" + B.name(), A.signature(), A.size() * nb,
                         std::move(tables), std::move(names));
  }

  std::string render_tables(FiniteAlgebra const& A) {
    std::ostringstream out;
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      auto k = A.signature().arity(op);
      out << "op " << A.signature().symbol(op) << ' ' << k << '\n';
      auto tab = A.table(op);
      for (std::size_t i = 0; i < tab.size(); ++i) {
        out << A.element_name(tab[i]);
        out << ((i + 1) % A.size() == 0 ? '\n' : ' ');
      }
    }
    return out.str();
  }

}  // namespace mprod
