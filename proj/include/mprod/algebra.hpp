#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signature.hpp"
#include "term.hpp"

namespace mprod {

  using Element    = std::uint32_t;
  using Assignment = std::map<std::string, Element>;

  class Partition;

  // A finite algebra given by total operation tables over {0, ..., n-1}.
  //
  // Each table is stored row-major with the last argument varying fastest,
  // so the entry for (a_1, ..., a_k) lives at a_1 n^(k-1) + ... + a_k.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(std::string                       name,
                  Signature                         sig,
                  std::size_t                       size,
                  std::vector<std::vector<Element>> tables,
                  std::vector<std::string>          names = {});

    std::string const& name() const noexcept {
      return name_;
    }
    Signature const& signature() const noexcept {
      return sig_;
    }
    std::size_t size() const noexcept {
      return size_;
    }
    bool has_names() const noexcept {
      return !names_.empty();
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    // Display label: the declared name, or the index.
    std::string element_name(Element e) const;
    std::optional<Element> find_element(std::string const& label) const;

    std::span<Element const> table(OpIndex op) const {
      return tables_.at(op);
    }

    Element apply(OpIndex op, std::span<Element const> args) const {
      auto const& tab = tables_[op];
      std::size_t idx = 0;
      for (auto a : args) {
        idx = idx * size_ + a;
      }
      return tab[idx];
    }

    Element apply(OpIndex op, Element a) const {
      return tables_[op][a];
    }
    Element apply(OpIndex op, Element a, Element b) const {
      return tables_[op][a * size_ + b];
    }

    bool operator==(FiniteAlgebra const& that) const {
      return sig_ == that.sig_ && size_ == that.size_ && tables_ == that.tables_;
    }

   private:
    std::string                       name_;
    Signature                         sig_;
    std::size_t                       size_;
    std::vector<std::vector<Element>> tables_;
    std::vector<std::string>          names_;
  };

  // Calls fn for every tuple in {0..n-1}^k in odometer order (last position
  // fastest) until fn returns false. Returns false iff stopped early.
  template <typename Fn>
  bool for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<Element> tuple(k, 0);
    if (n == 0 && k > 0) {
      return true;
    }
    while (true) {
      if (!fn(std::span<Element const>(tuple))) {
        return false;
      }
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++tuple[i] < n) {
          break;
        }
        tuple[i] = 0;
        if (i == 0) {
          return true;
        }
      }
      if (k == 0) {
        return true;
      }
    }
  }

  Element evaluate(FiniteAlgebra const& A, Term const& t, Assignment const& asg);

  struct IdentityCheck {
    bool                      holds = true;
    std::optional<Assignment> witness;
  };

  // Exhaustive check over assignments of the identity's own variables in
  // odometer order; the witness is the first failing assignment.
  IdentityCheck satisfies_identity(FiniteAlgebra const& A, Identity const& id);

  bool satisfies_all(FiniteAlgebra const& A, std::vector<Identity> const& ids);

  // Elements c with omega(c, ..., c) = c for every operation.
  std::vector<Element> idempotent_elements(FiniteAlgebra const& A);

  std::vector<Element> subuniverse_generated(FiniteAlgebra const&     A,
                                             std::span<Element const> gens);

  bool is_subuniverse(FiniteAlgebra const& A, std::span<Element const> subset);

  // The subalgebra on a subuniverse; elements renumbered in ascending order.
  FiniteAlgebra subalgebra(FiniteAlgebra const& A, std::span<Element const> subset);

  // Blocks become elements in ascending order of least member. Throws if
  // theta is not a congruence of A.
  FiniteAlgebra quotient_algebra(FiniteAlgebra const& A, Partition const& theta);

  // Pair (i, j) is encoded as i * |B| + j.
  FiniteAlgebra direct_product(FiniteAlgebra const& A, FiniteAlgebra const& B);

  // Renders the operation tables in the .alg layout with display labels.
  std::string render_tables(FiniteAlgebra const& A);

}  // namespace mprod
