#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace mprod {

  // Union-find over {0..n-1} whose roots are always the least element of
  // their class.
  class DisjointSet {
   public:
    explicit DisjointSet(std::size_t n);

    std::size_t size() const noexcept {
      return parent_.size();
    }
    Element find(Element x);
    // Returns true when two distinct classes were merged.
    bool unite(Element a, Element b);

   private:
    std::vector<Element> parent_;
  };

  // An equivalence relation on {0..n-1} in canonical form: every element
  // maps to the least member of its block.
  class Partition {
   public:
    Partition() = default;
    // Identity relation on n points.
    static Partition discrete(std::size_t n);
    // All relation on n points.
    static Partition total(std::size_t n);
    static Partition from_blocks(std::size_t                              n,
                                 std::vector<std::vector<Element>> const& blocks);
    static Partition from_labels(std::vector<Element> const& labels);
    static Partition from(DisjointSet& ds);

    std::size_t universe_size() const noexcept {
      return rep_.size();
    }
    Element representative(Element x) const {
      return rep_.at(x);
    }
    std::vector<Element> const& representatives() const noexcept {
      return rep_;
    }
    bool related(Element a, Element b) const {
      return rep_.at(a) == rep_.at(b);
    }
    std::size_t num_blocks() const noexcept;

    // Blocks sorted by least member, each block ascending.
    std::vector<std::vector<Element>> blocks() const;
    // Position of x's block in blocks().
    std::size_t block_index(Element x) const;
    std::vector<std::size_t> block_indices() const;

    bool is_discrete() const noexcept {
      return num_blocks() == rep_.size();
    }
    bool is_total() const noexcept {
      return num_blocks() <= 1;
    }

    // Every block of this lies inside a block of that.
    bool refines(Partition const& that) const;

    auto operator<=>(Partition const&) const = default;

   private:
    explicit Partition(std::vector<Element> rep) : rep_(std::move(rep)) {}

    std::vector<Element> rep_;
  };

  Partition join(Partition const& p, Partition const& q);
  Partition meet(Partition const& p, Partition const& q);

  // {{a,e},{b,f}} with element names when the algebra has them.
  std::string to_string(Partition const& p, FiniteAlgebra const* A = nullptr);
  std::string block_to_string(std::vector<Element> const& block,
                              FiniteAlgebra const*        A = nullptr);

}  // namespace mprod
