#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mprod {

  using OpIndex = std::uint32_t;

  struct Operation {
    std::string symbol;
    unsigned    arity;

    bool operator==(Operation const&) const = default;
  };

  // A finitary similarity type without nullary symbols.
  //
  // Operations keep their declaration order; that order fixes operation
  // indices inside terms and the order used by term enumeration.
  class Signature {
   public:
    Signature() = default;
    Signature(std::string name, std::vector<Operation> ops);

    std::string const& name() const noexcept {
      return name_;
    }
    std::vector<Operation> const& operations() const noexcept {
      return ops_;
    }
    std::size_t size() const noexcept {
      return ops_.size();
    }
    Operation const& operator[](OpIndex i) const {
      return ops_.at(i);
    }
    unsigned arity(OpIndex i) const {
      return ops_.at(i).arity;
    }
    std::string const& symbol(OpIndex i) const {
      return ops_.at(i).symbol;
    }

    std::optional<OpIndex> find(std::string_view symbol) const;

    // True when some operation has arity at least two.
    bool is_plural() const noexcept;
    unsigned max_arity() const noexcept;

    // Two signatures are interchangeable when their operation lists agree;
    // the display name is not part of the type.
    bool operator==(Signature const& that) const {
      return ops_ == that.ops_;
    }

   private:
    std::string            name_;
    std::vector<Operation> ops_;
  };

  bool is_identifier(std::string_view text) noexcept;

  namespace signatures {
    // {mul/2}
    Signature groupoid();
    // {f/1}
    Signature monounary();
    // {mul/2, inv/1}
    Signature group();
  }  // namespace signatures

}  // namespace mprod
