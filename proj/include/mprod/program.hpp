#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "term.hpp"

namespace mprod {

  inline constexpr Element kUndefined = 0xFFFFFFFFu;

  // A term flattened into postfix form over numbered variable slots, for
  // repeated evaluation in tight loops.
  class TermProgram {
   public:
    // Every variable of t must appear in slots.
    TermProgram(Term const& t, std::vector<std::string> const& slots);

    std::size_t max_depth() const noexcept {
      return max_depth_;
    }

    Element run(FiniteAlgebra const&     A,
                std::span<Element const> values,
                std::vector<Element>&    stack) const {
      return run_with(
          [&A](OpIndex op, std::span<Element const> args) {
            return A.apply(op, args);
          },
          values,
          stack);
    }

    Element run(FiniteAlgebra const& A, std::span<Element const> values) const {
      std::vector<Element> stack;
      return run(A, values, stack);
    }

    // lookup(op, args) may return kUndefined, which then propagates.
    template <typename Lookup>
    Element run_with(Lookup&&                 lookup,
                     std::span<Element const> values,
                     std::vector<Element>&    stack) const {
      stack.clear();
      for (auto const& ins : code_) {
        if (ins.is_var) {
          stack.push_back(values[ins.index]);
          continue;
        }
        std::size_t base = stack.size() - ins.arity;
        Element     out  = kUndefined;
        bool        ok   = true;
        for (std::size_t i = base; i < stack.size(); ++i) {
          if (stack[i] == kUndefined) {
            ok = false;
            break;
          }
        }
        if (ok) {
          out = lookup(ins.index,
                       std::span<Element const>(stack.data() + base, ins.arity));
        }
        stack.resize(base);
        stack.push_back(out);
      }
      return stack.back();
    }

   private:
    struct Instruction {
      bool          is_var;
      std::uint32_t index;  // slot or operation
      std::uint32_t arity;
    };
    std::vector<Instruction> code_;
    std::size_t              max_depth_ = 0;
  };

}  // namespace mprod
