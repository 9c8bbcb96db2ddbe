#include "mprod/program.hpp"

#include <algorithm>

#include "mprod/error.hpp"

namespace mprod {

  namespace {
    struct Compiler {
      std::vector<std::string> const& slots;

      std::size_t emit(Term const& t, auto& code) {
        if (t.is_variable()) {
          auto it = std::find(slots.begin(), slots.end(), t.name());
          if (it == slots.end()) {
            throw Error("unassigned variable '" + t.name() + "'");
          }
          code.push_back({true, static_cast<std::uint32_t>(it - slots.begin()), 0});
          return 1;
        }
        std::size_t depth = 0;
        std::size_t i     = 0;
        for (auto const& a : t.args()) {
          depth = std::max(depth, i + emit(a, code));
          ++i;
        }
        code.push_back({false,
                        static_cast<std::uint32_t>(t.op()),
                        static_cast<std::uint32_t>(t.args().size())});
        return std::max<std::size_t>(depth, 1);
      }
    };
  }  // namespace

  TermProgram::TermProgram(Term const& t, std::vector<std::string> const& slots) {
    Compiler c{slots};
    max_depth_ = c.emit(t, code_);
  }

}  // namespace mprod
