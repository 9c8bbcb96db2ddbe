#include "mprod/signature.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mprod/error.hpp"

namespace mprod {

  bool is_identifier(std::string_view text) noexcept {
    if (text.empty()) {
      return false;
    }
    auto head = static_cast<unsigned char>(text.front());
    if (!(std::isalpha(head) || head == '_')) {
      return false;
    }
    return std::all_of(text.begin() + 1, text.end(), [](char c) {
      auto u = static_cast<unsigned char>(c);
      return std::isalnum(u) || u == '_';
    });
  }

  namespace {
    // x1, x2, ... are the canonical variable names and leading underscores
    // mark catalog placeholders; neither may name an operation.
    bool is_reserved(std::string_view symbol) {
      if (symbol.front() == '_') {
        return true;
      }
      if (symbol.size() >= 2 && symbol.front() == 'x') {
        return std::all_of(symbol.begin() + 1, symbol.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        });
      }
      return false;
    }
  }  // namespace

  Signature::Signature(std::string name, std::vector<Operation> ops)
      : name_(std::move(name)), ops_(std::move(ops)) {
    std::set<std::string> seen;
    for (auto const& op : ops_) {
      if (!is_identifier(op.symbol)) {
        throw Error("invalid operation symbol '" + op.symbol + "'");
      }
      if (is_reserved(op.symbol)) {
        throw Error("operation symbol '" + op.symbol + "' is reserved");
      }
      if (op.arity == 0) {
        throw Error("nullary operation '" + op.symbol
                    + "' is not supported; use a constant unary operation");
      }
      if (!seen.insert(op.symbol).second) {
        throw Error("duplicate operation symbol '" + op.symbol + "'");
      }
    }
  }

  std::optional<OpIndex> Signature::find(std::string_view symbol) const {
    for (OpIndex i = 0; i < ops_.size(); ++i) {
      if (ops_[i].symbol == symbol) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool Signature::is_plural() const noexcept {
    return std::any_of(
        ops_.begin(), ops_.end(), [](auto const& op) { return op.arity >= 2; });
  }

  unsigned Signature::max_arity() const noexcept {
    unsigned result = 0;
    for (auto const& op : ops_) {
      result = std::max(result, op.arity);
    }
    return result;
  }

  namespace signatures {
    Signature groupoid() {
      return Signature("groupoid", {{"mul", 2}});
    }
    Signature monounary() {
      return Signature("monounary", {{"f", 1}});
    }
    Signature group() {
      return Signature("group", {{"mul", 2}, {"inv", 1}});
    }
  }  // namespace signatures

}  // namespace mprod
