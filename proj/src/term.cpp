#include "mprod/term.hpp"

#include <algorithm>

#include "mprod/error.hpp"

namespace mprod {

  namespace {
    std::size_t mix(std::size_t seed, std::size_t value) {
      return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    int token_compare(Term const& a, Term const& b) {
      if (a.is_variable() || b.is_variable()) {
        if (a.is_variable() && b.is_variable()) {
          return a.name().compare(b.name());
        }
        return a.is_variable() ? -1 : 1;
      }
      if (a.op() != b.op()) {
        return a.op() < b.op() ? -1 : 1;
      }
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (int c = token_compare(a.args()[i], b.args()[i]); c != 0) {
          return c;
        }
      }
      return 0;
    }

    bool match_into(Term const& p, Term const& q, Substitution& s) {
      if (p.is_variable()) {
        auto [it, inserted] = s.try_emplace(p.name(), q);
        return inserted || it->second == q;
      }
      if (q.is_variable() || p.op() != q.op()
          || p.args().size() != q.args().size()) {
        return false;
      }
      for (std::size_t i = 0; i < p.args().size(); ++i) {
        if (!match_into(p.args()[i], q.args()[i], s)) {
          return false;
        }
      }
      return true;
    }

    void collect_in_order(Term const& t, std::vector<std::string>& out) {
      if (t.is_variable()) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
          out.push_back(t.name());
        }
        return;
      }
      for (auto const& a : t.args()) {
        collect_in_order(a, out);
      }
    }
  }  // namespace

  Term Term::variable(std::string name) {
    auto node    = std::make_shared<Node>();
    node->is_var = true;
    node->hash   = mix(0x51ed270b27UL, std::hash<std::string>{}(name));
    node->name   = std::move(name);
    return Term(std::move(node));
  }

  Term Term::apply(OpIndex op, std::vector<Term> args) {
    auto node  = std::make_shared<Node>();
    node->op   = op;
    node->size = 1;
    node->hash = mix(0x2545f4914f6cdd1dULL, op);
    for (auto const& a : args) {
      node->size += a.size();
      node->hash = mix(node->hash, a.hash());
    }
    node->args = std::move(args);
    return Term(std::move(node));
  }

  bool operator==(Term const& a, Term const& b) {
    if (a.node_ == b.node_) {
      return true;
    }
    if (a.hash() != b.hash() || a.size() != b.size()
        || a.is_variable() != b.is_variable()) {
      return false;
    }
    if (a.is_variable()) {
      return a.name() == b.name();
    }
    if (a.op() != b.op() || a.args().size() != b.args().size()) {
      return false;
    }
    return std::equal(
        a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
  }

  bool term_less(Term const& a, Term const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return token_compare(a, b) < 0;
  }

  Term substitute(Term const& t, Substitution const& s) {
    if (s.empty()) {
      return t;
    }
    if (t.is_variable()) {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(substitute(a, s));
    }
    return Term::apply(t.op(), std::move(args));
  }

  std::optional<Substitution> match_instance(Term const& p, Term const& q) {
    Substitution s;
    if (!match_into(p, q, s)) {
      return std::nullopt;
    }
    return s;
  }

  std::set<std::string> variables_of(Term const& t) {
    auto in_order = variables_in_order(t);
    return {in_order.begin(), in_order.end()};
  }

  std::vector<std::string> variables_in_order(Term const& t) {
    std::vector<std::string> out;
    collect_in_order(t, out);
    return out;
  }

  std::string const& first_variable(Term const& t) {
    Term const* cur = &t;
    while (!cur->is_variable()) {
      cur = &cur->args().front();
    }
    return cur->name();
  }

  std::string const& last_variable(Term const& t) {
    Term const* cur = &t;
    while (!cur->is_variable()) {
      cur = &cur->args().back();
    }
    return cur->name();
  }

  bool conforms(Term const& t, Signature const& sig) {
    if (t.is_variable()) {
      return sig.find(t.name()) == std::nullopt;
    }
    if (t.op() >= sig.size() || sig.arity(t.op()) != t.args().size()) {
      return false;
    }
    return std::all_of(t.args().begin(), t.args().end(), [&](Term const& a) {
      return conforms(a, sig);
    });
  }

  Term make_term(Signature const&   sig,
                 std::string const& symbol,
                 std::vector<Term>  args) {
    auto op = sig.find(symbol);
    if (!op) {
      throw Error("unknown operation symbol '" + symbol + "'");
    }
    if (sig.arity(*op) != args.size()) {
      throw Error("operation '" + symbol + "' expects "
                  + std::to_string(sig.arity(*op)) + " arguments, got "
                  + std::to_string(args.size()));
    }
    return Term::apply(*op, std::move(args));
  }

  Term diagonal(Signature const& sig, OpIndex op, Term const& t) {
    return Term::apply(op, std::vector<Term>(sig.arity(op), t));
  }

  std::size_t node_count(Term const& t) {
    if (t.is_variable()) {
      return 1;
    }
    std::size_t n = 1;
    for (auto const& a : t.args()) {
      n += node_count(a);
    }
    return n;
  }

  std::string canonical_variable(std::size_t i) {
    return "x" + std::to_string(i + 1);
  }

  std::vector<std::string> Identity::variables() const {
    std::vector<std::string> out;
    collect_in_order(lhs_, out);
    collect_in_order(rhs_, out);
    return out;
  }

  Identity Identity::canonical() const {
    auto         vars = variables();
    Substitution rename;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      rename.emplace(vars[i], Term::variable(canonical_variable(i)));
    }
    return Identity(substitute(lhs_, rename), substitute(rhs_, rename));
  }

  bool operator==(Identity const& a, Identity const& b) {
    auto ca = a.canonical();
    auto cb = b.canonical();
    return ca.lhs_ == cb.lhs_ && ca.rhs_ == cb.rhs_;
  }

  std::size_t IdentityHash::operator()(Identity const& id) const noexcept {
    auto c = id.canonical();
    return mix(c.lhs().hash(), c.rhs().hash());
  }

}  // namespace mprod
