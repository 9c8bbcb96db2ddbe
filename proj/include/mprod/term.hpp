#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "signature.hpp"

namespace mprod {

  // Immutable first-order term: a variable or an operation applied to
  // children. Subterms are shared, so copies are cheap.
  class Term {
   public:
    static Term variable(std::string name);
    static Term apply(OpIndex op, std::vector<Term> args);

    bool is_variable() const noexcept {
      return node_->is_var;
    }
    // Only meaningful for variables.
    std::string const& name() const {
      return node_->name;
    }
    // Only meaningful for applications.
    OpIndex op() const noexcept {
      return node_->op;
    }
    std::span<Term const> args() const noexcept {
      return node_->args;
    }
    Term const& arg(std::size_t i) const {
      return node_->args.at(i);
    }

    // Number of application nodes; variables have size 0.
    std::size_t size() const noexcept {
      return node_->size;
    }
    std::size_t hash() const noexcept {
      return node_->hash;
    }

    friend bool operator==(Term const& a, Term const& b);

   private:
    struct Node {
      bool              is_var = false;
      std::string       name;
      OpIndex           op = 0;
      std::vector<Term> args;
      std::size_t       size = 0;
      std::size_t       hash = 0;
    };

    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

    std::shared_ptr<Node const> node_;
  };

  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept {
      return t.hash();
    }
  };

  // Total order: size first, then preorder traversal where variables
  // precede applications, variables compare by name and applications by
  // operation index.
  bool term_less(Term const& a, Term const& b);

  struct TermLess {
    bool operator()(Term const& a, Term const& b) const {
      return term_less(a, b);
    }
  };

  using Substitution = std::map<std::string, Term>;

  // Simultaneous replacement; unmapped variables are left alone.
  Term substitute(Term const& t, Substitution const& s);

  // The unique s with substitute(p, s) == q, if p precedes q in the
  // instance preorder.
  std::optional<Substitution> match_instance(Term const& p, Term const& q);

  std::set<std::string> variables_of(Term const& t);

  // Variables in order of first occurrence (preorder).
  std::vector<std::string> variables_in_order(Term const& t);

  // Leftmost and rightmost variable in preorder.
  std::string const& first_variable(Term const& t);
  std::string const& last_variable(Term const& t);

  // Checks that every application matches the signature.
  bool conforms(Term const& t, Signature const& sig);

  // Checked construction by symbol name.
  Term make_term(Signature const& sig,
                 std::string const& symbol,
                 std::vector<Term>  args);

  // Applies every operation symbol to copies of t: omega(t,...,t).
  Term diagonal(Signature const& sig, OpIndex op, Term const& t);

  // Number of nodes of each kind: variables + applications.
  std::size_t node_count(Term const& t);

  class Identity {
   public:
    Identity(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    Term const& lhs() const noexcept {
      return lhs_;
    }
    Term const& rhs() const noexcept {
      return rhs_;
    }

    bool is_trivial() const {
      return lhs_ == rhs_;
    }

    // Variables of lhs then rhs, in first-occurrence order.
    std::vector<std::string> variables() const;

    // Variables renamed x1, x2, ... in first-occurrence order.
    Identity canonical() const;

    // Alpha-equivalence: equal canonical forms.
    friend bool operator==(Identity const& a, Identity const& b);

   private:
    Term lhs_;
    Term rhs_;
  };

  struct IdentityHash {
    std::size_t operator()(Identity const& id) const noexcept;
  };

  // Name of the i-th canonical variable (0-based): x1, x2, ...
  std::string canonical_variable(std::size_t i);

}  // namespace mprod

template <>
struct std::hash<mprod::Term> {
  std::size_t operator()(mprod::Term const& t) const noexcept {
    return t.hash();
  }
};
