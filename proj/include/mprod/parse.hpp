#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "signature.hpp"
#include "term.hpp"

namespace mprod {

  // term := ident | ident "(" term {"," term} ")"
  //
  // An identifier declared in the signature is an operation symbol and must
  // be followed by exactly arity arguments; any other identifier is a
  // variable. Whitespace is insignificant.
  Term parse_term(std::string_view text, Signature const& sig);

  // term "=" term
  Identity parse_identity(std::string_view text, Signature const& sig);

  // term "->" term, used for asserted rewrite rules.
  std::pair<Term, Term> parse_rule(std::string_view text, Signature const& sig);

  // Prefix rendering; parse_term(to_string(t, sig), sig) == t.
  std::string to_string(Term const& t, Signature const& sig);
  std::string to_string(Identity const& id, Signature const& sig);

}  // namespace mprod
