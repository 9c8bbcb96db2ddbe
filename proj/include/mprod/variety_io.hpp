#pragma once

#include <string>
#include <string_view>

#include "variety.hpp"

namespace mprod {

  // .var format, one directive per line, '#' starts a comment:
  //
  //   variety <name>
  //   signature [<name>]        (optional marker)
  //   op <symbol> <arity>       (one per operation)
  //   identity <term> = <term>  (zero or more)
  //   catalog <tag>             (optional)
  //   rewrite <lhs> -> <rhs>    (zero or more)
  //
  // With a catalog line and no identities the catalog base is used. A
  // catalog tag and rewrite rules cannot be combined.
  VarietySpec read_variety(std::string_view text);
  VarietySpec load_variety(std::string const& path);

  std::string write_variety(VarietySpec const& V);

  // A catalog tag, or a path to a .var file.
  VarietySpec resolve_variety(std::string const& tag_or_path);

}  // namespace mprod
