#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "algebra.hpp"

namespace mprod {

  // .alg format:
  //
  //   algebra <name>
  //   size <n>
  //   names <n labels>          (optional)
  //   op <symbol> <arity>       (per operation)
  //   <n^arity entries, row-major, last index fastest>
  //
  // Entries are indices, or element names when a names line is present.
  // Lines starting with '#' are comments.
  FiniteAlgebra read_algebra(std::string_view text);
  FiniteAlgebra load_algebra(std::string const& path);

  // Writes indices, n entries per line; read_algebra(write_algebra(A)) == A.
  std::string write_algebra(FiniteAlgebra const& A);

  namespace builtin {
    // The four-element groupoid {a, e, b, f} whose quotient by
    // {{a},{b},{e,f}} leaves CS o S.
    extern char const* const kCounterexample;
    FiniteAlgebra            counterexample_algebra();
  }  // namespace builtin

}  // namespace mprod
