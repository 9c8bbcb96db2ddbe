#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "term.hpp"
#include "variety.hpp"

namespace mprod {

  // The terms t_{i,j} built from a chain of W-identities p_i = q_i,
  // i = 1..n-1, and ternary terms f, g:
  //
  //   t_{i,0} = p_1
  //   t_{i,j} = f(q_j, p_j, t_{i,j-1})   for 0 < j < i
  //   t_{i,j} = g(q_j, q_j, t_{i,j-1})   for j >= i
  //
  // and t_i = t_{i,n-1}. The variables of link i are renamed z<i>_<k> so that
  // distinct links share none. A chain without links has n = 1 and t_1 is
  // the single variable z1_1.
  struct ChainData {
    Term                                            f;
    Term                                            g;
    std::vector<Identity>                           links;     // renamed
    std::vector<std::map<std::string, std::string>> renaming;  // original -> new, per link
    std::vector<std::vector<Term>>                  t;         // t[i-1][j] = t_{i,j}

    std::size_t length() const noexcept {
      return t.size();
    }
    // t_i for 1 <= i <= n.
    Term const& term(std::size_t i) const {
      return t.at(i - 1).back();
    }
  };

  // f and g as in check_theorem_hypotheses (binary terms are lifted).
  ChainData build_chain_terms(Term const& f, Term const& g, std::vector<Identity> const& chain);

  // Elements a_1..a_n of A and, per link, an assignment c_i of its original
  // variables with a_i = p_i(c_i) and a_{i+1} = q_i(c_i).
  struct ChainElements {
    FiniteAlgebra           algebra;
    std::vector<Element>    a;
    std::vector<Assignment> c;
  };

  struct ChainReport {
    std::vector<Verdict> links;   // W |= p_i = q_i
    Verdict              a1;      // V |= f(x,y,y) = x, used by the element check
    Verdict              a2;      // V |= g(x,x,y) = y
    std::vector<Verdict> part_c;  // W |= t_i = t_{i+1}
    Verdict              part_d;  // t_1 is a term idempotent of W

    bool                 has_elements = false;
    std::vector<bool>    premises;  // per link: a_i = p_i(c_i) and a_{i+1} = q_i(c_i)
    std::vector<Element> values;    // t_i(c) with c the concatenation of the c_i
    std::vector<bool>    part_e;    // values[i] == a_i

    bool links_ok() const;
    bool c_ok() const;
    bool d_ok() const {
      return part_d.is_proved();
    }
    bool e_ok() const;
  };

  ChainReport verify_chain(VarietySpec const&                  W,
                           VarietySpec const&                  V,
                           ChainData const&                    data,
                           std::optional<ChainElements> const& elements = std::nullopt,
                           Bounds const&                       bounds   = {});

}  // namespace mprod
