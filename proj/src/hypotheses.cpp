#include "mprod/hypotheses.hpp"

#include <algorithm>

#include "mprod/catalog.hpp"
#include "mprod/enumerate.hpp"
#include "mprod/error.hpp"

namespace mprod {

  namespace {

    Term const& X() {
      static Term const t = Term::variable("x");
      return t;
    }
    Term const& Y() {
      static Term const t = Term::variable("y");
      return t;
    }
    Term const& Z() {
      static Term const t = Term::variable("z");
      return t;
    }

    bool mentions_z(Term const& t) {
      return variables_of(t).count("z") > 0;
    }

    void require_xyz(Term const& t) {
      for (auto const& v : variables_of(t)) {
        if (v != "x" && v != "y" && v != "z") {
          throw Error("terms f and g may only use the variables x, y, z");
        }
      }
    }

    Term lift(Term const& t) {
      return substitute(t, {{"y", Z()}});
    }

    bool idempotent_variety(VarietySpec const& W, Bounds const& bounds) {
      if (auto d = W.catalog()) {
        return catalog_is_idempotent(*d);
      }
      return is_term_idempotent(W, X(), bounds).is_proved();
    }

  }  // namespace

  Term apply_ternary(Term const& F, Term const& a, Term const& b, Term const& c) {
    return substitute(F, {{"x", a}, {"y", b}, {"z", c}});
  }

  std::pair<Term, Term> ternary_forms(Term const& f, Term const& g) {
    if (mentions_z(f) || mentions_z(g)) {
      return {f, g};
    }
    return {lift(f), lift(g)};
  }

  HypothesisReport check_theorem_hypotheses(VarietySpec const& V,
                                            VarietySpec const& W,
                                            Term const&        f,
                                            Term const&        g,
                                            Bounds const&      bounds) {
    if (!(V.signature() == W.signature())) {
      throw Error("varieties '" + V.name() + "' and '" + W.name()
                  + "' have different signatures");
    }
    require_xyz(f);
    require_xyz(g);
    auto [F, G] = ternary_forms(f, g);
    Term fxyy   = apply_ternary(F, X(), Y(), Y());
    Term gxxy   = apply_ternary(G, X(), X(), Y());
    Term fxxy   = apply_ternary(F, X(), X(), Y());
    HypothesisReport r{F,
                       G,
                       !mentions_z(f) && !mentions_z(g),
                       decide_identity(V, fxyy, X(), bounds),
                       decide_identity(V, gxxy, Y(), bounds),
                       decide_identity(W, fxxy, gxxy, bounds),
                       is_term_idempotent(W, fxxy, bounds),
                       {}};

    if (r.binary) {
      r.special_cases.push_back("binary");
      if (provable_quickly(V, f, X()) && provable_quickly(W, f, Y())) {
        r.special_cases.push_back("independence");
      }
    }
    bool idem = idempotent_variety(W, bounds);
    if (idem) {
      r.special_cases.push_back("idempotent-outer");
      if (r.f == r.g) {
        r.special_cases.push_back("maltsev");
      }
    }
    return r;
  }

  std::vector<FgCandidate> search_fg(VarietySpec const& V,
                                     VarietySpec const& W,
                                     std::size_t        max_size,
                                     Bounds const&      bounds) {
    if (!(V.signature() == W.signature())) {
      throw Error("varieties '" + V.name() + "' and '" + W.name()
                  + "' have different signatures");
    }
    auto terms = enumerate_terms(V.signature(), {"x", "y", "z"}, max_size);

    // Screens for (a1) and (a2) in both readings of a term.
    struct Screen {
      bool z;
      bool a1_bin, a1_ter, a2_bin, a2_ter;
    };
    std::vector<Screen> screen;
    for (auto const& t : terms) {
      Screen s{};
      s.z      = mentions_z(t);
      Term lt  = s.z ? t : lift(t);
      s.a1_ter = provable_quickly(V, apply_ternary(t, X(), Y(), Y()), X());
      s.a2_ter = provable_quickly(V, apply_ternary(t, X(), X(), Y()), Y());
      s.a1_bin = !s.z && provable_quickly(V, apply_ternary(lt, X(), Y(), Y()), X());
      s.a2_bin = !s.z && provable_quickly(V, apply_ternary(lt, X(), X(), Y()), Y());
      screen.push_back(s);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = 0; j < terms.size(); ++j) {
        bool binary = !screen[i].z && !screen[j].z;
        bool ok     = binary ? screen[i].a1_bin && screen[j].a2_bin
                             : screen[i].a1_ter && screen[j].a2_ter;
        if (ok) {
          pairs.emplace_back(i, j);
        }
      }
    }
    // terms is already sorted by term_less, so indices order f and g.
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto const& p, auto const& q) {
      return terms[p.first].size() + terms[p.second].size()
           < terms[q.first].size() + terms[q.second].size();
    });

    std::vector<FgCandidate> out;
    for (auto [i, j] : pairs) {
      auto report = check_theorem_hypotheses(V, W, terms[i], terms[j], bounds);
      if (report.all_proved()) {
        out.push_back({terms[i], terms[j], std::move(report)});
      }
    }
    return out;
  }

}  // namespace mprod
