#include "mprod/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "mprod/error.hpp"
#include "mprod/parse.hpp"

namespace mprod {

  namespace {

    constexpr Element kUndefinedPoint = 0xFFFFFFFFu;

    Term var(std::string name) {
      return Term::variable(std::move(name));
    }

    Term marker() {
      return var(kMarkerVariable);
    }

    // Left comb of items under a binary-like use of op: op(a, c, c, ..., c).
    Term comb(Signature const& sig, OpIndex op, std::vector<Term> const& items) {
      Term acc = items.front();
      for (std::size_t i = 1; i < items.size(); ++i) {
        std::vector<Term> args{acc};
        for (unsigned k = 1; k < sig.arity(op); ++k) {
          args.push_back(items[i]);
        }
        acc = Term::apply(op, std::move(args));
      }
      return acc;
    }

    OpIndex first_plural_op(Signature const& sig) {
      for (OpIndex op = 0; op < sig.size(); ++op) {
        if (sig.arity(op) >= 2) {
          return op;
        }
      }
      throw Error("signature '" + sig.name() + "' has no operation of arity >= 2");
    }

    std::vector<Term> numbered(std::string const& stem, std::size_t n) {
      std::vector<Term> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(var(stem + std::to_string(i)));
      }
      return out;
    }

    std::vector<Identity> parse_all(Signature const&                sig,
                                    std::vector<std::string> const& lines) {
      std::vector<Identity> out;
      for (auto const& l : lines) {
        out.push_back(parse_identity(l, sig));
      }
      return out;
    }

    std::vector<Identity> semilattice_base(Signature const& sig) {
      OpIndex op0 = first_plural_op(sig);
      Term    x = var("x"), y = var("y"), z = var("z");
      auto    b = [&](Term const& a, Term const& c) { return comb(sig, op0, {a, c}); };
      std::vector<Identity> base{
          Identity(b(x, x), x),
          Identity(b(x, y), b(y, x)),
          Identity(b(b(x, y), z), b(x, b(y, z))),
      };
      for (OpIndex op = 0; op < sig.size(); ++op) {
        auto args = numbered("x", sig.arity(op));
        Identity id(Term::apply(op, args), comb(sig, op0, args));
        if (!id.is_trivial()) {
          base.push_back(id);
        }
      }
      return base;
    }

    std::vector<Identity> constant_base(Signature const& sig) {
      std::vector<Identity> base;
      for (OpIndex a = 0; a < sig.size(); ++a) {
        for (OpIndex b = a; b < sig.size(); ++b) {
          base.emplace_back(Term::apply(a, numbered("x", sig.arity(a))),
                            Term::apply(b, numbered("y", sig.arity(b))));
        }
      }
      return base;
    }

    void flatten(Term const& t, std::vector<std::string>& out) {
      if (t.is_variable()) {
        out.push_back(t.name());
        return;
      }
      for (auto const& a : t.args()) {
        flatten(a, out);
      }
    }

    using Letter = std::pair<std::string, bool>;  // (variable, inverted)

    void group_word(Term const& t, bool inverted, std::vector<Letter>& out) {
      auto push = [&out](Letter l) {
        if (!out.empty() && out.back().first == l.first && out.back().second != l.second) {
          out.pop_back();
        } else {
          out.push_back(std::move(l));
        }
      };
      if (t.is_variable()) {
        push({t.name(), inverted});
        return;
      }
      if (t.op() == 1) {
        group_word(t.arg(0), !inverted, out);
        return;
      }
      // (ab)^-1 = b^-1 a^-1
      if (!inverted) {
        group_word(t.arg(0), false, out);
        group_word(t.arg(1), false, out);
      } else {
        group_word(t.arg(1), true, out);
        group_word(t.arg(0), true, out);
      }
    }

    std::vector<Letter> reduced_word(Term const& t) {
      std::vector<Letter> w;
      group_word(t, false, w);
      return w;
    }

    Term letter_term(Letter const& l) {
      Term x = var(l.first);
      return l.second ? Term::apply(1, {x}) : x;
    }

    Term group_normal_form(Term const& t) {
      auto w = reduced_word(t);
      if (w.empty()) {
        Term c = marker();
        return Term::apply(0, {c, Term::apply(1, {c})});
      }
      Term acc = letter_term(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) {
        acc = Term::apply(0, {acc, letter_term(w[i])});
      }
      return acc;
    }

    std::vector<std::vector<Element>> tables_of(FiniteAlgebra const& A) {
      std::vector<std::vector<Element>> out;
      for (OpIndex op = 0; op < A.signature().size(); ++op) {
        auto t = A.table(op);
        out.emplace_back(t.begin(), t.end());
      }
      return out;
    }

    FiniteAlgebra min_algebra(Signature const& sig, std::string name) {
      std::vector<std::vector<Element>> tables;
      for (OpIndex op = 0; op < sig.size(); ++op) {
        std::vector<Element> tab;
        for_each_tuple(2, sig.arity(op), [&](std::span<Element const> args) {
          tab.push_back(*std::min_element(args.begin(), args.end()));
          return true;
        });
        tables.push_back(std::move(tab));
      }
      return FiniteAlgebra(std::move(name), sig, 2, std::move(tables));
    }

    FiniteAlgebra zero_algebra(Signature const& sig, std::string name) {
      std::vector<std::vector<Element>> tables;
      for (OpIndex op = 0; op < sig.size(); ++op) {
        std::size_t cells = std::size_t{1} << sig.arity(op);
        tables.emplace_back(cells, 0);
      }
      return FiniteAlgebra(std::move(name), sig, 2, std::move(tables));
    }

    // Rees quotient of the free semigroup by the ideal of words that are not
    // factors of w.
    CandidateModel factor_model(std::vector<std::string> const& w) {
      std::set<std::vector<std::string>> set;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
          set.insert(std::vector<std::string>(w.begin() + i, w.begin() + j));
        }
      }
      std::vector<std::vector<std::string>> factors(set.begin(), set.end());
      std::stable_sort(factors.begin(), factors.end(), [](auto const& a, auto const& b) {
        return a.size() < b.size();
      });
      std::map<std::vector<std::string>, Element> index;
      std::vector<std::string>                    names;
      for (auto const& f : factors) {
        index.emplace(f, static_cast<Element>(names.size()));
        std::string name;
        for (auto const& s : f) {
          name += s;
        }
        names.push_back(name);
      }
      auto zero = static_cast<Element>(factors.size());
      names.push_back("0");
      std::size_t          n = factors.size() + 1;
      std::vector<Element> tab(n * n, zero);
      for (std::size_t a = 0; a < factors.size(); ++a) {
        for (std::size_t b = 0; b < factors.size(); ++b) {
          auto cat = factors[a];
          cat.insert(cat.end(), factors[b].begin(), factors[b].end());
          auto it = index.find(cat);
          if (it != index.end()) {
            tab[a * n + b] = it->second;
          }
        }
      }
      Assignment asg;
      for (auto const& [f, e] : index) {
        if (f.size() == 1) {
          asg[f[0]] = e;
        }
      }
      return {FiniteAlgebra("factors", signatures::groupoid(), n, {tab}, names), asg};
    }

    struct PermGroup {
      std::vector<std::vector<Element>> elems;
      FiniteAlgebra                     alg;
    };

    std::optional<PermGroup> close_permutations(std::string                              name,
                                                std::vector<std::vector<Element>> const& gens,
                                                std::size_t max_order) {
      std::size_t          deg = gens.empty() ? 1 : gens.front().size();
      std::vector<Element> id(deg);
      for (std::size_t i = 0; i < deg; ++i) {
        id[i] = static_cast<Element>(i);
      }
      auto compose = [](std::vector<Element> const& p, std::vector<Element> const& q) {
        std::vector<Element> r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          r[i] = q[p[i]];
        }
        return r;
      };
      std::vector<std::vector<Element>>           elems{id};
      std::map<std::vector<Element>, Element>     index{{id, 0}};
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto const& g : gens) {
          auto p = compose(elems[i], g);
          if (index.emplace(p, static_cast<Element>(elems.size())).second) {
            elems.push_back(p);
            if (elems.size() > max_order) {
              return std::nullopt;
            }
          }
        }
      }
      std::size_t          n = elems.size();
      std::vector<Element> mul(n * n), inv(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          mul[a * n + b] = index.at(compose(elems[a], elems[b]));
        }
        std::vector<Element> r(deg);
        for (std::size_t i = 0; i < deg; ++i) {
          r[elems[a][i]] = static_cast<Element>(i);
        }
        inv[a] = index.at(r);
      }
      FiniteAlgebra alg(std::move(name), signatures::group(), n, {mul, inv});
      return PermGroup{std::move(elems), std::move(alg)};
    }

    std::vector<Element> cycle_perm(std::size_t deg, std::vector<Element> const& cyc) {
      std::vector<Element> p(deg);
      for (std::size_t i = 0; i < deg; ++i) {
        p[i] = static_cast<Element>(i);
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        p[cyc[i]] = cyc[(i + 1) % cyc.size()];
      }
      return p;
    }

    std::vector<Element> product_perm(std::vector<Element> p, std::vector<Element> const& q) {
      for (auto& x : p) {
        x = q[x];
      }
      return p;
    }

    std::vector<FiniteAlgebra> const& small_groups() {
      static std::vector<FiniteAlgebra> const list = [] {
        std::vector<FiniteAlgebra> out;
        auto gen = [](std::string name, std::vector<std::vector<Element>> gens) {
          return close_permutations(std::move(name), gens, 1000)->alg;
        };
        out.push_back(groups::cyclic(2));
        out.push_back(groups::cyclic(3));
        out.push_back(groups::cyclic(4));
        auto v4 = direct_product(groups::cyclic(2), groups::cyclic(2));
        out.emplace_back("Z2xZ2", signatures::group(), 4, tables_of(v4));
        out.push_back(groups::cyclic(5));
        out.push_back(groups::symmetric3());
        out.push_back(groups::cyclic(7));
        out.push_back(gen("D4", {cycle_perm(4, {0, 1, 2, 3}), cycle_perm(4, {1, 3})}));
        out.push_back(gen("A4",
                          {cycle_perm(4, {0, 1, 2}),
                           product_perm(cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3}))}));
        out.push_back(gen("S4", {cycle_perm(4, {0, 1, 2, 3}), cycle_perm(4, {0, 1})}));
        return out;
      }();
      return list;
    }

    // A permutation representation in which the reduced word acts without
    // fixing point 0: letter i moves point i-1 to point i.
    std::optional<CandidateModel> word_group(std::vector<Letter> const& w,
                                             std::size_t                max_order) {
      std::size_t                                      deg = w.size() + 1;
      std::map<std::string, std::vector<Element>>      partial;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        auto& p = partial.try_emplace(w[i - 1].first, deg, kUndefinedPoint).first->second;
        if (!w[i - 1].second) {
          p[i - 1] = static_cast<Element>(i);
        } else {
          p[i] = static_cast<Element>(i - 1);
        }
      }
      std::vector<std::string>          names;
      std::vector<std::vector<Element>> gens;
      for (auto& [name, p] : partial) {
        std::vector<bool> used(deg, false);
        for (auto x : p) {
          if (x != kUndefinedPoint) {
            used[x] = true;
          }
        }
        std::size_t next = 0;
        for (auto& x : p) {
          if (x == kUndefinedPoint) {
            while (used[next]) {
              ++next;
            }
            x = static_cast<Element>(next);
            used[next] = true;
          }
        }
        names.push_back(name);
        gens.push_back(p);
      }
      auto group = close_permutations("perm", gens, max_order);
      if (!group) {
        return std::nullopt;
      }
      Assignment asg;
      for (std::size_t i = 0; i < names.size(); ++i) {
        auto it = std::find(group->elems.begin(), group->elems.end(), gens[i]);
        asg[names[i]] = static_cast<Element>(it - group->elems.begin());
      }
      return CandidateModel{std::move(group->alg), asg};
    }

  }  // namespace

  namespace groups {

    FiniteAlgebra cyclic(std::size_t n) {
      std::vector<Element> mul(n * n), inv(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          mul[a * n + b] = static_cast<Element>((a + b) % n);
        }
        inv[a] = static_cast<Element>((n - a) % n);
      }
      return FiniteAlgebra("Z" + std::to_string(n), signatures::group(), n, {mul, inv});
    }

    FiniteAlgebra symmetric3() {
      return close_permutations("S3", {cycle_perm(3, {0, 1, 2}), cycle_perm(3, {0, 1})}, 6)
          ->alg;
    }

    std::optional<FiniteAlgebra>
    generated(std::string                              name,
              std::vector<std::vector<Element>> const& gens,
              std::size_t                              max_order) {
      auto g = close_permutations(std::move(name), gens, max_order);
      if (!g) {
        return std::nullopt;
      }
      return g->alg;
    }

  }  // namespace groups

  namespace groupoids {

    FiniteAlgebra left_zero(std::size_t n) {
      std::vector<Element> tab(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          tab[a * n + b] = static_cast<Element>(a);
        }
      }
      return FiniteAlgebra("LZ" + std::to_string(n), signatures::groupoid(), n, {tab});
    }

    FiniteAlgebra right_zero(std::size_t n) {
      std::vector<Element> tab(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          tab[a * n + b] = static_cast<Element>(b);
        }
      }
      return FiniteAlgebra("RZ" + std::to_string(n), signatures::groupoid(), n, {tab});
    }

    FiniteAlgebra constant(std::size_t n) {
      return FiniteAlgebra("CS" + std::to_string(n),
                           signatures::groupoid(),
                           n,
                           {std::vector<Element>(n * n, 0)});
    }

    FiniteAlgebra semilattice2() {
      return min_algebra(signatures::groupoid(), "S2");
    }

  }  // namespace groupoids

  VarietySpec catalog_variety(CatalogTag                      tag,
                              unsigned                        param,
                              std::optional<Signature> const& sig) {
    Signature g = signatures::groupoid();
    CatalogDecision d{tag, param};
    switch (tag) {
      case CatalogTag::Trivial: {
        Signature s = sig.value_or(g);
        return VarietySpec("T", s, {Identity(var("x"), var("y"))}, d);
      }
      case CatalogTag::Semilattice: {
        Signature s = sig.value_or(g);
        return VarietySpec("S", s, semilattice_base(s), d);
      }
      case CatalogTag::LeftZero:
        return VarietySpec("LZ", g, parse_all(g, {"mul(x,y) = x"}), d);
      case CatalogTag::RightZero:
        return VarietySpec("RZ", g, parse_all(g, {"mul(x,y) = y"}), d);
      case CatalogTag::RectBand:
        return VarietySpec("RB",
                           g,
                           parse_all(g,
                                     {"mul(x,x) = x",
                                      "mul(mul(x,y),z) = mul(x,z)",
                                      "mul(x,mul(y,z)) = mul(x,z)"}),
                           d);
      case CatalogTag::RS:
        return VarietySpec(
            "RS",
            g,
            parse_all(g, {"mul(mul(x,y),z) = mul(x,z)", "mul(x,mul(y,z)) = mul(x,z)"}),
            d);
      case CatalogTag::CS:
        return VarietySpec("CS", g, parse_all(g, {"mul(x,y) = mul(z,t)"}), d);
      case CatalogTag::ConstAlg: {
        Signature s = sig.value_or(g);
        return VarietySpec("CT", s, constant_base(s), d);
      }
      case CatalogTag::Ck: {
        if (param < 2) {
          throw Error("C_k needs k >= 2");
        }
        auto base = parse_all(g, {"mul(mul(x,y),z) = mul(x,mul(y,z))"});
        base.emplace_back(comb(g, 0, numbered("x", param)), comb(g, 0, numbered("y", param)));
        return VarietySpec("C" + std::to_string(param), g, base, d);
      }
      case CatalogTag::Un: {
        Signature u = signatures::monounary();
        Term      t = var("x");
        for (unsigned i = 0; i < param; ++i) {
          t = Term::apply(0, {t});
        }
        return VarietySpec("U" + std::to_string(param),
                           u,
                           {Identity(Term::apply(0, {t}), t)},
                           d);
      }
      case CatalogTag::Grp: {
        Signature s = signatures::group();
        return VarietySpec("GRP",
                           s,
                           parse_all(s,
                                     {"mul(mul(x,y),z) = mul(x,mul(y,z))",
                                      "mul(x,mul(y,inv(y))) = x",
                                      "mul(x,inv(x)) = mul(y,inv(y))"}),
                           d);
      }
    }
    throw Error("unknown catalog tag");
  }

  std::optional<VarietySpec> catalog_by_name(std::string const&              name,
                                             std::optional<Signature> const& sig) {
    static std::map<std::string, CatalogTag> const fixed{
        {"T", CatalogTag::Trivial},
        {"S", CatalogTag::Semilattice},
        {"LZ", CatalogTag::LeftZero},
        {"RZ", CatalogTag::RightZero},
        {"RB", CatalogTag::RectBand},
        {"RS", CatalogTag::RS},
        {"CS", CatalogTag::CS},
        {"CT", CatalogTag::ConstAlg},
        {"GRP", CatalogTag::Grp},
    };
    std::string upper = name;
    for (auto& c : upper) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (auto it = fixed.find(upper); it != fixed.end()) {
      return catalog_variety(it->second, 0, sig);
    }
    if (upper.size() >= 2 && (upper[0] == 'C' || upper[0] == 'U')
        && std::all_of(upper.begin() + 1, upper.end(), [](char c) {
             return std::isdigit(static_cast<unsigned char>(c));
           })
        && upper.size() <= 4) {
      unsigned k = static_cast<unsigned>(std::stoul(upper.substr(1)));
      if (upper[0] == 'C') {
        if (k < 2) {
          return std::nullopt;
        }
        return catalog_variety(CatalogTag::Ck, k);
      }
      return catalog_variety(CatalogTag::Un, k);
    }
    return std::nullopt;
  }

  std::string catalog_name(CatalogDecision const& d) {
    switch (d.tag) {
      case CatalogTag::Trivial: return "T";
      case CatalogTag::Semilattice: return "S";
      case CatalogTag::LeftZero: return "LZ";
      case CatalogTag::RightZero: return "RZ";
      case CatalogTag::RectBand: return "RB";
      case CatalogTag::RS: return "RS";
      case CatalogTag::CS: return "CS";
      case CatalogTag::ConstAlg: return "CT";
      case CatalogTag::Ck: return "C" + std::to_string(d.param);
      case CatalogTag::Un: return "U" + std::to_string(d.param);
      case CatalogTag::Grp: return "GRP";
    }
    return "?";
  }

  std::vector<std::string> catalog_names() {
    return {"T", "S", "LZ", "RZ", "RB", "RS", "CS", "CT", "C2", "C3", "U0", "U1", "U2", "GRP"};
  }

  Term catalog_normal_form(Signature const& sig, CatalogDecision const& d, Term const& t) {
    switch (d.tag) {
      case CatalogTag::Trivial:
        return marker();
      case CatalogTag::Semilattice: {
        auto              vs = variables_of(t);
        std::vector<Term> items;
        for (auto const& v : vs) {
          items.push_back(var(v));
        }
        return comb(sig, first_plural_op(sig), items);
      }
      case CatalogTag::LeftZero:
        return var(first_variable(t));
      case CatalogTag::RightZero:
        return var(last_variable(t));
      case CatalogTag::RectBand: {
        auto const& a = first_variable(t);
        auto const& b = last_variable(t);
        if (a == b) {
          return var(a);
        }
        return Term::apply(0, {var(a), var(b)});
      }
      case CatalogTag::RS:
        if (t.is_variable()) {
          return t;
        }
        return Term::apply(0, {var(first_variable(t)), var(last_variable(t))});
      case CatalogTag::CS:
      case CatalogTag::ConstAlg:
        if (t.is_variable()) {
          return t;
        }
        return Term::apply(0, std::vector<Term>(sig.arity(0), marker()));
      case CatalogTag::Ck: {
        std::vector<std::string> w;
        flatten(t, w);
        std::vector<Term> items;
        if (w.size() < d.param) {
          for (auto const& s : w) {
            items.push_back(var(s));
          }
        } else {
          items.assign(d.param, marker());
        }
        return comb(sig, 0, items);
      }
      case CatalogTag::Un: {
        std::size_t depth = t.size();
        Term        x     = var(first_variable(t));
        for (std::size_t i = 0; i < std::min<std::size_t>(depth, d.param); ++i) {
          x = Term::apply(0, {x});
        }
        return x;
      }
      case CatalogTag::Grp:
        return group_normal_form(t);
    }
    throw Error("unknown catalog tag");
  }

  std::vector<CandidateModel> catalog_standard_models(VarietySpec const& V,
                                                      Term const&        u,
                                                      Term const&        v) {
    auto d = V.catalog();
    if (!d) {
      return {};
    }
    Signature const&            sig = V.signature();
    std::vector<CandidateModel> out;
    auto add = [&out](FiniteAlgebra A) { out.push_back({std::move(A), std::nullopt}); };
    switch (d->tag) {
      case CatalogTag::Trivial:
        break;
      case CatalogTag::Semilattice:
        add(min_algebra(sig, "S2"));
        break;
      case CatalogTag::LeftZero:
        add(groupoids::left_zero(2));
        break;
      case CatalogTag::RightZero:
        add(groupoids::right_zero(2));
        break;
      case CatalogTag::RectBand:
        add(groupoids::left_zero(2));
        add(groupoids::right_zero(2));
        break;
      case CatalogTag::RS:
        add(groupoids::constant(2));
        add(groupoids::left_zero(2));
        add(groupoids::right_zero(2));
        break;
      case CatalogTag::CS:
        add(groupoids::constant(2));
        break;
      case CatalogTag::ConstAlg:
        add(zero_algebra(sig, "CT2"));
        break;
      case CatalogTag::Ck: {
        std::vector<std::string> wu, wv;
        flatten(u, wu);
        flatten(v, wv);
        if (wu.size() >= d->param) {
          std::swap(wu, wv);
        }
        if (wu.size() < d->param) {
          out.push_back(factor_model(wu));
        }
        break;
      }
      case CatalogTag::Un: {
        std::vector<Element> id{0, 1};
        add(FiniteAlgebra("id2", sig, 2, {id}));
        if (d->param >= 1) {
          std::size_t          n = d->param + 1;
          std::vector<Element> f(n);
          for (std::size_t i = 0; i < n; ++i) {
            f[i] = static_cast<Element>(std::min(i + 1, n - 1));
          }
          add(FiniteAlgebra("chain" + std::to_string(n), sig, n, {f}));
        }
        break;
      }
      case CatalogTag::Grp: {
        for (auto const& G : small_groups()) {
          add(G);
        }
        std::vector<Letter> w = reduced_word(u);
        for (auto l : reduced_word(Term::apply(1, {v}))) {
          if (!w.empty() && w.back().first == l.first && w.back().second != l.second) {
            w.pop_back();
          } else {
            w.push_back(l);
          }
        }
        if (!w.empty()) {
          if (auto m = word_group(w, 720)) {
            out.push_back(std::move(*m));
          }
        }
        break;
      }
    }
    return out;
  }

  bool catalog_is_idempotent(CatalogDecision const& d) {
    switch (d.tag) {
      case CatalogTag::Trivial:
      case CatalogTag::Semilattice:
      case CatalogTag::LeftZero:
      case CatalogTag::RightZero:
      case CatalogTag::RectBand:
        return true;
      case CatalogTag::Un:
        return d.param == 0;
      default:
        return false;
    }
  }

}  // namespace mprod
