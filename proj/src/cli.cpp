#include "mprod/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <sstream>

#include "mprod/algebra_io.hpp"
#include "mprod/catalog.hpp"
#include "mprod/chain.hpp"
#include "mprod/error.hpp"
#include "mprod/hypotheses.hpp"
#include "mprod/membership.hpp"
#include "mprod/parse.hpp"
#include "mprod/polar.hpp"
#include "mprod/replica.hpp"
#include "mprod/report_json.hpp"
#include "mprod/sigma_w.hpp"
#include "mprod/variety_io.hpp"

namespace mprod::cli {

  namespace {

    struct Options {
      std::string              algebra;
      std::string              variety;
      std::string              inner;
      std::string              outer;
      std::string              identity;
      std::string              term;
      std::string              f;
      std::string              g;
      std::vector<std::string> links;
      std::vector<std::string> assigns;
      std::string              elements;
      std::string              name;
      std::size_t              term_bound       = 6;
      std::size_t              model_bound      = 4;
      std::size_t              congruence_limit = kDefaultCongruenceLimit;
      std::size_t              max_size         = 3;
      std::size_t              pool_vars        = 2;
      std::size_t              rho0_bound       = 0;
      bool                     json             = false;

      Bounds bounds() const {
        return {model_bound, term_bound};
      }
    };

    FiniteAlgebra resolve_algebra(std::string const& path) {
      if (path.empty()) {
        throw Error("--algebra is required");
      }
      if (std::filesystem::exists(path)) {
        return load_algebra(path);
      }
      auto stem = std::filesystem::path(path).filename().string();
      if (stem == "paper_A" || stem == "paper_A.alg") {
        return builtin::counterexample_algebra();
      }
      throw Error("cannot open algebra file '" + path + "'");
    }

    VarietySpec resolve(std::string const& what,
                        std::string const& flag,
                        std::optional<Signature> const& sig = std::nullopt) {
      if (what.empty()) {
        throw Error(flag + " is required");
      }
      if (auto v = catalog_by_name(what, sig)) {
        return *v;
      }
      return load_variety(what);
    }

    std::string render_assignment(Assignment const& asg, FiniteAlgebra const& A) {
      std::string out;
      for (auto const& [v, e] : asg) {
        if (!out.empty()) {
          out += ", ";
        }
        out += v + "=" + A.element_name(e);
      }
      return out;
    }

    std::string indent(std::string const& text, std::string const& pad) {
      std::string        out;
      std::istringstream in(text);
      std::string        line;
      while (std::getline(in, line)) {
        out += pad + line + "\n";
      }
      return out;
    }

    std::string render_verdict(Verdict const& v, std::string const& pad = "  ") {
      std::ostringstream out;
      out << to_string(v.kind) << " (" << v.method << ")\n";
      for (auto const& t : v.trace) {
        out << pad << t << '\n';
      }
      if (v.is_refuted() && v.model) {
        out << pad << "model " << v.model->name() << " of size " << v.model->size() << '\n';
        out << indent(render_tables(*v.model), pad + "  ");
        out << pad << "witness: " << render_assignment(v.witness, *v.model) << '\n';
      }
      return out.str();
    }

    int verdict_code(Verdict const& v) {
      switch (v.kind) {
        case VerdictKind::Proved: return kOk;
        case VerdictKind::Refuted: return kNegative;
        case VerdictKind::Unknown: return kUnknown;
      }
      return kUsage;
    }

    // Worst of several outcomes: negative beats unknown beats ok.
    int combine(std::initializer_list<int> codes) {
      int out = kOk;
      for (int c : codes) {
        if (c == kNegative || (c == kUnknown && out == kOk)) {
          out = c;
        }
      }
      return out;
    }

    std::string render_membership(MembershipReport const& r,
                                  FiniteAlgebra const&    A,
                                  VarietySpec const&      V) {
      std::ostringstream out;
      out << (r.member ? "member" : "not-member") << " (exact)\n";
      out << "replica: " << to_string(r.replica, &A) << '\n';
      for (auto const& b : r.blocks) {
        out << "  " << block_to_string(b.elements, &A)
            << (b.is_subalgebra ? " subalgebra" : " not a subalgebra");
        if (b.is_subalgebra) {
          std::size_t ok = 0;
          for (auto const& c : b.checks) {
            ok += c.holds;
          }
          out << ", " << ok << "/" << b.checks.size() << " identities of " << V.name()
              << " hold";
        }
        out << '\n';
      }
      if (r.failure) {
        out << "failing block " << block_to_string(r.blocks[r.failure->block].elements, &A)
            << ": " << to_string(V.base()[r.failure->identity], V.signature()) << " at "
            << render_assignment(r.failure->witness, A) << '\n';
      }
      return out.str();
    }

    std::vector<Element> parse_elements(std::string const& text, FiniteAlgebra const& A) {
      std::vector<Element> out;
      std::stringstream    ss(text);
      std::string          item;
      while (std::getline(ss, item, ',')) {
        auto e = A.find_element(item);
        if (!e) {
          throw Error("unknown element '" + item + "'");
        }
        out.push_back(*e);
      }
      return out;
    }

    Assignment parse_assignment(std::string const& text, FiniteAlgebra const& A) {
      Assignment        out;
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw Error("expected var=element in '" + item + "'");
        }
        auto e = A.find_element(item.substr(eq + 1));
        if (!e) {
          throw Error("unknown element '" + item.substr(eq + 1) + "'");
        }
        out[item.substr(0, eq)] = *e;
      }
      return out;
    }

    std::string required(std::string const& value, std::string const& flag) {
      if (value.empty()) {
        throw Error(flag + " is required");
      }
      return value;
    }

    Result cmd_check_id(Options const& o) {
      auto V  = resolve(o.variety, "--variety");
      auto id = parse_identity(required(o.identity, "--identity"), V.signature());
      auto v  = decide_identity(V, id, o.bounds());
      if (o.json) {
        return {verdict_code(v), json::verdict(v).dump(2) + "\n"};
      }
      return {verdict_code(v), render_verdict(v)};
    }

    Result cmd_nf(Options const& o) {
      auto V  = resolve(o.variety, "--variety");
      auto t  = parse_term(required(o.term, "--term"), V.signature());
      auto nf = to_string(equivalence_key(V, t), V.signature());
      if (o.json) {
        return {kOk, nlohmann::json{{"term", o.term}, {"normal_form", nf}}.dump(2) + "\n"};
      }
      return {kOk, nf + "\n"};
    }

    Result cmd_idem(Options const& o) {
      auto V = resolve(o.variety, "--variety");
      auto t = parse_term(required(o.term, "--term"), V.signature());
      auto v = is_term_idempotent(V, t, o.bounds());
      if (o.json) {
        return {verdict_code(v), json::verdict(v).dump(2) + "\n"};
      }
      return {verdict_code(v), render_verdict(v)};
    }

    Result cmd_replica(Options const& o) {
      auto A   = resolve_algebra(o.algebra);
      auto W   = resolve(o.variety, "--variety", A.signature());
      auto rho = replica_congruence(A, W);
      std::optional<Rho0Relation> r0;
      if (o.rho0_bound > 0) {
        r0 = rho0_bounded(A, W, o.rho0_bound);
      }
      if (o.json) {
        nlohmann::json out{{"replica", json::partition(rho, A)}};
        if (r0) {
          out["rho0"] = json::rho0(*r0, A);
        }
        return {kOk, out.dump(2) + "\n"};
      }
      std::string text = to_string(rho, &A) + "\n";
      if (r0) {
        text += "rho0 at term bound " + std::to_string(r0->term_bound) + ": "
              + std::to_string(r0->num_pairs()) + " ordered pairs, closure "
              + to_string(r0->transitive_closure(), &A) + "\n";
      }
      return {kOk, text};
    }

    Result cmd_classes(Options const& o) {
      auto A = resolve_algebra(o.algebra);
      auto W = resolve(o.variety, "--variety", A.signature());
      auto r = class_structure(A, W);
      if (o.json) {
        return {kOk, json::class_structure(r, A).dump(2) + "\n"};
      }
      std::ostringstream out;
      out << to_string(r.partition, &A) << '\n';
      for (auto const& b : r.blocks) {
        out << "  " << block_to_string(b.elements, &A)
            << (b.is_subalgebra ? "  subalgebra" : "  -")
            << (b.is_singleton ? "  singleton" : "")
            << (b.is_idempotent_in_quotient ? "  idempotent in quotient" : "") << '\n';
      }
      return {kOk, out.str()};
    }

    Result cmd_member(Options const& o) {
      auto A = resolve_algebra(o.algebra);
      auto V = resolve(o.inner, "--inner", A.signature());
      auto W = resolve(o.outer, "--outer", A.signature());
      auto r = member(A, V, W);
      int  code = r.member ? kOk : kNegative;
      if (o.json) {
        return {code, json::membership(r, A, V).dump(2) + "\n"};
      }
      return {code, render_membership(r, A, V)};
    }

    Result cmd_hprobe(Options const& o) {
      auto A     = resolve_algebra(o.algebra);
      auto V     = resolve(o.inner, "--inner", A.signature());
      auto W     = resolve(o.outer, "--outer", A.signature());
      auto probe = h_closure_probe(A, V, W, o.congruence_limit);
      std::size_t bad = count_violations(probe);
      int  code = bad ? kNegative : kOk;
      if (o.json) {
        return {code, json::probe(probe, A, V).dump(2) + "\n"};
      }
      std::ostringstream out;
      out << probe.size() << " congruences, " << bad << " violation" << (bad == 1 ? "" : "s")
          << '\n';
      for (auto const& q : probe) {
        out << (q.report.member ? "  ok         " : "  violation  ") << to_string(q.theta, &A)
            << '\n';
      }
      return {code, out.str()};
    }

    Result cmd_sigma_w(Options const& o) {
      auto V = resolve(o.inner, "--inner");
      auto W = resolve(o.outer, "--outer", V.signature());
      std::vector<Identity> sigma = V.base();
      if (!o.identity.empty()) {
        sigma = {parse_identity(o.identity, V.signature())};
      }
      auto r = sigma_w(sigma, W, o.term_bound, o.pool_vars);
      if (o.json) {
        return {kOk, json::sigma_w(r, V.signature()).dump(2) + "\n"};
      }
      std::ostringstream out;
      out << r.identities.size() << " identities (term bound " << r.term_bound << ", "
          << r.pool_vars << " pool variables, " << r.pool_terms << " pool terms"
          << (r.truncated ? ", truncated" : "") << ")\n";
      for (auto const& e : r.identities) {
        out << "  " << to_string(e.identity, V.signature()) << '\n';
      }
      return {kOk, out.str()};
    }

    std::string render_hypotheses(HypothesisReport const& r, Signature const& sig) {
      std::ostringstream out;
      out << "f(x,y,z) = " << to_string(r.f, sig) << "\ng(x,y,z) = " << to_string(r.g, sig)
          << '\n';
      out << "(a1) V |= f(x,y,y) = x: " << render_verdict(r.a1, "     ");
      out << "(a2) V |= g(x,x,y) = y: " << render_verdict(r.a2, "     ");
      out << "(b)  W |= f(x,x,y) = g(x,x,y): " << render_verdict(r.b, "     ");
      out << "(c)  f(x,x,y) term idempotent in W: " << render_verdict(r.c, "     ");
      if (!r.special_cases.empty()) {
        out << "special cases:";
        for (auto const& s : r.special_cases) {
          out << ' ' << s;
        }
        out << '\n';
      }
      out << (r.all_proved() ? "all conditions proved: V o W is a variety\n"
                             : "not all conditions proved\n");
      return out.str();
    }

    Result cmd_hypotheses(Options const& o) {
      auto V = resolve(o.inner, "--inner");
      auto W = resolve(o.outer, "--outer", V.signature());
      auto f = parse_term(required(o.f, "--f"), V.signature());
      auto g = parse_term(required(o.g, "--g"), V.signature());
      auto r = check_theorem_hypotheses(V, W, f, g, o.bounds());
      int  code = r.all_proved() ? kOk
                : combine({verdict_code(r.a1), verdict_code(r.a2), verdict_code(r.b),
                           verdict_code(r.c)});
      if (o.json) {
        return {code, json::hypotheses(r, V.signature()).dump(2) + "\n"};
      }
      return {code, render_hypotheses(r, V.signature())};
    }

    Result cmd_find_fg(Options const& o) {
      auto V    = resolve(o.inner, "--inner");
      auto W    = resolve(o.outer, "--outer", V.signature());
      auto hits = search_fg(V, W, o.max_size, o.bounds());
      auto const& sig = V.signature();
      if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto const& h : hits) {
          arr.push_back({{"f", to_string(h.f, sig)},
                         {"g", to_string(h.g, sig)},
                         {"report", json::hypotheses(h.report, sig)}});
        }
        nlohmann::json out{{"max_size", o.max_size}, {"bounded_empty", hits.empty()},
                           {"candidates", arr}};
        return {hits.empty() ? kUnknown : kOk, out.dump(2) + "\n"};
      }
      std::ostringstream out;
      if (hits.empty()) {
        out << "no pair up to size " << o.max_size << " (bounded search)\n";
      }
      for (auto const& h : hits) {
        out << to_string(h.f, sig) << "  " << to_string(h.g, sig);
        for (auto const& s : h.report.special_cases) {
          out << "  [" << s << "]";
        }
        out << '\n';
      }
      return {hits.empty() ? kUnknown : kOk, out.str()};
    }

    Result cmd_chain(Options const& o) {
      auto V   = resolve(o.inner, "--inner");
      auto W   = resolve(o.outer, "--outer", V.signature());
      auto sig = V.signature();
      std::vector<Identity> links;
      for (auto const& l : o.links) {
        links.push_back(parse_identity(l, sig));
      }
      auto data = build_chain_terms(parse_term(required(o.f, "--f"), sig),
                                    parse_term(required(o.g, "--g"), sig),
                                    links);
      std::optional<ChainElements> elems;
      if (!o.algebra.empty()) {
        auto A = resolve_algebra(o.algebra);
        std::vector<Assignment> cs;
        for (auto const& a : o.assigns) {
          cs.push_back(parse_assignment(a, A));
        }
        auto as = parse_elements(required(o.elements, "--elements"), A);
        elems   = ChainElements{A, as, cs};
      }
      auto r = verify_chain(W, V, data, elems, o.bounds());
      std::vector<int> codes;
      for (auto const& v : r.part_c) {
        codes.push_back(verdict_code(v));
      }
      codes.push_back(verdict_code(r.part_d));
      int code = kOk;
      for (int c : codes) {
        code = combine({code, c});
      }
      if (r.has_elements && !r.e_ok()) {
        code = kNegative;
      }
      if (o.json) {
        return {code, json::chain(data, r, sig).dump(2) + "\n"};
      }
      std::ostringstream out;
      for (std::size_t i = 1; i <= data.length(); ++i) {
        out << "t_" << i << " = " << to_string(data.term(i), sig) << '\n';
      }
      for (std::size_t i = 0; i < r.part_c.size(); ++i) {
        out << "C: W |= t_" << i + 1 << " = t_" << i + 2 << ": "
            << render_verdict(r.part_c[i], "   ");
      }
      out << "D: t_1 term idempotent: " << render_verdict(r.part_d, "   ");
      if (r.has_elements) {
        out << "E: " << (r.e_ok() ? "a_i = t_i(c) for every i" : "element check failed")
            << '\n';
      }
      return {code, out.str()};
    }

    Result cmd_polar(Options const& o) {
      auto W = resolve(o.variety, "--variety");
      if (!o.term.empty()) {
        auto v = is_zero_term(W, parse_term(o.term, W.signature()), o.bounds());
        if (o.json) {
          return {verdict_code(v), json::verdict(v).dump(2) + "\n"};
        }
        return {verdict_code(v), "zero term: " + render_verdict(v)};
      }
      auto terms = find_polar_terms(W, o.max_size, o.bounds());
      if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto const& t : terms) {
          arr.push_back(to_string(t, W.signature()));
        }
        return {kOk, nlohmann::json{{"max_size", o.max_size}, {"polar_terms", arr}}.dump(2) + "\n"};
      }
      std::ostringstream out;
      out << terms.size() << " polar term" << (terms.size() == 1 ? "" : "s") << " up to size "
          << o.max_size << '\n';
      for (auto const& t : terms) {
        out << "  " << to_string(t, W.signature()) << '\n';
      }
      return {kOk, out.str()};
    }

    Result cmd_classify(Options const& o) {
      auto W = resolve(o.variety, "--variety");
      auto r = classify_polarization(W, o.max_size, o.bounds());
      int  code = r.classification == Polarization::Unknown ? kUnknown : kOk;
      if (o.json) {
        return {code, json::polarization(r, W.signature()).dump(2) + "\n"};
      }
      std::ostringstream out;
      out << to_string(r.classification) << ": " << r.reason << '\n';
      for (auto const& t : r.polar_terms) {
        out << "  polar " << to_string(t, W.signature()) << '\n';
      }
      for (auto const& z : r.zero_terms) {
        out << "  zero term " << to_string(z.term, W.signature()) << ": "
            << to_string(z.verdict.kind) << '\n';
      }
      return {code, out.str()};
    }

    Result cmd_examples(Options const& o) {
      if (o.name.empty()) {
        std::ostringstream out;
        out << "algebras:\n  paper_A\nvarieties:\n";
        for (auto const& n : catalog_names()) {
          out << "  " << n << '\n';
        }
        return {kOk, out.str()};
      }
      if (o.name == "paper_A") {
        return {kOk, builtin::kCounterexample};
      }
      if (auto v = catalog_by_name(o.name)) {
        return {kOk, write_variety(*v)};
      }
      throw Error("no example named '" + o.name + "'");
    }

  }  // namespace

  Result run(std::vector<std::string> const& args) {
    Options  o;
    CLI::App app{"Mal'tsev products of varieties: replicas, membership, and identities",
                 "mprod"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable output");

    auto add_bounds = [&o](CLI::App* sub) {
      sub->add_option("--term-bound", o.term_bound, "Operation nodes per enumerated term");
      sub->add_option("--model-bound", o.model_bound, "Largest countermodel size searched");
    };

    auto* check = app.add_subcommand("check-id", "Decide an identity in a variety");
    check->add_option("--variety", o.variety, "Catalog tag or .var file")->required();
    check->add_option("--identity,identity", o.identity, "lhs = rhs")->required();
    add_bounds(check);

    auto* nf = app.add_subcommand("nf", "Normal form of a term");
    nf->add_option("--variety", o.variety)->required();
    nf->add_option("--term,term", o.term)->required();

    auto* idem = app.add_subcommand("idem", "Is a term a term idempotent");
    idem->add_option("--variety", o.variety)->required();
    idem->add_option("--term,term", o.term)->required();
    add_bounds(idem);

    auto* replica = app.add_subcommand("replica", "W-replica congruence of an algebra");
    replica->add_option("--algebra", o.algebra)->required();
    replica->add_option("--variety", o.variety)->required();
    replica->add_option("--rho0", o.rho0_bound, "Also report the bounded rho0 relation");

    auto* classes = app.add_subcommand("classes", "Replica classes with structural flags");
    classes->add_option("--algebra", o.algebra)->required();
    classes->add_option("--variety", o.variety)->required();

    auto* mem = app.add_subcommand("member", "Membership in V o W");
    mem->add_option("--algebra", o.algebra)->required();
    mem->add_option("--inner", o.inner, "V")->required();
    mem->add_option("--outer", o.outer, "W")->required();

    auto* hprobe = app.add_subcommand("hprobe", "Membership of every quotient in V o W");
    hprobe->add_option("--algebra", o.algebra)->required();
    hprobe->add_option("--inner", o.inner)->required();
    hprobe->add_option("--outer", o.outer)->required();
    hprobe->add_option("--congruence-limit", o.congruence_limit);

    auto* sw = app.add_subcommand("sigma-w", "Bounded slice of Sigma^W");
    sw->add_option("--inner", o.inner, "V, whose base is Sigma")->required();
    sw->add_option("--outer", o.outer, "W")->required();
    sw->add_option("--identity", o.identity, "Use this identity instead of the base of V");
    sw->add_option("--pool-vars", o.pool_vars);
    sw->add_option("--term-bound", o.term_bound);

    auto* hyp = app.add_subcommand("hypotheses", "Check the conditions on f and g");
    hyp->add_option("--inner", o.inner)->required();
    hyp->add_option("--outer", o.outer)->required();
    hyp->add_option("--f", o.f)->required();
    hyp->add_option("--g", o.g)->required();
    add_bounds(hyp);

    auto* ffg = app.add_subcommand("find-fg", "Search for terms f and g");
    ffg->add_option("--inner", o.inner)->required();
    ffg->add_option("--outer", o.outer)->required();
    ffg->add_option("--max-size", o.max_size);
    add_bounds(ffg);

    auto* ch = app.add_subcommand("chain", "Build and verify chain terms t_i");
    ch->add_option("--inner", o.inner)->required();
    ch->add_option("--outer", o.outer)->required();
    ch->add_option("--f", o.f)->required();
    ch->add_option("--g", o.g)->required();
    ch->add_option("--link", o.links, "p_i = q_i, repeatable");
    ch->add_option("--algebra", o.algebra, "Algebra for the element check");
    ch->add_option("--elements", o.elements, "a_1,...,a_n");
    ch->add_option("--assign", o.assigns, "x=a,y=b for each link, repeatable");
    add_bounds(ch);

    auto* pol = app.add_subcommand("polar", "Polar terms, or check a zero term");
    pol->add_option("--variety", o.variety)->required();
    pol->add_option("--max-size", o.max_size);
    pol->add_option("--zero", o.term, "Check this unary term as a zero term");
    add_bounds(pol);

    auto* cls = app.add_subcommand("classify", "Polarization class of a variety");
    cls->add_option("--variety", o.variety)->required();
    cls->add_option("--max-size", o.max_size);
    add_bounds(cls);

    auto* ex = app.add_subcommand("examples", "Built-in algebras and catalog varieties");
    ex->add_option("name", o.name);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream       out, err;
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return {code == 0 ? kOk : kUsage, out.str() + err.str()};
    }

    try {
      auto* sub = app.get_subcommands().front();
      std::string name = sub->get_name();
      if (name == "check-id") return cmd_check_id(o);
      if (name == "nf") return cmd_nf(o);
      if (name == "idem") return cmd_idem(o);
      if (name == "replica") return cmd_replica(o);
      if (name == "classes") return cmd_classes(o);
      if (name == "member") return cmd_member(o);
      if (name == "hprobe") return cmd_hprobe(o);
      if (name == "sigma-w") return cmd_sigma_w(o);
      if (name == "hypotheses") return cmd_hypotheses(o);
      if (name == "find-fg") return cmd_find_fg(o);
      if (name == "chain") return cmd_chain(o);
      if (name == "polar") return cmd_polar(o);
      if (name == "classify") return cmd_classify(o);
      if (name == "examples") return cmd_examples(o);
    } catch (Error const& e) {
      return {kUsage, std::string("error: ") + e.what() + "\n"};
    }
    return {kUsage, "unknown subcommand\n"};
  }

}  // namespace mprod::cli
