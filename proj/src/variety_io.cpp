#include "mprod/variety_io.hpp"

#include <fstream>
#include <sstream>

#include "mprod/catalog.hpp"
#include "mprod/error.hpp"
#include "mprod/parse.hpp"

namespace mprod {

  namespace {

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    struct Line {
      std::size_t number;
      std::string keyword;
      std::string rest;
    };

    [[noreturn]] void fail(Line const& l, std::string const& msg) {
      throw Error("line " + std::to_string(l.number) + ": " + msg);
    }

  }  // namespace

  VarietySpec read_variety(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string        raw;
    for (std::size_t n = 1; std::getline(in, raw); ++n) {
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      std::string s = trim(raw);
      if (s.empty()) {
        continue;
      }
      auto sp = s.find_first_of(" \t");
      Line l{n, s.substr(0, sp), sp == std::string::npos ? "" : trim(s.substr(sp))};
      lines.push_back(std::move(l));
    }
    if (lines.empty() || lines.front().keyword != "variety" || lines.front().rest.empty()) {
      throw Error("variety file must start with 'variety <name>'");
    }
    std::string            name = lines.front().rest;
    std::vector<Operation> ops;
    std::vector<Line>      identities, rewrites;
    std::optional<Line>    catalog;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& l = lines[i];
      if (l.keyword == "signature") {
        continue;
      } else if (l.keyword == "op") {
        std::istringstream ls(l.rest);
        std::string        sym;
        long               arity = -1;
        std::string        extra;
        if (!(ls >> sym >> arity) || (ls >> extra)) {
          fail(l, "expected 'op <symbol> <arity>'");
        }
        if (arity <= 0) {
          fail(l, "operation '" + sym + "' must have positive arity");
        }
        ops.push_back({sym, static_cast<unsigned>(arity)});
      } else if (l.keyword == "identity") {
        identities.push_back(l);
      } else if (l.keyword == "rewrite") {
        rewrites.push_back(l);
      } else if (l.keyword == "catalog") {
        if (catalog) {
          fail(l, "duplicate catalog line");
        }
        catalog = l;
      } else {
        fail(l, "unknown directive '" + l.keyword + "'");
      }
    }
    if (ops.empty()) {
      throw Error("variety '" + name + "' declares no operations");
    }
    Signature             sig(name, std::move(ops));
    std::vector<Identity> base;
    for (auto const& l : identities) {
      try {
        base.push_back(parse_identity(l.rest, sig));
      } catch (Error const& e) {
        fail(l, e.what());
      }
    }
    if (catalog) {
      if (!rewrites.empty()) {
        fail(*catalog, "catalog and rewrite rules cannot be combined");
      }
      auto cat = catalog_by_name(catalog->rest, sig);
      if (!cat) {
        fail(*catalog, "unknown catalog tag '" + catalog->rest + "'");
      }
      if (!(cat->signature() == sig)) {
        fail(*catalog, "signature does not match catalog variety " + catalog->rest);
      }
      if (base.empty()) {
        base = cat->base();
      }
      return VarietySpec(name, sig, std::move(base), cat->decision());
    }
    if (!rewrites.empty()) {
      AssertedRewrite rw;
      for (auto const& l : rewrites) {
        try {
          auto [lhs, rhs] = parse_rule(l.rest, sig);
          rw.rules.push_back({lhs, rhs});
        } catch (Error const& e) {
          fail(l, e.what());
        }
      }
      return VarietySpec(name, sig, std::move(base), std::move(rw));
    }
    return VarietySpec(name, sig, std::move(base));
  }

  VarietySpec load_variety(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open variety file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return read_variety(buf.str());
  }

  std::string write_variety(VarietySpec const& V) {
    std::ostringstream out;
    Signature const&   sig = V.signature();
    out << "variety " << V.name() << "\nsignature\n";
    for (auto const& op : sig.operations()) {
      out << "op " << op.symbol << ' ' << op.arity << '\n';
    }
    for (auto const& id : V.base()) {
      out << "identity " << to_string(id, sig) << '\n';
    }
    if (auto d = V.catalog()) {
      out << "catalog " << catalog_name(*d) << '\n';
    } else if (auto const* rw = std::get_if<AssertedRewrite>(&V.decision())) {
      for (auto const& r : rw->rules) {
        out << "rewrite " << to_string(r.lhs, sig) << " -> " << to_string(r.rhs, sig)
            << '\n';
      }
    }
    return out.str();
  }

  VarietySpec resolve_variety(std::string const& tag_or_path) {
    if (auto v = catalog_by_name(tag_or_path)) {
      return *v;
    }
    return load_variety(tag_or_path);
  }

}  // namespace mprod
