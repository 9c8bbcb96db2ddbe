#include "mprod/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "mprod/error.hpp"

namespace mprod {

  namespace {
    struct Token {
      std::string text;
      std::size_t offset;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            ++i;
          }
          continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))
               && text[i] != '#') {
          ++i;
        }
        out.push_back({std::string(text.substr(start, i - start)), start});
      }
      return out;
    }

    class Reader {
     public:
      explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

      bool done() const {
        return pos_ >= tokens_.size();
      }
      Token const& peek() const {
        return tokens_.at(pos_);
      }
      Token next(char const* what) {
        if (done()) {
          throw ParseError(std::string("unexpected end of input, expected ") + what,
                           tokens_.empty() ? 0 : tokens_.back().offset);
        }
        return tokens_[pos_++];
      }
      void keyword(char const* kw) {
        auto t = next(kw);
        if (t.text != kw) {
          throw ParseError(std::string("expected '") + kw + "', got '" + t.text + "'",
                           t.offset);
        }
      }
      std::size_t number(char const* what) {
        auto t = next(what);
        if (t.text.empty()
            || t.text.find_first_not_of("0123456789") != std::string::npos) {
          throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                           t.offset);
        }
        return std::stoul(t.text);
      }

     private:
      std::vector<Token> tokens_;
      std::size_t        pos_ = 0;
    };
  }  // namespace

  FiniteAlgebra read_algebra(std::string_view text) {
    Reader r(tokenize(text));
    r.keyword("algebra");
    std::string name = r.next("algebra name").text;
    r.keyword("size");
    std::size_t n = r.number("size");
    if (n == 0) {
      throw Error("algebra size must be positive");
    }
    std::vector<std::string> names;
    if (!r.done() && r.peek().text == "names") {
      r.next("names");
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(r.next("element name").text);
      }
    }
    std::vector<Operation>            ops;
    std::vector<std::vector<Element>> tables;
    while (!r.done()) {
      r.keyword("op");
      std::string symbol = r.next("operation symbol").text;
      auto        arity  = static_cast<unsigned>(r.number("arity"));
      if (arity == 0) {
        throw Error("nullary operation '" + symbol + "' is not supported");
      }
      std::size_t entries = 1;
      for (unsigned i = 0; i < arity; ++i) {
        entries *= n;
      }
      std::vector<Element> tab;
      tab.reserve(entries);
      for (std::size_t i = 0; i < entries; ++i) {
        auto tok = r.next("table entry");
        bool found = false;
        for (Element e = 0; e < names.size(); ++e) {
          if (names[e] == tok.text) {
            tab.push_back(e);
            found = true;
            break;
          }
        }
        if (found) {
          continue;
        }
        if (tok.text.find_first_not_of("0123456789") != std::string::npos) {
          throw ParseError("bad table entry '" + tok.text + "'", tok.offset);
        }
        auto v = std::stoul(tok.text);
        if (v >= n) {
          throw ParseError("table entry '" + tok.text + "' out of range", tok.offset);
        }
        tab.push_back(static_cast<Element>(v));
      }
      ops.push_back({symbol, arity});
      tables.push_back(std::move(tab));
    }
    Signature sig(name, std::move(ops));
    return FiniteAlgebra(name, std::move(sig), n, std::move(tables), std::move(names));
  }

  FiniteAlgebra load_algebra(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open algebra file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return read_algebra(buf.str());
  }

  std::string write_algebra(FiniteAlgebra const& A) {
    std::ostringstream out;
    std::string        name = A.name();
    for (auto& c : name) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        c = '_';
      }
    }
    out << "algebra " << name << '\n' << "size " << A.size() << '\n';
    if (A.has_names()) {
      out << "names";
      for (auto const& nm : A.names()) {
        out << ' ' << nm;
      }
      out << '\n';
    }
    for (OpIndex op = 0; op < A.signature().size(); ++op) {
      out << "op " << A.signature().symbol(op) << ' ' << A.signature().arity(op)
          << '\n';
      auto tab = A.table(op);
      for (std::size_t i = 0; i < tab.size(); ++i) {
        out << tab[i] << ((i + 1) % A.size() == 0 ? '\n' : ' ');
      }
    }
    return out.str();
  }

  namespace builtin {
    char const* const kCounterexample = R"(algebra paper_A
size 4
names a e b f
op mul 2
1 1 2 3
1 1 3 3
2 3 3 3
3 3 3 3
)";

    FiniteAlgebra counterexample_algebra() {
      return read_algebra(kCounterexample);
    }
  }  // namespace builtin

}  // namespace mprod
