#include "mprod/parse.hpp"

#include <cctype>

#include "mprod/error.hpp"

namespace mprod {

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, Signature const& sig)
          : text_(text), sig_(sig) {}

      Term term() {
        skip_space();
        std::size_t start = pos_;
        std::string name  = identifier();
        skip_space();
        auto op = sig_.find(name);
        if (!op) {
          if (peek() == '(') {
            throw ParseError("unknown operation symbol '" + name + "'", start);
          }
          return Term::variable(std::move(name));
        }
        if (peek() != '(') {
          throw ParseError("operation '" + name + "' used without arguments",
                           start);
        }
        ++pos_;
        std::vector<Term> args;
        args.push_back(term());
        skip_space();
        while (peek() == ',') {
          ++pos_;
          args.push_back(term());
          skip_space();
        }
        expect(')');
        if (args.size() != sig_.arity(*op)) {
          throw ParseError("arity mismatch: '" + name + "' expects "
                               + std::to_string(sig_.arity(*op))
                               + " arguments, got "
                               + std::to_string(args.size()),
                           start);
        }
        return Term::apply(*op, std::move(args));
      }

      void expect(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) {
          throw ParseError("expected '" + std::string(token) + "'", pos_);
        }
        pos_ += token.size();
      }

      void expect(char c) {
        expect(std::string_view(&c, 1));
      }

      void finish() {
        skip_space();
        if (pos_ != text_.size()) {
          throw ParseError("unexpected trailing input", pos_);
        }
      }

     private:
      char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      std::string identifier() {
        std::size_t start = pos_;
        auto        is_head
            = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto is_tail = [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos_ >= text_.size() || !is_head(text_[pos_])) {
          throw ParseError("expected identifier", pos_);
        }
        ++pos_;
        while (pos_ < text_.size() && is_tail(text_[pos_])) {
          ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      std::string_view text_;
      Signature const& sig_;
      std::size_t      pos_ = 0;
    };

    void render(Term const& t, Signature const& sig, std::string& out) {
      if (t.is_variable()) {
        out += t.name();
        return;
      }
      out += sig.symbol(t.op());
      out += '(';
      bool first = true;
      for (auto const& a : t.args()) {
        if (!first) {
          out += ',';
        }
        first = false;
        render(a, sig, out);
      }
      out += ')';
    }
  }  // namespace

  Term parse_term(std::string_view text, Signature const& sig) {
    Parser p(text, sig);
    Term   t = p.term();
    p.finish();
    return t;
  }

  Identity parse_identity(std::string_view text, Signature const& sig) {
    Parser p(text, sig);
    Term   lhs = p.term();
    p.expect('=');
    Term rhs = p.term();
    p.finish();
    return Identity(std::move(lhs), std::move(rhs));
  }

  std::pair<Term, Term> parse_rule(std::string_view text,
                                   Signature const& sig) {
    Parser p(text, sig);
    Term   lhs = p.term();
    p.expect("->");
    Term rhs = p.term();
    p.finish();
    return {std::move(lhs), std::move(rhs)};
  }

  std::string to_string(Term const& t, Signature const& sig) {
    std::string out;
    render(t, sig, out);
    return out;
  }

  std::string to_string(Identity const& id, Signature const& sig) {
    return to_string(id.lhs(), sig) + " = " + to_string(id.rhs(), sig);
  }

}  // namespace mprod
