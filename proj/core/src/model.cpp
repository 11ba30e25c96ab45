#include "intnfa/model.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "intnfa/errors.hpp"

namespace intnfa {

namespace {

enum class Tok { Ident, Zero, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blanks();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += advance();
      }
      return t;
    }
    if (std::isdigit(u)) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
        t.text += advance();
      }
      if (t.text != "0") throw ParseError("unexpected token '" + t.text + "'", t.line, t.column);
      t.kind = Tok::Zero;
      return t;
    }
    if (std::string_view("(),;[]!?").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = advance();
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
  }

private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  Signature parse_signature() {
    auto lifelines = name_list("lifelines");
    auto messages = name_list("messages");
    try {
      return Signature(std::move(lifelines), std::move(messages));
    } catch (const InputError& e) {
      throw ParseError(e.what(), sig_line_, sig_column_);
    }
  }

  Interaction parse_root(const Signature& sig) {
    sig_ = &sig;
    auto term = parse_term();
    if (is_punct(";")) shift();
    if (cur_.kind != Tok::End) fail("expected end of input but found " + describe(cur_));
    return term;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, cur_.line, cur_.column);
  }

  void shift() { cur_ = lex_.next(); }
  bool is_punct(std::string_view p) const { return cur_.kind == Tok::Punct && cur_.text == p; }

  void expect(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "' but found " + describe(cur_));
    shift();
  }

  std::vector<std::string> name_list(std::string_view keyword) {
    if (cur_.kind != Tok::Ident || cur_.text != keyword) {
      fail("expected '" + std::string(keyword) + "' but found " + describe(cur_));
    }
    sig_line_ = cur_.line;
    sig_column_ = cur_.column;
    shift();
    std::vector<std::string> names;
    while (cur_.kind == Tok::Ident) {
      names.push_back(cur_.text);
      shift();
    }
    expect(";");
    return names;
  }

  LifelineId lifeline(const Token& t) const {
    auto id = sig_->find_lifeline(t.text);
    if (!id) throw ParseError("undeclared lifeline '" + t.text + "'", t.line, t.column);
    return *id;
  }

  Interaction parse_term() {
    if (cur_.kind == Tok::Zero) {
      shift();
      return Interaction::empty();
    }
    if (cur_.kind != Tok::Ident) fail("expected an interaction but found " + describe(cur_));
    Token head = cur_;
    shift();
    if (is_punct("!") || is_punct("?")) return parse_action(head);
    if (head.text == "loopS") {
      expect("(");
      auto body = parse_term();
      expect(")");
      return Interaction::loop_s(std::move(body));
    }
    if (head.text == "coreg") {
      expect("[");
      std::vector<LifelineId> ids;
      while (cur_.kind == Tok::Ident) {
        ids.push_back(lifeline(cur_));
        shift();
      }
      expect("]");
      expect("(");
      auto left = parse_term();
      expect(",");
      auto right = parse_term();
      expect(")");
      return Interaction::coreg(LifelineSet(std::move(ids)), std::move(left), std::move(right));
    }
    if (head.text == "strict" || head.text == "seq" || head.text == "alt" || head.text == "par") {
      expect("(");
      std::vector<Interaction> args{parse_term()};
      if (!is_punct(",")) fail("expected ',' but found " + describe(cur_));
      while (is_punct(",")) {
        shift();
        args.push_back(parse_term());
      }
      expect(")");
      return fold(head.text, std::move(args));
    }
    throw ParseError("unknown operator '" + head.text + "'", head.line, head.column);
  }

  Interaction parse_action(const Token& head) {
    auto direction = cur_.text == "!" ? Direction::Emission : Direction::Reception;
    shift();
    if (cur_.kind != Tok::Ident) fail("expected a message name but found " + describe(cur_));
    auto l = lifeline(head);
    auto m = sig_->find_message(cur_.text);
    if (!m) fail("undeclared message '" + cur_.text + "'");
    shift();
    return Interaction::act(Action{l, direction, *m});
  }

  Interaction fold(const std::string& op, std::vector<Interaction> args) const {
    Interaction acc = std::move(args.back());
    for (auto k = args.size() - 1; k-- > 0;) {
      if (op == "strict") {
        acc = Interaction::strict(std::move(args[k]), std::move(acc));
      } else if (op == "seq") {
        acc = Interaction::seq(std::move(args[k]), std::move(acc));
      } else if (op == "alt") {
        acc = Interaction::alt(std::move(args[k]), std::move(acc));
      } else {
        acc = Interaction::par(*sig_, std::move(args[k]), std::move(acc));
      }
    }
    return acc;
  }

  Lexer lex_;
  Token cur_;
  const Signature* sig_ = nullptr;
  std::size_t sig_line_ = 1;
  std::size_t sig_column_ = 1;
};

}  // namespace

Model parse_model(std::string_view text) {
  Parser p(text);
  Model m;
  m.signature = p.parse_signature();
  m.term = p.parse_root(m.signature);
  return m;
}

Interaction parse_term(const Signature& sig, std::string_view text) {
  Parser p(text);
  return p.parse_root(sig);
}

std::string print_model(const Model& m) {
  std::string out = "lifelines";
  for (const auto& l : m.signature.lifelines()) out += " " + l;
  out += ";\nmessages";
  for (const auto& msg : m.signature.messages()) out += " " + msg;
  out += ";\n" + to_string(m.term, m.signature) + "\n";
  return out;
}

}  // namespace intnfa
