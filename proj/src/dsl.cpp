#include "tensq/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "tensq/errors.hpp"

namespace tensq {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace((unsigned char)text_[pos_]))
      bump();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha((unsigned char)c)) {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
        s += text_[pos_];
        bump();
      }
      tok_.kind = Tok::Ident;
      tok_.text = std::move(s);
      return;
    }
    if (std::isdigit((unsigned char)c) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit((unsigned char)text_[pos_ + 1]))) {
      std::string s;
      if (c == '-') {
        s += c;
        bump();
      }
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        s += text_[pos_];
        bump();
      }
      tok_.kind = Tok::Int;
      tok_.text = s;
      try {
        tok_.value = std::stoll(s);
      } catch (const std::out_of_range&) {
        throw ParseError(tok_.line, tok_.col, "integer literal out of range");
      }
      return;
    }
    tok_.kind = Tok::Punct;
    tok_.text = std::string(1, c);
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Presentation parse() {
    expect_keyword("group");
    std::string name = expect_ident("group name");
    expect_punct("{");
    expect_keyword("gens");
    expect_punct(":");
    parse_identlist();
    expect_punct(";");
    expect_keyword("rels");
    expect_punct(":");
    std::vector<Word> relators = parse_wordlist();
    expect_punct(";");
    expect_punct("}");
    if (lex_.peek().kind != Tok::End)
      fail(lex_.peek(), "trailing input after presentation");
    return Presentation(name, names_, relators);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  void expect_keyword(const std::string& kw) {
    Token t = lex_.next();
    if (t.kind != Tok::Ident || t.text != kw)
      fail(t, "expected '" + kw + "'");
  }

  std::string expect_ident(const std::string& what) {
    Token t = lex_.next();
    if (t.kind != Tok::Ident) fail(t, "expected " + what);
    return t.text;
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.next();
    if (t.kind != Tok::Punct || t.text != p) fail(t, "expected '" + p + "'");
  }

  void parse_identlist() {
    for (;;) {
      Token t = lex_.next();
      if (t.kind != Tok::Ident) fail(t, "expected generator name");
      if (index_.count(t.text)) fail(t, "duplicate generator name: " + t.text);
      index_[t.text] = (int)names_.size();
      names_.push_back(t.text);
      if (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
        lex_.next();
        continue;
      }
      break;
    }
  }

  std::vector<Word> parse_wordlist() {
    std::vector<Word> out;
    for (;;) {
      out.push_back(parse_word());
      if (lex_.peek().kind == Tok::Punct && lex_.peek().text == ",") {
        lex_.next();
        continue;
      }
      break;
    }
    return out;
  }

  Word parse_word() {
    if (lex_.peek().kind == Tok::Int) {
      Token t = lex_.next();
      if (t.value != 1) fail(t, "expected '1' or a term");
      return Word();
    }
    Word w = parse_term();
    while (lex_.peek().kind == Tok::Punct && lex_.peek().text == "*") {
      lex_.next();
      w.append(parse_term());
    }
    return w;
  }

  int parse_exponent() {
    Token t = lex_.next();
    if (t.kind != Tok::Int) fail(t, "expected integer exponent");
    if (t.value == 0) fail(t, "zero exponent is not allowed");
    if (t.value > 1000000 || t.value < -1000000)
      fail(t, "exponent out of supported range");
    return (int)t.value;
  }

  Word parse_term() {
    Token t = lex_.next();
    if (t.kind == Tok::Ident) {
      auto it = index_.find(t.text);
      if (it == index_.end()) fail(t, "undeclared generator: " + t.text);
      int e = 1;
      if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "^") {
        lex_.next();
        e = parse_exponent();
      }
      return Word::single(it->second, e);
    }
    if (t.kind == Tok::Punct && t.text == "[") {
      Word a = parse_word();
      expect_punct(",");
      Word b = parse_word();
      expect_punct("]");
      return commutator(a, b);
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      Word w = parse_word();
      expect_punct(")");
      if (lex_.peek().kind == Tok::Punct && lex_.peek().text == "^") {
        lex_.next();
        return pow(w, parse_exponent());
      }
      return w;
    }
    fail(t, "expected a term");
  }

  Lexer lex_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  return Parser(text).parse();
}

std::string print_word(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.syllables()) {
    if (!first) os << "*";
    first = false;
    os << p.generator_names().at(l.gen);
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

std::string print_presentation(const Presentation& p) {
  if (p.generator_count() == 0)
    throw BadParams("the DSL cannot express a presentation with no generators");
  std::ostringstream os;
  os << "group " << p.name() << " {\n  gens: ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) os << ", ";
    os << p.generator_names()[i];
  }
  os << ";\n  rels: ";
  if (p.relators().empty()) {
    os << "1";
  } else {
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      if (i) os << ", ";
      os << print_word(p.relators()[i], p);
    }
  }
  os << ";\n}\n";
  return os.str();
}

}  // namespace tensq
