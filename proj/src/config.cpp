#include "cartier/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cartier/error.hpp"

namespace cartier {

namespace {

struct Value {
  enum class Kind { Str, Int, Bool, Array, Table };
  Kind kind = Kind::Table;
  std::string s;
  std::int64_t i = 0;
  bool b = false;
  std::vector<Value> arr;
  std::map<std::string, Value> tbl;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  struct Token {
    enum class Kind { LBracket, RBracket, LBrace, RBrace, Equals, Comma, Dot,
                      String, Integer, Ident, End };
    Kind kind;
    std::string text;
    std::int64_t value = 0;
    int line = 0;
  };

  Token next() {
    skip();
    Token t;
    t.line = line_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = text_[pos_];
    switch (c) {
      case '[': ++pos_; t.kind = Token::Kind::LBracket; return t;
      case ']': ++pos_; t.kind = Token::Kind::RBracket; return t;
      case '{': ++pos_; t.kind = Token::Kind::LBrace; return t;
      case '}': ++pos_; t.kind = Token::Kind::RBrace; return t;
      case '=': ++pos_; t.kind = Token::Kind::Equals; return t;
      case ',': ++pos_; t.kind = Token::Kind::Comma; return t;
      case '.': ++pos_; t.kind = Token::Kind::Dot; return t;
      case '"': {
        ++pos_;
        std::string s;
        while (pos_ < text_.size() && text_[pos_] != '"') {
          if (text_[pos_] == '\n') err("unterminated string");
          s += text_[pos_++];
        }
        if (pos_ >= text_.size()) err("unterminated string");
        ++pos_;
        t.kind = Token::Kind::String;
        t.text = std::move(s);
        return t;
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' ||
                                  text_[pos_] == 'E'))
        err("floats are not allowed; write rationals as strings \"num/den\"");
      t.kind = Token::Kind::Integer;
      t.text = text_.substr(start, pos_ - start);
      try {
        t.value = std::stoll(t.text);
      } catch (...) {
        err("integer out of range: " + t.text);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      t.kind = Token::Kind::Ident;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    err(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrorKind::Config,
         "config line " + std::to_string(line_) + ": " + msg);
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { advance(); }

  Value parse_document() {
    Value root;
    Value* current = &root;
    while (tok_.kind != Lexer::Token::Kind::End) {
      if (tok_.kind == Lexer::Token::Kind::LBracket) {
        advance();
        std::vector<std::string> path = dotted_key();
        expect(Lexer::Token::Kind::RBracket, "']'");
        current = &root;
        for (const auto& k : path) current = &current->tbl[k];
        current->kind = Value::Kind::Table;
      } else if (tok_.kind == Lexer::Token::Kind::Ident ||
                 tok_.kind == Lexer::Token::Kind::String) {
        std::string key = tok_.text;
        advance();
        expect(Lexer::Token::Kind::Equals, "'='");
        if (current->tbl.count(key))
          lex_.err("duplicate key '" + key + "'");
        current->tbl[key] = value();
      } else {
        lex_.err("expected section header or key");
      }
    }
    return root;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  void expect(Lexer::Token::Kind k, const std::string& what) {
    if (tok_.kind != k) lex_.err("expected " + what);
    advance();
  }

  std::vector<std::string> dotted_key() {
    std::vector<std::string> path;
    if (tok_.kind != Lexer::Token::Kind::Ident) lex_.err("expected key");
    path.push_back(tok_.text);
    advance();
    while (tok_.kind == Lexer::Token::Kind::Dot) {
      advance();
      if (tok_.kind != Lexer::Token::Kind::Ident) lex_.err("expected key");
      path.push_back(tok_.text);
      advance();
    }
    return path;
  }

  Value value() {
    Value v;
    switch (tok_.kind) {
      case Lexer::Token::Kind::String:
        v.kind = Value::Kind::Str;
        v.s = tok_.text;
        advance();
        return v;
      case Lexer::Token::Kind::Integer:
        v.kind = Value::Kind::Int;
        v.i = tok_.value;
        advance();
        return v;
      case Lexer::Token::Kind::Ident:
        if (tok_.text == "true" || tok_.text == "false") {
          v.kind = Value::Kind::Bool;
          v.b = tok_.text == "true";
          advance();
          return v;
        }
        lex_.err("bare value '" + tok_.text + "' (strings need quotes)");
      case Lexer::Token::Kind::LBracket: {
        advance();
        v.kind = Value::Kind::Array;
        while (tok_.kind != Lexer::Token::Kind::RBracket) {
          v.arr.push_back(value());
          if (tok_.kind == Lexer::Token::Kind::Comma)
            advance();
          else if (tok_.kind != Lexer::Token::Kind::RBracket)
            lex_.err("expected ',' or ']' in array");
        }
        advance();
        return v;
      }
      case Lexer::Token::Kind::LBrace: {
        advance();
        v.kind = Value::Kind::Table;
        while (tok_.kind != Lexer::Token::Kind::RBrace) {
          if (tok_.kind != Lexer::Token::Kind::Ident &&
              tok_.kind != Lexer::Token::Kind::String)
            lex_.err("expected key in inline table");
          std::string key = tok_.text;
          advance();
          expect(Lexer::Token::Kind::Equals, "'='");
          v.tbl[key] = value();
          if (tok_.kind == Lexer::Token::Kind::Comma)
            advance();
          else if (tok_.kind != Lexer::Token::Kind::RBrace)
            lex_.err("expected ',' or '}' in inline table");
        }
        advance();
        return v;
      }
      default:
        lex_.err("expected a value");
    }
  }

  Lexer lex_;
  Lexer::Token tok_;
};

const Value* find(const Value& root, const std::string& a,
                  const std::string& b = "") {
  auto it = root.tbl.find(a);
  if (it == root.tbl.end()) return nullptr;
  if (b.empty()) return &it->second;
  auto jt = it->second.tbl.find(b);
  if (jt == it->second.tbl.end()) return nullptr;
  return &jt->second;
}

std::string want_string(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Str)
    fail(ErrorKind::Config, what + " must be a string");
  return v.s;
}

std::int64_t want_int(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Int)
    fail(ErrorKind::Config, what + " must be an integer");
  return v.i;
}

std::vector<std::string> want_string_array(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Array)
    fail(ErrorKind::Config, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v.arr) out.push_back(want_string(e, what + " entry"));
  return out;
}

// Accepts an integer or a "num/den" string; returns the canonical string.
std::string want_rational(const Value& v, const std::string& what) {
  if (v.kind == Value::Kind::Int) return std::to_string(v.i);
  if (v.kind == Value::Kind::Str) return v.s;
  fail(ErrorKind::Config, what + " must be an integer or \"num/den\" string");
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  Value root = Parser(text).parse_document();
  JobConfig cfg;

  const Value* ring = find(root, "ring");
  if (!ring) fail(ErrorKind::Config, "missing [ring] section");
  const Value* p = find(*ring, "p");
  if (!p) fail(ErrorKind::Config, "missing ring.p");
  cfg.p = static_cast<std::uint32_t>(want_int(*p, "ring.p"));
  const Value* vars = find(*ring, "vars");
  if (!vars) fail(ErrorKind::Config, "missing ring.vars");
  cfg.vars = want_string_array(*vars, "ring.vars");
  if (const Value* q = find(*ring, "quotient"))
    cfg.quotient = want_string_array(*q, "ring.quotient");
  if (const Value* r = find(*ring, "radical"))
    cfg.radical = want_string_array(*r, "ring.radical");
  if (const Value* mp = find(*ring, "minimal_primes")) {
    if (mp->kind != Value::Kind::Array)
      fail(ErrorKind::Config, "ring.minimal_primes must be an array of arrays");
    std::vector<std::vector<std::string>> primes;
    for (const auto& e : mp->arr)
      primes.push_back(want_string_array(e, "ring.minimal_primes entry"));
    cfg.minimal_primes = std::move(primes);
  }
  if (const Value* d = find(*ring, "domain")) {
    if (d->kind != Value::Kind::Bool)
      fail(ErrorKind::Config, "ring.domain must be true or false");
    cfg.domain = d->b;
  }

  const Value* cart = find(root, "cartier");
  if (!cart) fail(ErrorKind::Config, "missing [cartier] section");
  const Value* gens = find(*cart, "generators");
  if (!gens || gens->kind != Value::Kind::Array)
    fail(ErrorKind::Config, "missing cartier.generators array");
  for (const auto& g : gens->arr) {
    if (g.kind != Value::Kind::Table)
      fail(ErrorKind::Config, "each generator must be { e = ..., f = \"...\" }");
    OpSpec spec;
    auto it = g.tbl.find("e");
    if (it == g.tbl.end()) fail(ErrorKind::Config, "generator missing e");
    spec.e = static_cast<std::uint32_t>(want_int(it->second, "generator e"));
    it = g.tbl.find("f");
    if (it == g.tbl.end()) fail(ErrorKind::Config, "generator missing f");
    spec.f = want_string(it->second, "generator f");
    cfg.generators.push_back(std::move(spec));
  }

  if (const Value* pair = find(root, "pair")) {
    if (const Value* a = find(*pair, "a"))
      cfg.pair_a = want_string_array(*a, "pair.a");
    if (const Value* t = find(*pair, "t"))
      cfg.pair_t = want_rational(*t, "pair.t");
  }

  const Value* task = find(root, "task");
  if (!task) fail(ErrorKind::Config, "missing [task] section");
  const Value* name = find(*task, "name");
  if (!name) fail(ErrorKind::Config, "missing task.name");
  cfg.task = want_string(*name, "task.name");
  if (const Value* v = find(*task, "T")) cfg.T = want_rational(*v, "task.T");
  if (const Value* v = find(*task, "resolution"))
    cfg.resolution = static_cast<std::uint32_t>(want_int(*v, "task.resolution"));
  if (const Value* v = find(*task, "e_cap"))
    cfg.e_cap = static_cast<std::uint32_t>(want_int(*v, "task.e_cap"));
  if (const Value* v = find(*task, "word_limit"))
    cfg.word_limit = static_cast<std::size_t>(want_int(*v, "task.word_limit"));
  if (const Value* v = find(*task, "test_element"))
    cfg.test_element = want_string(*v, "task.test_element");
  if (const Value* v = find(*task, "f")) cfg.oracle_f = want_string(*v, "task.f");
  if (const Value* v = find(*task, "e"))
    cfg.oracle_e = static_cast<std::uint32_t>(want_int(*v, "task.e"));
  if (const Value* v = find(*task, "gauge_cap"))
    cfg.gauge_cap = want_int(*v, "task.gauge_cap");
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, "cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cartier
