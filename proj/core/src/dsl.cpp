#include "multinet/dsl.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "multinet/connectives.hpp"
#include "multinet/errors.hpp"

namespace multinet {
namespace {

enum class Tok { name, integer, colon, turnstile, query, comma, dot, lparen, rparen, bar, hash, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::name: return "a name";
    case Tok::integer: return "a number";
    case Tok::colon: return "':'";
    case Tok::turnstile: return "':-'";
    case Tok::query: return "'?-'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::bar: return "'|'";
    case Tok::hash: return "'#'";
    case Tok::end: return "end of input";
  }
  return "?";
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line;
    std::size_t cl = col;
    if (name_start(c)) {
      std::size_t j = i;
      while (j < src.size() && name_char(src[j])) ++j;
      out.push_back({Tok::name, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])) != 0) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == ":-") {
      out.push_back({Tok::turnstile, ":-", l, cl});
      advance(2);
      continue;
    }
    if (two == "?-") {
      out.push_back({Tok::query, "?-", l, cl});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case ':': k = Tok::colon; break;
      case ',': k = Tok::comma; break;
      case '.': k = Tok::dot; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '|': k = Tok::bar; break;
      case '#': k = Tok::hash; break;
      default:
        throw ParseError(l, cl, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Limits& limits) : toks_(std::move(toks)), limits_(limits) {}

  Program parse() {
    while (peek().kind != Tok::end) {
      switch (peek().kind) {
        case Tok::hash: pragma(); break;
        case Tok::query: goal(); break;
        case Tok::name: method(); break;
        default: fail(peek(), "expected a method, '#use' or '?-'");
      }
    }
    return std::move(prog_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Limits limits_;
  Program prog_;
  bool has_goal_ = false;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }
  const Token& expect(Tok k) {
    if (peek().kind != k) {
      fail(peek(), std::string("expected ") + describe(k) + ", found " +
                       (peek().kind == Tok::end ? "end of input" : "'" + peek().text + "'"));
    }
    return take();
  }

  std::vector<std::string> atom_list(Tok sep) {
    std::vector<std::string> atoms{expect(Tok::name).text};
    while (accept(sep)) atoms.push_back(expect(Tok::name).text);
    return atoms;
  }

  std::size_t integer() {
    const Token& t = expect(Tok::integer);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(t, "number out of range");
    return v;
  }

  void pragma() {
    expect(Tok::hash);
    const Token& kw = expect(Tok::name);
    if (kw.text != "use") fail(kw, "unknown pragma #" + kw.text);
    const Token& family = expect(Tok::name);
    if (family.text != "G" && family.text != "Gdual") fail(family, "unknown connective " + family.text);
    expect(Tok::lparen);
    std::size_t u = integer();
    expect(Tok::comma);
    std::size_t v = integer();
    expect(Tok::rparen);
    const Token& as = expect(Tok::name);
    if (as.text != "as") fail(as, "expected 'as'");
    const Token& name = expect(Tok::name);
    expect(Tok::dot);
    if (prog_.bindings.contains(name.text)) fail(name, "binding " + name.text + " is already defined");
    try {
      prog_.bindings.emplace(name.text,
                             girard_type(u, v, family.text == "G" ? Polarity::primal : Polarity::dual, limits_));
    } catch (const DomainError& e) {
      fail(family, e.what());
    } catch (const ResourceError& e) {
      fail(family, e.what());
    }
  }

  void goal() {
    const Token& q = expect(Tok::query);
    if (has_goal_) fail(q, "a program has at most one goal");
    has_goal_ = true;
    prog_.goal = atom_list(Tok::comma);
    expect(Tok::dot);
  }

  const LinkType& binding(const Token& t, bool synchronizer) {
    auto it = prog_.bindings.find(t.text);
    if (it == prog_.bindings.end()) fail(t, "unknown binding " + t.text);
    bool dual = it->second.name().rfind("Gdual_", 0) == 0;
    if (synchronizer && !dual) fail(t, t.text + " is a G link; a synchronizer needs Gdual(u,2)");
    if (!synchronizer && dual) fail(t, t.text + " is a Gdual link; a generalized body needs G(u,v)");
    return it->second;
  }

  Clause clause() {
    if (accept(Tok::lparen)) {
      Clause c;
      c.atoms = atom_list(Tok::bar);
      expect(Tok::rparen);
      return c;
    }
    const Token& name = expect(Tok::name);
    Clause c;
    c.girard = name.text;
    c.girard_type = binding(name, false);
    expect(Tok::lparen);
    c.atoms = atom_list(Tok::comma);
    expect(Tok::rparen);
    if (c.atoms.size() != c.girard_type->n_in()) {
      fail(name, name.text + " takes " + std::to_string(c.girard_type->n_in()) + " atoms, got " +
                     std::to_string(c.atoms.size()));
    }
    return c;
  }

  void method() {
    const Token& name = expect(Tok::name);
    expect(Tok::colon);
    if (prog_.methods.contains(name.text)) fail(name, "duplicate method " + name.text);
    Method m;
    m.name = name.text;
    m.line = name.line;
    if (peek().kind != Tok::name) fail(peek(), "empty head: a method needs at least one head atom");
    m.head = atom_list(Tok::comma);
    if (accept(Tok::turnstile)) {
      m.body.push_back(clause());
      while (accept(Tok::comma)) m.body.push_back(clause());
    }
    if (peek().kind == Tok::name && peek().text == "by") {
      take();
      const Token& sync = expect(Tok::name);
      m.synchronizer = sync.text;
      m.synchronizer_type = binding(sync, true);
      std::size_t u = m.synchronizer_type->n_in() / 2;
      if (m.head.size() != u || m.body.size() != u) {
        fail(sync, sync.text + " synchronizes " + std::to_string(u) + " heads with " + std::to_string(u) + " clauses");
      }
    }
    expect(Tok::dot);
    prog_.methods.emplace(m.name, std::move(m));
  }
};

}  // namespace

Program parse_program(std::string_view text, const Limits& limits) {
  return Parser(lex(text), limits).parse();
}

std::string format_method(const Method& m, bool unicode) {
  std::string out = m.name + ": ";
  for (std::size_t k = 0; k < m.head.size(); ++k) {
    if (k > 0) out += unicode ? " ⊗ " : ", ";
    out += m.head[k];
  }
  if (!m.body.empty()) {
    out += " :- ";
    for (std::size_t c = 0; c < m.body.size(); ++c) {
      if (c > 0) out += ", ";
      const Clause& cl = m.body[c];
      if (!cl.girard.empty()) out += cl.girard;
      out += "(";
      for (std::size_t j = 0; j < cl.atoms.size(); ++j) {
        if (j > 0) out += cl.girard.empty() ? (unicode ? " ⅋ " : " | ") : ", ";
        out += cl.atoms[j];
      }
      out += ")";
    }
  }
  if (!m.synchronizer.empty()) out += " by " + m.synchronizer;
  return out + ".";
}

}  // namespace multinet
