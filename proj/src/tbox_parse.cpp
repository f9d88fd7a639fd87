#include "stir/tbox.hpp"

#include "stir/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace stir {
namespace {

// ── Lexer ────────────────────────────────────────────────────────────────────

enum class Tok {
  Ident,     // identifiers and keywords; hyphens followed by a letter fold in
  Number,    // optionally signed rational p or p/q
  NegInf,    // -inf
  PosInf,    // +inf
  LParen, RParen,
  LBracket, RBracket,
  LBrace, RBrace,
  LAngle, RAngle,
  Comma, Dot, Assign,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

struct ParseError {
  int line, col;
  std::string message;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (at_end()) return t;  // Tok::End

    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Tok::Ident;
      t.text = lex_ident();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      t.text = lex_number();
      return t;
    }
    if (c == '+' || c == '-') {
      advance();
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        t.kind = Tok::Number;
        t.text = (c == '-' ? "-" : "") + lex_number();
        return t;
      }
      if (match_word("inf")) {
        t.kind = (c == '-') ? Tok::NegInf : Tok::PosInf;
        t.text = std::string(1, c) + "inf";
        return t;
      }
      throw ParseError{t.line, t.col, std::string("stray '") + c + "'"};
    }

    advance();
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case '<': t.kind = Tok::LAngle; break;
      case '>': t.kind = Tok::RAngle; break;
      case ',': t.kind = Tok::Comma; break;
      case '.': t.kind = Tok::Dot; break;
      case ':':
        if (!at_end() && peek() == '=') {
          advance();
          t.kind = Tok::Assign;
          break;
        }
        throw ParseError{t.line, t.col, "expected ':=' after ':'"};
      default:
        throw ParseError{t.line, t.col,
                         std::string("unexpected character '") + c + "'"};
    }
    t.text = text_.substr(0, 0);
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // A '-' inside an identifier folds in when followed by a letter, so Allen
  // names like met-by and overlapped-by lex as single identifiers.
  std::string lex_ident() {
    std::string s;
    while (!at_end()) {
      char c = peek();
      if (ident_char(c)) {
        s += c;
        advance();
      } else if (c == '-' && std::isalpha(static_cast<unsigned char>(peek2()))) {
        s += c;
        advance();
      } else {
        break;
      }
    }
    return s;
  }

  std::string lex_number() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    if (!at_end() && peek() == '/') {
      s += '/';
      advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError{line_, col_, "expected digits after '/' in rational"};
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        s += peek();
        advance();
      }
    }
    return s;
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    if (after < text_.size() && ident_char(text_[after])) return false;
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return true;
  }
};

// ── Parser ───────────────────────────────────────────────────────────────────

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { shift(); }

  TBox parse() {
    TBox t;
    expect_keyword("domain");
    Token dom = expect(Tok::Ident, "domain name");
    t.domain = find_domain(dom.text);
    if (t.domain == nullptr)
      throw ParseError{dom.line, dom.col, "unknown domain '" + dom.text + "'"};
    expect(Tok::Dot, "'.' after domain declaration");

    if (cur_.kind == Tok::End)
      throw ParseError{cur_.line, cur_.col, "expected at least one axiom"};
    while (cur_.kind != Tok::End) t.axioms.push_back(parse_axiom(t));
    return t;
  }

 private:
  Lexer lex_;
  Token cur_;

  void shift() { cur_ = lex_.next(); }

  Token expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError{cur_.line, cur_.col, "expected " + what};
    Token t = cur_;
    shift();
    return t;
  }

  void expect_keyword(const std::string& word) {
    if (cur_.kind != Tok::Ident || cur_.text != word)
      throw ParseError{cur_.line, cur_.col, "expected '" + word + "'"};
    shift();
  }

  bool at_keyword(std::string_view word) const {
    return cur_.kind == Tok::Ident && cur_.text == word;
  }

  static bool is_defined_name(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
  }
  static bool is_primitive_name(const std::string& s) {
    return !s.empty() && s[0] == 'p';
  }
  static bool is_feature_name(const std::string& s) {
    return !s.empty() && s[0] == 'g';
  }

  Axiom parse_axiom(const TBox& t) {
    Token name = expect(Tok::Ident, "defined concept name");
    if (!is_defined_name(name.text))
      throw ParseError{name.line, name.col,
                       "defined concept names start with an uppercase letter"};
    for (const Axiom& prev : t.axioms)
      if (prev.name == name.text)
        throw ParseError{name.line, name.col,
                         "duplicate definition " + name.text};
    expect(Tok::Assign, "':='");
    Axiom a;
    a.name = name.text;
    a.line = name.line;
    a.col = name.col;
    a.rhs = parse_concept(t);
    expect(Tok::Dot, "'.' at end of axiom");
    return a;
  }

  Concept parse_concept(const TBox& t) {
    std::vector<Concept> alts;
    alts.push_back(parse_conjunction(t));
    while (at_keyword("or")) {
      shift();
      alts.push_back(parse_conjunction(t));
    }
    if (alts.size() == 1) return std::move(alts.front());
    return Concept::disj(std::move(alts));
  }

  Concept parse_conjunction(const TBox& t) {
    std::vector<Concept> parts;
    parts.push_back(parse_unit(t));
    while (at_keyword("and")) {
      shift();
      parts.push_back(parse_unit(t));
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Concept::conj(std::move(parts));
  }

  Concept parse_unit(const TBox& t) {
    if (cur_.kind == Tok::LParen) {
      shift();
      Concept c = parse_concept(t);
      expect(Tok::RParen, "')'");
      return c;
    }
    Token tok = expect(Tok::Ident, "a concept");
    if (tok.text == "top") return Concept::top();
    if (tok.text == "bottom") return Concept::bottom();
    if (tok.text == "not") {
      Token prim = expect(Tok::Ident, "primitive concept name after 'not'");
      if (!is_primitive_name(prim.text))
        throw ParseError{prim.line, prim.col,
                         "primitive concept names start with 'p'"};
      return Concept::literal(prim.text, false);
    }
    if (tok.text == "some") return parse_predicate(t);
    if (tok.text == "exists") return parse_exists(tok);
    if (is_primitive_name(tok.text)) return Concept::literal(tok.text, true);
    throw ParseError{tok.line, tok.col,
                     "expected a concept, got '" + tok.text + "'"};
  }

  // some(g1,...,gk).ATOM  or  some(g1,...,gk).{ATOM,...}
  Concept parse_predicate(const TBox& t) {
    expect(Tok::LParen, "'(' after 'some'");
    std::vector<std::string> feats;
    for (;;) {
      Token f = expect(Tok::Ident, "feature name");
      if (!is_feature_name(f.text))
        throw ParseError{f.line, f.col, "feature names start with 'g'"};
      feats.push_back(f.text);
      if (cur_.kind == Tok::Comma) {
        shift();
        continue;
      }
      break;
    }
    Token close = expect(Tok::RParen, "')' after feature list");
    if (static_cast<int>(feats.size()) != t.domain->arity())
      throw ParseError{close.line, close.col,
                       "predicate arity " + std::to_string(feats.size()) +
                           " does not match domain " + t.domain->name() +
                           " (arity " + std::to_string(t.domain->arity()) + ")"};
    expect(Tok::Dot, "'.' after feature list");

    std::uint32_t atoms = 0;
    if (cur_.kind == Tok::LBrace) {
      shift();
      for (;;) {
        atoms |= parse_domain_atom(t);
        if (cur_.kind == Tok::Comma) {
          shift();
          continue;
        }
        break;
      }
      expect(Tok::RBrace, "'}' after atom list");
    } else {
      atoms = parse_domain_atom(t);
    }
    return Concept::predicate(std::move(feats), atoms);
  }

  std::uint32_t parse_domain_atom(const TBox& t) {
    Token a = expect(Tok::Ident, "domain atom name");
    std::optional<int> idx = t.domain->atom_index(a.text);
    if (!idx)
      throw ParseError{a.line, a.col, "unknown " + t.domain->name() +
                                          " atom '" + a.text + "'"};
    return std::uint32_t{1} << *idx;
  }

  // exists ROLE . DefinedName, where ROLE is an Allen atom name, a bare '<'
  // or '>', or a 4-tuple <ival,ival,ival,ival>.
  Concept parse_exists(const Token& kw) {
    EndpointRole role;
    if (cur_.kind == Tok::LAngle) {
      Token open = cur_;
      shift();
      if (cur_.kind == Tok::LBracket || cur_.kind == Tok::LParen ||
          cur_.kind == Tok::LBrace) {
        role.rbb = parse_interval_set();
        expect(Tok::Comma, "','");
        role.rbe = parse_interval_set();
        expect(Tok::Comma, "','");
        role.reb = parse_interval_set();
        expect(Tok::Comma, "','");
        role.ree = parse_interval_set();
        expect(Tok::RAngle, "'>' closing the role tuple");
      } else if (cur_.kind == Tok::Dot) {
        role = translate_atom(AllenAtom::Before);
      } else {
        throw ParseError{open.line, open.col,
                         "expected a role tuple or '.' after '<'"};
      }
    } else if (cur_.kind == Tok::RAngle) {
      shift();
      role = translate_atom(AllenAtom::After);
    } else if (cur_.kind == Tok::Ident) {
      std::optional<AllenAtom> atom = atom_from_name(cur_.text);
      if (!atom)
        throw ParseError{cur_.line, cur_.col,
                         "unknown interval relation '" + cur_.text + "'"};
      role = translate_atom(*atom);
      shift();
    } else {
      throw ParseError{kw.line, kw.col, "expected a role after 'exists'"};
    }
    expect(Tok::Dot, "'.' after role");
    Token target = expect(Tok::Ident, "defined concept name");
    if (!is_defined_name(target.text))
      throw ParseError{target.line, target.col,
                       "role targets must be defined concept names"};
    return Concept::exists_role(std::move(role), target.text);
  }

  Rat parse_finite_bound() {
    Token n = expect(Tok::Number, "a rational number");
    std::optional<Rat> r = parse_rat(n.text);
    if (!r) throw ParseError{n.line, n.col, "malformed rational '" + n.text + "'"};
    return *r;
  }

  ConvexSet parse_interval_set() {
    if (cur_.kind == Tok::LBrace) {
      shift();
      Rat v = parse_finite_bound();
      expect(Tok::RBrace, "'}' after singleton value");
      return ConvexSet::singleton(v);
    }
    Token open = cur_;
    if (open.kind != Tok::LBracket && open.kind != Tok::LParen)
      throw ParseError{open.line, open.col, "expected an interval"};
    shift();

    Bound lo;
    if (cur_.kind == Tok::NegInf) {
      lo = Bound::neg_inf();
      shift();
    } else if (cur_.kind == Tok::PosInf) {
      lo = Bound::pos_inf();
      shift();
    } else {
      Rat v = parse_finite_bound();
      lo = (open.kind == Tok::LBracket) ? Bound::closed(v) : Bound::open(v);
    }
    expect(Tok::Comma, "',' between interval bounds");
    Bound hi;
    if (cur_.kind == Tok::PosInf) {
      hi = Bound::pos_inf();
      shift();
    } else if (cur_.kind == Tok::NegInf) {
      hi = Bound::neg_inf();
      shift();
    } else {
      hi.kind = Bound::Finite;
      hi.value = parse_finite_bound();
    }
    Token close = cur_;
    if (close.kind == Tok::RBracket) {
      if (hi.kind == Bound::Finite) hi.strict = false;
      shift();
    } else if (close.kind == Tok::RParen) {
      if (hi.kind == Bound::Finite) hi.strict = true;
      shift();
    } else {
      throw ParseError{close.line, close.col, "expected ')' or ']'"};
    }
    return ConvexSet(lo, hi);
  }
};

}  // namespace

ParseResult parse_tbox(std::string_view text) {
  ParseResult r;
  try {
    Parser p(text);
    r.tbox = p.parse();
  } catch (const ParseError& e) {
    r.errors.push_back(Diagnostic{e.line, e.col, e.message});
  }
  return r;
}

}  // namespace stir
