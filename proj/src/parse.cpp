#include "stal/parse.hpp"

#include <cctype>
#include <vector>

namespace stal {

namespace {

struct Token {
  enum Type { LParen, RParen, LBrace, RBrace, Comma, Dot, Semi, Assign, Word, End } type;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t pos = 0;
  int line = 1, col = 1;
  while (pos < src.size()) {
    char c = src[pos];
    if (c == '#') {
      while (pos < src.size() && src[pos] != '\n') ++pos;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++pos;
      continue;
    }
    auto single = [&](Token::Type t) {
      out.push_back({t, std::string(1, c), line, col});
      ++pos;
      ++col;
    };
    switch (c) {
      case '(': single(Token::LParen); continue;
      case ')': single(Token::RParen); continue;
      case '{': single(Token::LBrace); continue;
      case '}': single(Token::RBrace); continue;
      case ',': single(Token::Comma); continue;
      case '.': single(Token::Dot); continue;
      case ';': single(Token::Semi); continue;
      case ':':
        if (pos + 1 < src.size() && src[pos + 1] == '=') {
          out.push_back({Token::Assign, ":=", line, col});
          pos += 2;
          col += 2;
          continue;
        }
        throw ParseError("stray ':'", line, col);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      int startcol = col;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        ++pos;
        ++col;
      }
      out.push_back({Token::Word, src.substr(start, pos - start), line, startcol});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.type != Token::End) ++pos_;
    return t;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

class ConceptParser {
 public:
  ConceptParser(TokenStream& ts, const TBox& tb) : ts_(ts), tb_(tb) {}

  Concept concept_() {
    const Token& t = ts_.take();
    if (t.type == Token::Word) {
      if (t.text == "top") return Concept::top();
      if (t.text == "bot") return Concept::bot();
      if (tb_.sig.primitives.count(t.text) || tb_.is_defined(t.text))
        return Concept::name(t.text);
      throw ParseError("undeclared concept name " + t.text, t.line, t.col);
    }
    if (t.type != Token::LParen) throw ParseError("expected concept", t.line, t.col);
    Token head = expect_word("concept operator");
    Concept out;
    if (head.text == "not") {
      out = Concept::neg(concept_());
    } else if (head.text == "and" || head.text == "or") {
      Concept l = concept_();
      Concept r = concept_();
      out = head.text == "and" ? Concept::conj(l, r) : Concept::disj(l, r);
    } else if (head.text == "some" || head.text == "all") {
      Token role = expect_word("role name");
      if (!tb_.sig.is_role_name(role.text))
        throw ParseError("undeclared role " + role.text, role.line, role.col);
      Concept body = concept_();
      out = head.text == "some" ? Concept::some(role.text, body) : Concept::all(role.text, body);
    } else if (head.text == "pred") {
      out = pred(head);
    } else {
      throw ParseError("unknown operator " + head.text, head.line, head.col);
    }
    expect(Token::RParen, ")");
    return out;
  }

 private:
  Concept pred(const Token& head) {
    auto alg = tb_.sig.algebra;
    if (!alg) throw ParseError("pred used but no algebra declared", head.line, head.col);
    std::vector<FeatureChain> chains;
    while (ts_.peek().type == Token::LParen) {
      ts_.take();
      FeatureChain ch;
      std::vector<Token> names{expect_word("feature name")};
      while (ts_.peek().type == Token::Dot) {
        ts_.take();
        names.push_back(expect_word("feature name"));
      }
      expect(Token::RParen, ")");
      for (size_t i = 0; i + 1 < names.size(); ++i) {
        if (!tb_.sig.features.count(names[i].text))
          throw ParseError("undeclared feature " + names[i].text, names[i].line, names[i].col);
        ch.prefix.push_back(names[i].text);
      }
      const Token& last = names.back();
      if (!tb_.sig.cfeatures.count(last.text))
        throw ParseError("chain must end in a declared cfeature, got " + last.text, last.line,
                         last.col);
      ch.terminal = last.text;
      chains.push_back(std::move(ch));
    }
    if (static_cast<int>(chains.size()) != alg->arity())
      throw ParseError("pred expects " + std::to_string(alg->arity()) + " chains, got " +
                           std::to_string(chains.size()),
                       head.line, head.col);
    Token brace = expect(Token::LBrace, "{");
    std::vector<std::string> atoms;
    atoms.push_back(expect_word("atom").text);
    while (ts_.peek().type == Token::Comma) {
      ts_.take();
      atoms.push_back(expect_word("atom").text);
    }
    expect(Token::RBrace, "}");
    try {
      return Concept::pred(std::move(chains), relation_from_atoms(alg, atoms));
    } catch (const InputError& e) {
      throw ParseError(e.what(), brace.line, brace.col);
    }
  }

  Token expect(Token::Type type, const char* what) {
    Token t = ts_.take();
    if (t.type != type) throw ParseError(std::string("expected ") + what, t.line, t.col);
    return t;
  }

  Token expect_word(const char* what) { return expect(Token::Word, what); }

  TokenStream& ts_;
  const TBox& tb_;
};

}  // namespace

Concept parse_concept(const std::string& text, const TBox& tb) {
  TokenStream ts(lex(text));
  ConceptParser p(ts, tb);
  Concept c = p.concept_();
  const Token& rest = ts.peek();
  if (rest.type != Token::End)
    throw ParseError("trailing input after concept", rest.line, rest.col);
  return c;
}

Qcsp parse_csp(const std::string& text, std::shared_ptr<const QualitativeAlgebra> alg) {
  Qcsp csp(alg);
  TokenStream ts(lex(text));
  auto expect = [&](Token::Type type, const char* what) {
    Token t = ts.take();
    if (t.type != type) throw ParseError(std::string("expected ") + what, t.line, t.col);
    return t;
  };
  while (ts.peek().type != Token::End) {
    Token x = expect(Token::Word, "variable name");
    Token y = expect(Token::Word, "variable name");
    Token brace = expect(Token::LBrace, "{");
    std::vector<std::string> atoms;
    atoms.push_back(expect(Token::Word, "atom").text);
    while (ts.peek().type == Token::Comma) {
      ts.take();
      atoms.push_back(expect(Token::Word, "atom").text);
    }
    expect(Token::RBrace, "}");
    expect(Token::Semi, ";");
    Relation rel;
    try {
      rel = relation_from_atoms(alg, atoms);
    } catch (const InputError& e) {
      throw ParseError(e.what(), brace.line, brace.col);
    }
    int vx = csp.variable(x.text);
    int vy = csp.variable(y.text);
    csp.constrain(vx, vy, rel.mask);
  }
  return csp;
}

TBox parse_tbox(const std::string& text) {
  // Two passes so axiom right-hand sides may reference names defined further
  // down the file.
  std::vector<Token> toks = lex(text);
  TBox tb;
  bool in_axioms = false;

  auto declared = [&](const std::string& n) {
    return tb.sig.primitives.count(n) || tb.sig.roles.count(n) || tb.sig.features.count(n) ||
           tb.sig.cfeatures.count(n) || tb.is_defined(n);
  };

  // Pass 1: declarations and axiom names.
  for (size_t i = 0; toks[i].type != Token::End;) {
    const Token& head = toks[i];
    if (head.type != Token::Word)
      throw ParseError("expected declaration or axiom", head.line, head.col);
    bool is_decl = head.text == "primitive" || head.text == "role" || head.text == "feature" ||
                   head.text == "cfeature" || head.text == "algebra";
    if (is_decl) {
      if (in_axioms) throw ParseError("declarations must precede axioms", head.line, head.col);
      const Token& name = toks[i + 1];
      if (name.type != Token::Word) throw ParseError("expected name", name.line, name.col);
      if (toks[i + 2].type != Token::Semi)
        throw ParseError("expected ';'", toks[i + 2].line, toks[i + 2].col);
      if (head.text == "algebra") {
        if (!tb.sig.algebra_name.empty())
          throw ParseError("algebra declared twice", head.line, head.col);
        tb.sig.algebra_name = name.text;
        try {
          tb.sig.algebra = QualitativeAlgebra::load(name.text);
        } catch (const InputError& e) {
          throw ParseError(e.what(), name.line, name.col);
        }
      } else {
        if (declared(name.text))
          throw ParseError("name " + name.text + " already declared", name.line, name.col);
        if (name.text == "top" || name.text == "bot")
          throw ParseError("reserved word " + name.text, name.line, name.col);
        if (head.text == "primitive") tb.sig.primitives.insert(name.text);
        if (head.text == "role") tb.sig.roles.insert(name.text);
        if (head.text == "feature") tb.sig.features.insert(name.text);
        if (head.text == "cfeature") tb.sig.cfeatures.insert(name.text);
      }
      i += 3;
      continue;
    }
    // axiom statement: skip to the closing ';'
    in_axioms = true;
    if (head.text == "top" || head.text == "bot")
      throw ParseError("reserved word on axiom left-hand side", head.line, head.col);
    if (declared(head.text))
      throw ParseError(tb.is_defined(head.text)
                           ? "concept " + head.text + " defined twice"
                           : "axiom left-hand side " + head.text + " clashes with a declaration",
                       head.line, head.col);
    if (toks[i + 1].type != Token::Assign)
      throw ParseError("expected ':='", toks[i + 1].line, toks[i + 1].col);
    tb.axioms.push_back({head.text, Concept()});
    size_t j = i + 2;
    while (toks[j].type != Token::Semi && toks[j].type != Token::End) ++j;
    if (toks[j].type == Token::End) throw ParseError("axiom missing ';'", head.line, head.col);
    i = j + 1;
  }
  tb.sig.check();

  // Pass 2: axiom bodies, with every lhs name visible.
  size_t next_axiom = 0;
  for (size_t i = 0; toks[i].type != Token::End;) {
    const Token& head = toks[i];
    bool is_decl = head.text == "primitive" || head.text == "role" || head.text == "feature" ||
                   head.text == "cfeature" || head.text == "algebra";
    if (is_decl) {
      i += 3;
      continue;
    }
    size_t body_start = i + 2;
    size_t j = body_start;
    while (toks[j].type != Token::Semi) ++j;
    std::vector<Token> body(toks.begin() + body_start, toks.begin() + j);
    body.push_back({Token::End, "", toks[j].line, toks[j].col});
    TokenStream ts(std::move(body));
    ConceptParser p(ts, tb);
    Concept rhs = p.concept_();
    if (ts.peek().type != Token::End)
      throw ParseError("trailing input in axiom body", ts.peek().line, ts.peek().col);
    tb.axioms[next_axiom++].rhs = rhs;
    i = j + 1;
  }
  return tb;
}

}  // namespace stal
