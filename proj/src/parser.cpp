#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "wtt/syntax.hpp"

namespace wtt {

ParseError::ParseError(Span where, std::string message, std::vector<std::string> exp)
    : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.col) + ": " + message),
      location(where),
      expected(std::move(exp)) {}

namespace {

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> kws = {
      "U0",  "N0",  "N1",    "star", "Pi",  "Sig",    "Sum",    "Id",  "refl", "J",     "W",    "sup",
      "elimW", "DW", "dsup", "elimDW", "WP", "ind",  "elimWP", "Cover", "rf", "tr", "elimCover", "fst",
      "snd", "pair", "inl", "inr", "case", "absurd", "unitElim", "fun", "split", "def", "postulate", "import"};
  return kws;
}

// Keyword-headed forms that take a fixed number of atomic arguments.
struct KeywordForm {
  std::string_view word;
  Kind kind;
  std::size_t args;
};

constexpr KeywordForm kForms[] = {
    {"Sum", Kind::Sum, 2},       {"Id", Kind::Id, 3},         {"refl", Kind::Refl, 1},
    {"J", Kind::J, 5},           {"W", Kind::W, 2},           {"sup", Kind::Sup, 2},
    {"elimW", Kind::WElim, 3},   {"DW", Kind::DW, 5},         {"dsup", Kind::DSup, 3},
    {"elimDW", Kind::DWElim, 4}, {"WP", Kind::WP, 4},         {"ind", Kind::Ind, 3},
    {"elimWP", Kind::WPElim, 4}, {"Cover", Kind::Cover, 5},   {"rf", Kind::Rf, 2},
    {"tr", Kind::Tr, 3},         {"elimCover", Kind::CoverElim, 5}, {"fst", Kind::Fst, 1},
    {"snd", Kind::Snd, 1},       {"pair", Kind::Pair, 2}, {"inl", Kind::Inl, 1},       {"inr", Kind::Inr, 1},
    {"case", Kind::Case, 4},     {"absurd", Kind::EmptyElim, 2}, {"unitElim", Kind::UnitElim, 3},
    {"split", Kind::Split, 3},
};

enum class Tok { Ident, Keyword, String, LParen, RParen, Colon, Define, Arrow, FatArrow, Star, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "\"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Span sp{line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = keywords().count(word) ? Tok::Keyword : Tok::Ident;
      out.push_back({kind, std::move(word), sp});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError(sp, "unterminated string", {"\""});
      out.push_back({Tok::String, std::string(src.substr(i + 1, j - i - 1)), sp});
      advance(j + 1 - i);
      continue;
    }
    auto sym = [&](std::string_view s, Tok k) {
      if (src.substr(i, s.size()) != s) return false;
      out.push_back({k, std::string(s), sp});
      advance(s.size());
      return true;
    };
    if (sym(":=", Tok::Define) || sym("->", Tok::Arrow) || sym("=>", Tok::FatArrow) || sym("(", Tok::LParen) ||
        sym(")", Tok::RParen) || sym(":", Tok::Colon) || sym("*", Tok::Star))
      continue;
    throw ParseError(sp, std::string("unexpected character '") + c + "'", {});
  }
  out.push_back({Tok::End, "", Span{line, col}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> scope) : toks_(std::move(toks)), scope_(std::move(scope)) {}

  ParsedFile file() {
    ParsedFile f;
    std::set<std::string> seen;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Keyword && t.text == "import") {
        next();
        f.imports.push_back(expect(Tok::String, {"string"}).text);
        continue;
      }
      if (t.kind == Tok::Keyword && (t.text == "def" || t.text == "postulate")) {
        bool is_def = t.text == "def";
        Span sp = next().span;
        Declaration d;
        d.span = sp;
        d.name = expect(Tok::Ident, {"identifier"}).text;
        expect(Tok::Colon, {"':'"});
        d.type = expr();
        if (is_def) {
          expect(Tok::Define, {"':='"});
          d.body = expr();
        }
        f.decls.push_back(std::move(d));
        continue;
      }
      throw error({"'def'", "'postulate'", "'import'"});
    }
    return f;
  }

  Term whole_term() {
    Term t = expr();
    if (peek().kind != Tok::End) throw error({"end of input"});
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  ParseError error(std::vector<std::string> expected) const {
    std::string msg = "unexpected " + describe(peek());
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " | " : "") + expected[i];
    }
    return ParseError(peek().span, msg, std::move(expected));
  }

  const Token& expect(Tok kind, std::vector<std::string> what) {
    if (peek().kind != kind) throw error(std::move(what));
    return next();
  }

  bool at_keyword(std::string_view w) const { return peek().kind == Tok::Keyword && peek().text == w; }

  std::string binder_name() {
    if (peek().kind == Tok::Ident) return next().text;
    throw error({"identifier"});
  }

  // `( x y : A ) ->` or `( x : A ) *` starting at the current '('.
  bool at_binder_head() const {
    if (peek().kind != Tok::LParen) return false;
    std::size_t k = 1;
    while (peek(k).kind == Tok::Ident) ++k;
    if (k == 1 || peek(k).kind != Tok::Colon) return false;
    int depth = 1;
    for (++k;; ++k) {
      Tok t = peek(k).kind;
      if (t == Tok::End) return false;
      if (t == Tok::LParen) ++depth;
      if (t == Tok::RParen && --depth == 0) break;
    }
    Tok after = peek(k + 1).kind;
    return after == Tok::Arrow || after == Tok::Star;
  }

  Term binder_form() {
    Span sp = expect(Tok::LParen, {"'('"}).span;
    std::vector<std::string> names;
    while (peek().kind == Tok::Ident) names.push_back(next().text);
    expect(Tok::Colon, {"':'"});
    Term dom = expr();
    expect(Tok::RParen, {"')'"});
    Kind kind = next().kind == Tok::Arrow ? Kind::Pi : Kind::Sigma;
    // (x y : A) -> B  ==  (x : A) -> (y : A) -> B, with A weakened per binder.
    std::vector<Term> doms;
    for (std::size_t i = 0; i < names.size(); ++i) {
      doms.push_back(weaken(dom, 0, i));
      scope_.push_back(names[i]);
    }
    Term body = expr();
    for (std::size_t i = names.size(); i-- > 0;) {
      scope_.pop_back();
      body = build::binder(kind, {doms[i], body}, names[i], sp);
    }
    return body;
  }

  Term expr() {
    if (at_keyword("fun")) {
      Span sp = next().span;
      std::vector<std::string> names;
      while (peek().kind == Tok::Ident) names.push_back(next().text);
      if (names.empty()) throw error({"identifier"});
      expect(Tok::FatArrow, {"'=>'"});
      for (const auto& n : names) scope_.push_back(n);
      Term body = expr();
      for (std::size_t i = names.size(); i-- > 0;) {
        scope_.pop_back();
        body = build::binder(Kind::Lam, {body}, names[i], sp);
      }
      return body;
    }
    return arrow();
  }

  Term arrow() {
    if (at_binder_head()) return binder_form();
    Term lhs = product();
    if (peek().kind == Tok::Arrow) {
      Span sp = next().span;
      scope_.push_back("");
      Term rhs = expr();
      scope_.pop_back();
      return build::make(Kind::Pi, {lhs, rhs}, sp);
    }
    return lhs;
  }

  Term product() {
    Term lhs = application();
    if (peek().kind == Tok::Star) {
      Span sp = next().span;
      scope_.push_back("");
      Term rhs = at_binder_head() ? binder_form() : product();
      scope_.pop_back();
      return build::make(Kind::Sigma, {lhs, rhs}, sp);
    }
    return lhs;
  }

  bool at_atom_start() const {
    const Token& t = peek();
    if (t.kind == Tok::Ident || t.kind == Tok::LParen) return true;
    if (t.kind == Tok::Keyword)
      return t.text == "U0" || t.text == "N0" || t.text == "N1" || t.text == "star";
    return false;
  }

  Term application() {
    Term head;
    if (peek().kind == Tok::Keyword && !at_atom_start()) {
      head = keyword_form();
    } else {
      head = atom();
    }
    while (at_atom_start()) {
      Span sp = peek().span;
      Term arg = atom();
      head = build::make(Kind::App, {head, arg}, sp);
    }
    return head;
  }

  Term keyword_form() {
    const Token& kw = peek();
    Span sp = kw.span;
    if (kw.text == "Pi" || kw.text == "Sig") {
      Kind kind = kw.text == "Pi" ? Kind::Pi : Kind::Sigma;
      next();
      Term dom = atom();
      Term fam = atom();
      if (fam->kind != Kind::Lam) throw ParseError(fam->span, std::string(kw.text) + " expects a fun as family", {"fun"});
      return build::binder(kind, {dom, fam->kids[0]}, fam->name, sp);
    }
    for (const auto& f : kForms) {
      if (f.word != kw.text) continue;
      next();
      std::vector<Term> args;
      for (std::size_t i = 0; i < f.args; ++i) {
        if (!at_atom_start()) throw error({"argument of " + std::string(f.word)});
        args.push_back(atom());
      }
      return build::make(f.kind, std::move(args), sp);
    }
    throw error({"term"});
  }

  Term atom() {
    const Token& t = peek();
    Span sp = t.span;
    if (t.kind == Tok::Ident) {
      std::string name = next().text;
      if (name == "_") throw ParseError(sp, "'_' cannot be referenced", {"identifier"});
      for (std::size_t i = scope_.size(); i-- > 0;) {
        if (scope_[i] == name) {
          auto v = std::make_shared<Node>(*build::var(scope_.size() - 1 - i));
          v->span = sp;
          return v;
        }
      }
      auto c = std::make_shared<Node>(*build::cnst(name));
      c->span = sp;
      return c;
    }
    if (t.kind == Tok::Keyword) {
      static const std::pair<std::string_view, Kind> nullary[] = {
          {"U0", Kind::U}, {"N0", Kind::Empty}, {"N1", Kind::Unit}, {"star", Kind::Star}};
      for (const auto& [w, k] : nullary) {
        if (t.text == w) {
          next();
          return build::make(k, {}, sp);
        }
      }
    }
    if (t.kind == Tok::LParen) {
      next();
      Term inner = expr();
      if (peek().kind == Tok::Colon) {
        next();
        Term ty = expr();
        expect(Tok::RParen, {"')'"});
        return build::make(Kind::Ann, {inner, ty}, sp);
      }
      expect(Tok::RParen, {"')'", "':'"});
      return inner;
    }
    throw error({"identifier", "'('", "U0", "N0", "N1", "star"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError({}, "cannot read " + p.string(), {});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void load_into(const std::filesystem::path& path, std::vector<std::filesystem::path>& stack,
               std::set<std::filesystem::path>& done, std::vector<Declaration>& out) {
  auto canon = std::filesystem::weakly_canonical(path);
  if (done.count(canon)) return;
  if (std::find(stack.begin(), stack.end(), canon) != stack.end())
    throw ParseError({}, "import cycle through " + path.string(), {});
  stack.push_back(canon);
  ParsedFile f;
  try {
    f = parse_file(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(e.location, path.filename().string() + ":" + e.what(), e.expected);
  }
  for (const auto& imp : f.imports) load_into(canon.parent_path() / imp, stack, done, out);
  for (auto& d : f.decls) out.push_back(std::move(d));
  stack.pop_back();
  done.insert(canon);
}

}  // namespace

bool is_keyword(std::string_view word) { return keywords().count(word) != 0; }

ParsedFile parse_file(std::string_view text) { return Parser(lex(text), {}).file(); }

Term parse_term(std::string_view text, const std::vector<std::string>& scope) {
  return Parser(lex(text), scope).whole_term();
}

std::vector<Declaration> load_file(const std::filesystem::path& path) {
  std::vector<std::filesystem::path> stack;
  std::set<std::filesystem::path> done;
  std::vector<Declaration> out;
  load_into(path, stack, done, out);
  return out;
}

}  // namespace wtt
