/* Copyright 2026 The hf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <set>

#include "hf/syntax.hpp"

namespace hf {
namespace {

enum class Tok { LParen, RParen, Colon, Define, Semi, Arrow, FatArrow, Comma, Ident, Word, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}

bool ident_continue(unsigned char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'' || c == '.' || c == '-';
}

class Lexer {
 public:
  Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Span sp = here(1);
      if (pos_ >= src_.size()) {
        sp.length = 0;
        out.push_back({Tok::End, "", sp});
        return out;
      }
      unsigned char c = static_cast<unsigned char>(src_[pos_]);
      auto two = [&](char a, char b) { return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b; };
      if (two(':', '=')) {
        out.push_back(take(Tok::Define, 2));
      } else if (two('-', '>')) {
        out.push_back(take(Tok::Arrow, 2));
      } else if (two('=', '>')) {
        out.push_back(take(Tok::FatArrow, 2));
      } else if (c == '(') {
        out.push_back(take(Tok::LParen, 1));
      } else if (c == ')') {
        out.push_back(take(Tok::RParen, 1));
      } else if (c == ':') {
        out.push_back(take(Tok::Colon, 1));
      } else if (c == ';') {
        out.push_back(take(Tok::Semi, 1));
      } else if (c == ',') {
        out.push_back(take(Tok::Comma, 1));
      } else if (ident_start(c)) {
        size_t end = pos_ + 1;
        while (end < src_.size()) {
          unsigned char d = static_cast<unsigned char>(src_[end]);
          if (!ident_continue(d)) break;
          if (d == '-' && end + 1 < src_.size() && src_[end + 1] == '>') break;
          ++end;
        }
        std::string word(src_.substr(pos_, end - pos_));
        out.push_back(take(is_reserved_word(word) ? Tok::Word : Tok::Ident, end - pos_));
      } else {
        throw ParseError(sp, "a token, found unexpected character");
      }
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  Span here(uint32_t len) const { return Span{file_, line_, col_, len}; }

  Token take(Tok kind, size_t len) {
    Token t{kind, std::string(src_.substr(pos_, len)), here(static_cast<uint32_t>(len))};
    pos_ += len;
    col_ += static_cast<uint32_t>(len);
    return t;
  }

  std::string_view src_;
  std::string file_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SourceModule module(std::string file) {
    SourceModule m;
    m.file = std::move(file);
    std::set<std::string> seen;
    while (peek().kind != Tok::End) {
      SurfaceDecl d = decl();
      if (!seen.insert(d.name).second)
        throw Error(ErrorKind::DuplicateName, d.span, "declaration '" + d.name + "' appears twice in the module");
      m.declarations.push_back(std::move(d));
    }
    return m;
  }

  SurfacePtr whole_term() {
    SurfacePtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(peek().span, what);
    return toks_[pos_++];
  }

  SurfaceDecl decl() {
    SurfaceDecl d;
    const Token& kw = peek();
    if (at_word("def")) {
      d.kind = DeclKind::Definition;
    } else if (at_word("postulate")) {
      d.kind = DeclKind::Postulate;
    } else if (at_word("hit")) {
      d.kind = DeclKind::Hit;
    } else {
      throw ParseError(kw.span, "'def', 'postulate' or 'hit'");
    }
    ++pos_;
    Token name = expect(Tok::Ident, "a declaration name");
    d.name = name.text;
    d.span = name.span;
    while (peek().kind == Tok::LParen) d.telescope.push_back(binder());
    if (d.kind != DeclKind::Hit) {
      expect(Tok::Colon, "':' before the declared type");
      d.signature = term();
    }
    if (d.kind == DeclKind::Postulate) {
      expect(Tok::Semi, "';' after a postulate (postulates have no body)");
      return d;
    }
    expect(Tok::Define, "':='");
    d.body = term();
    expect(Tok::Semi, "';' ending the declaration");
    return d;
  }

  // "(" IDENT+ ":" term ")"
  bool binder_ahead() const {
    if (peek().kind != Tok::LParen) return false;
    size_t i = 1;
    if (peek(i).kind != Tok::Ident) return false;
    while (peek(i).kind == Tok::Ident) ++i;
    return peek(i).kind == Tok::Colon;
  }

  SurfaceBinder binder() {
    SurfaceBinder b;
    Token open = expect(Tok::LParen, "'(' opening a binder");
    b.span = open.span;
    b.names.push_back(expect(Tok::Ident, "a bound name").text);
    while (peek().kind == Tok::Ident) b.names.push_back(toks_[pos_++].text);
    expect(Tok::Colon, "':' in binder");
    b.type = term();
    expect(Tok::RParen, "')' closing a binder");
    return b;
  }

  static SurfacePtr make(SurfaceTerm t) { return std::make_shared<const SurfaceTerm>(std::move(t)); }

  SurfacePtr term() {
    Span start = peek().span;
    if (at_word("fun")) {
      ++pos_;
      SurfaceTerm t{SurfaceKind::Lam, start};
      t.binders.push_back(binder());
      while (peek().kind == Tok::LParen) t.binders.push_back(binder());
      expect(Tok::FatArrow, "'=>' after lambda binders");
      t.args.push_back(term());
      return make(std::move(t));
    }
    if (at_word("Sigma")) {
      ++pos_;
      SurfaceTerm t{SurfaceKind::Sigma, start};
      t.binders.push_back(binder());
      while (peek().kind == Tok::LParen) t.binders.push_back(binder());
      expect(Tok::Comma, "',' after Sigma binders");
      t.args.push_back(term());
      return make(std::move(t));
    }
    if (binder_ahead()) {
      SurfaceTerm t{SurfaceKind::Pi, start};
      while (binder_ahead()) t.binders.push_back(binder());
      expect(Tok::Arrow, "'->' after Pi binders");
      t.args.push_back(term());
      return make(std::move(t));
    }
    SurfacePtr lhs = application();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      SurfaceTerm t{SurfaceKind::Arrow, start};
      t.args = {lhs, term()};
      return make(std::move(t));
    }
    return lhs;
  }

  bool atom_ahead() const {
    const Token& t = peek();
    if (t.kind == Tok::Ident || t.kind == Tok::LParen) return true;
    if (t.kind != Tok::Word) return false;
    if (auto h = head_by_keyword(t.text)) return h->arity == 0;
    return t.text.size() >= 2 && t.text[0] == 'U' && t.text != "Sigma";
  }

  SurfacePtr application() {
    Span start = peek().span;
    SurfacePtr f;
    const Token& t = peek();
    auto h = t.kind == Tok::Word ? head_by_keyword(t.text) : std::nullopt;
    if (h && h->arity > 0) {
      ++pos_;
      SurfaceTerm node{SurfaceKind::Head, start};
      node.head = h->kind;
      for (unsigned i = 0; i < h->arity; ++i) {
        if (!atom_ahead())
          throw ParseError(peek().span, "argument " + std::to_string(i + 1) + " of '" + std::string(h->keyword) +
                                            "' (it takes " + std::to_string(h->arity) + ")");
        node.args.push_back(atom());
      }
      f = make(std::move(node));
    } else {
      f = atom();
    }
    while (atom_ahead()) {
      SurfaceTerm node{SurfaceKind::App, start};
      node.args = {f, atom()};
      f = make(std::move(node));
    }
    return f;
  }

  SurfacePtr atom() {
    const Token& t = peek();
    Span start = t.span;
    if (t.kind == Tok::Ident) {
      ++pos_;
      SurfaceTerm node{SurfaceKind::Name, start};
      node.name = t.text;
      return make(std::move(node));
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      SurfacePtr inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Word) {
      if (auto h = head_by_keyword(t.text); h && h->arity == 0) {
        ++pos_;
        SurfaceTerm node{SurfaceKind::Head, start};
        node.head = h->kind;
        return make(std::move(node));
      }
      if (t.text.size() >= 2 && t.text[0] == 'U' && t.text != "Sigma") {
        unsigned long level = 0;
        for (char c : t.text.substr(1)) {
          level = level * 10 + static_cast<unsigned long>(c - '0');
          if (level > 1000) throw ParseError(t.span, "a universe level of at most 1000");
        }
        ++pos_;
        SurfaceTerm node{SurfaceKind::Univ, start};
        node.level = static_cast<uint32_t>(level);
        return make(std::move(node));
      }
    }
    throw ParseError(t.span, t.kind == Tok::End ? "a term, found end of input" : "a term, found '" + t.text + "'");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

const char* decl_kind_name(DeclKind k) {
  switch (k) {
    case DeclKind::Definition: return "definition";
    case DeclKind::Postulate: return "postulate";
    case DeclKind::Hit: return "hit";
  }
  return "?";
}

bool is_identifier(std::string_view word) {
  if (word.empty() || !ident_start(static_cast<unsigned char>(word[0]))) return false;
  for (size_t i = 1; i < word.size(); ++i) {
    if (!ident_continue(static_cast<unsigned char>(word[i]))) return false;
    if (word[i] == '-' && i + 1 < word.size() && word[i + 1] == '>') return false;
  }
  if (word.size() >= 2 && word[0] == '-' && word[1] == '-') return false;
  return !is_reserved_word(word);
}

SourceModule parse(std::string_view source, std::string file) {
  Parser p(Lexer(source, file).run());
  return p.module(std::move(file));
}

SurfacePtr parse_term(std::string_view source, std::string file) {
  Parser p(Lexer(source, std::move(file)).run());
  return p.whole_term();
}

}  // namespace hf
