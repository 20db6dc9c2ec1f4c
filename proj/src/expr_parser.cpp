/*
   Copyright 2026 The fxgroup Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cctype>

#include "fxg/errors.hpp"
#include "fxg/session.hpp"

namespace fxg {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Context& ctx, const Bindings* bindings, std::size_t offset)
      : text_(text), ctx_(ctx), bindings_(bindings), offset_(offset) {}

  RawExpr parse() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    RawExpr e = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  std::size_t column() const { return pos_ + 1 + offset_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  RawExpr expr() {
    std::vector<RawExpr> parts{factor()};
    while (peek('*')) {
      ++pos_;
      parts.push_back(factor());
    }
    if (parts.size() == 1) return parts.front();
    return RawExpr::product(std::move(parts));
  }

  RawExpr factor() {
    RawExpr base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    if (peek('(')) {
      ++pos_;
      std::size_t start = pos_;
      std::size_t close = text_.find(')', start);
      if (close == std::string_view::npos) fail("expected ')'");
      RingElement e = ctx_.ring->parse(text_.substr(start, close - start), start + offset_);
      pos_ = close + 1;
      return RawExpr::power(std::move(base), std::move(e));
    }
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer or '(' after '^'");
    }
    BigInt value(std::string(text_.substr(digits, pos_ - digits)));
    if (negative) value = -value;
    if (value == -1) return RawExpr::inverse(std::move(base));
    return RawExpr::power(std::move(base), RingElement(value));
  }

  RawExpr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RawExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (text_.substr(start, pos_ - start) != "1") {
        pos_ = start;
        fail("only '1' may appear as a numeric factor");
      }
      return RawExpr::identity();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (auto g = ctx_.alphabet.find(name)) return RawExpr::gen(*g);
      if (bindings_)
        if (auto it = bindings_->find(name); it != bindings_->end())
          return RawExpr::from_element(it->second);
      throw UnknownSymbolError(name, start + 1 + offset_);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Context& ctx_;
  const Bindings* bindings_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RawExpr parse_expression(std::string_view text, const Context& ctx, const Bindings* bindings,
                         std::size_t column_offset) {
  return ExprParser(text, ctx, bindings, column_offset).parse();
}

}  // namespace fxg
