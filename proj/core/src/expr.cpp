#include "hyplat/expr.hpp"

#include <cctype>

namespace hyplat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, MQField::Ptr field, std::vector<Integer>* sink)
      : text_(text), field_(std::move(field)), radicand_sink_(sink) {}

  FieldElement run() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view text_;
  MQField::Ptr field_;
  std::vector<Integer>* radicand_sink_;  // when set, collect only
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool collecting() const { return radicand_sink_ != nullptr; }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (eat('+')) {
        FieldElement t = term();
        if (!collecting()) v = v + t;
      } else if (eat('-')) {
        FieldElement t = term();
        if (!collecting()) v = v - t;
      } else {
        return v;
      }
    }
  }

  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (eat('*')) {
        FieldElement f = factor();
        if (!collecting()) v = v * f;
      } else if (eat('/')) {
        std::size_t at = pos_;
        FieldElement d = factor();
        if (!collecting()) {
          if (d.is_zero()) throw ParseError(at, "division by zero");
          v = v / d;
        }
      } else {
        return v;
      }
    }
  }

  FieldElement factor() {
    if (eat('-')) return -factor();
    char c = peek();
    if (c == '(') {
      eat('(');
      FieldElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      // 'rational := integer ['/' integer]' binds tighter than term-level
      // division only through the same '/' token; term() already handles it,
      // so a plain integer is returned here.
      return FieldElement(field_, Rational(num));
    }
    if (c == 's') {
      expect_keyword("sqrt");
      if (!eat('(')) fail("expected '(' after sqrt");
      std::size_t at = pos_;
      bool neg = eat('-');
      Integer n = integer();
      if (!eat(')')) fail("expected ')'");
      if (neg || sgn(n) <= 0)
        throw ParseError(at, "sqrt of a non-positive integer");
      if (radicand_sink_) {
        auto [kernel, sq] = squarefree_kernel(n);
        radicand_sink_->push_back(kernel);
        return field_->one();  // value unused in collection mode
      }
      return field_->radical(n);
    }
    fail("expected rational, sqrt(...) or '('");
  }

  void expect_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) fail("unknown token");
    pos_ += kw.size();
  }
};

}  // namespace

FieldElement parse_field_expr(std::string_view text, const MQField::Ptr& field) {
  return Parser(text, field, nullptr).run();
}

std::vector<Integer> collect_radicands(std::string_view text) {
  std::vector<Integer> out;
  Parser(text, MQField::rationals(), &out).run();
  return out;
}

FieldElement FieldExtender::parse(std::string_view text) {
  for (const Integer& r : collect_radicands(text)) absorb(r);
  return parse_field_expr(text, field_);
}

void FieldExtender::absorb(const Integer& radicand) {
  auto [kernel, sq] = squarefree_kernel(radicand);
  if (kernel == 1 || field_->contains_radicand(kernel)) return;
  std::vector<Integer> rads(field_->generators());
  rads.push_back(kernel);
  field_ = MQField::span(rads);
}

}  // namespace hyplat
