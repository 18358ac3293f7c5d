#pragma once

#include <string_view>
#include <vector>

#include "hyplat/mqfield.hpp"

namespace hyplat {

// Expression grammar for exact field values:
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ['-'] (rational | 'sqrt' '(' integer ')' | '(' expr ')')
//   rational := integer ['/' integer]

/// Parse against a fixed field: every sqrt kernel must already lie in it.
FieldElement parse_field_expr(std::string_view text, const MQField::Ptr& field);

/// Squarefree kernels of all sqrt(...) radicands in the expression
/// (syntax-checked; values unevaluated). Useful for assembling the field
/// before a strict parse of many entries.
std::vector<Integer> collect_radicands(std::string_view text);

/// Parses expressions while growing its field to absorb new radicands.
class FieldExtender {
 public:
  explicit FieldExtender(MQField::Ptr start = MQField::rationals())
      : field_(std::move(start)) {}

  FieldElement parse(std::string_view text);
  /// Grow the field so the given radicand's kernel is representable.
  void absorb(const Integer& radicand);
  const MQField::Ptr& field() const { return field_; }

 private:
  MQField::Ptr field_;
};

}  // namespace hyplat
