#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hflow/symbols.hpp"

namespace hflow {

/// Parsed operator expression: one term, or a Sum node whose terms all share
/// the same symbol family.
struct OperatorExpr {
  std::vector<MultiplierSymbol> terms;

  bool is_sum() const { return terms.size() > 1; }
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;
};

/// Grammar:
///   expr  := term { "+" term }
///   term  := "euler:" poly(theta) | "hardy:" poly(1/(n+1)) | "seq:" "[" scalar {"," scalar} "]"
/// Polynomials are ordinary arithmetic over exact scalars (integers, decimals,
/// p/q, i, sqrt(d)) with + - * / ^ and parentheses. In Hardy terms the atom
/// (n+1) stands for the reciprocal of the Hardy variable, so 2/(n+1)^2 is 2 H^2;
/// H may also be written directly.
/// Throws ParseError (with the offending position) or VariantMismatch.
OperatorExpr parse_operator(std::string_view src);

/// Folds a Sum node into a single symbol with exact coefficient addition.
MultiplierSymbol to_symbol(const OperatorExpr& expr);

/// Normalized, re-parseable text: highest power first, exact coefficients.
std::string pretty_print(const MultiplierSymbol& s);
std::string pretty_print(const OperatorExpr& expr);

}  // namespace hflow
