#pragma once

#include "wedgent/state.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wedgent {

// Syntax tree of a ket expression such as "(1/sqrt(2))(|0,0> + |1,1>)".
//
// Grammar (whitespace is insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor factor*            juxtaposition multiplies; kets concatenate
//   factor := atom ('/' atom)*          divisors must be scalars
//   atom   := number | 'i' | 'sqrt(' number ['/' number] ')' | ket | '(' expr ')'
//   ket    := '|' int (',' int)* '>'
// Kets use 0-based indices, so |0,1> is subsystem 1 in its first level and
// subsystem 2 in its second.
struct KetExpr {
    enum class Kind { Number, Imag, Sqrt, Ket, Neg, Sum, Product, Quotient };

    Kind kind = Kind::Number;
    std::string text;                 // Number literal, or Sqrt radicand numerator
    std::string denominator;          // Sqrt radicand denominator; empty if absent
    std::vector<std::size_t> indices; // Ket
    std::vector<KetExpr> children;    // Neg: 1, Sum: >= 2, Product/Quotient: 2
    std::size_t arity = 0;            // ket slots carried; 0 for pure scalars
    std::size_t column = 0;           // 1-based source column; not part of equality

    bool operator==(const KetExpr& other) const;
};

// Throws SyntaxError (ErrorCode::SyntaxError or ErrorCode::ArityMismatch) with
// the 1-based column of the problem.
KetExpr parse_ket(std::string_view text);

// Canonical text form; parse_ket(to_string(e)) == e.
std::string to_string(const KetExpr& expr);

// Amplitudes are accumulated exactly (Gaussian rationals times square roots)
// and rounded to double once. Without `dims`, each local dimension is the
// largest index used in that slot plus one. The result is not normalized.
PureState evaluate(const KetExpr& expr, const std::optional<Dims>& dims = std::nullopt);

} // namespace wedgent
