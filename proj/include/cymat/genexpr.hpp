#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cymat/poly.hpp"
#include "cymat/rring.hpp"

namespace cymat {

/// Error with the source position where lexing/parsing/evaluation failed.
class GenExprError : public std::runtime_error {
public:
    GenExprError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

struct Token {
    enum Kind { Sym, FIdx, Int, Caret, Star, Plus, LParen, RParen } kind;
    char sym = 0;   // 'w', 'u', 'v' for Kind::Sym
    long value = 0; // integer literals / f indices
    size_t pos = 0;
};

/// Lexes a generator expression.  Whitespace and '{' '}' (LaTeX exponent
/// braces) are skipped; 'f' may be followed by an optional '_' before its
/// index.  Unknown characters raise a position-annotated GenExprError.
std::vector<Token> tokenize(const std::string& text);

/// Parses and evaluates a generator expression into R[x]/<x^n - 1>.
///
/// Grammar (precedence ^ > juxtaposition/'*' > '+'):
///   expr   := term ('+' term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' INT]
///   atom   := 'w' | 'u' | 'v' | f<i> | INT | '(' expr ')'
///
/// w-exponents reduce mod 15; u/v powers at or above their nilpotency index
/// evaluate to zero; products evaluate left to right (R is noncommutative and
/// the scalars-left spelling of the source tables is preserved).
RPoly parse_genexpr(const std::string& text, const FactorSet& factors, int k);

/// Renders p as a string parse_genexpr accepts, such that parsing it with the
/// same factor set reproduces p.  x-powers are spelled via (f1 + 1)^d, which
/// relies on f1 = x + 1 being the first canonical factor (always true for the
/// factor sets produced here).
std::string format_genexpr(const RingContext& ctx, const RPoly& p);

} // namespace cymat
