#pragma once

#include "hilbstab/chow.hpp"

namespace hilbstab {

// Abstract syntax for cycle expressions. Two strata share one node type: the
// blow-up level (where D, box, exc, diag live) and the surface level inside
// box/exc/diag arguments (rationals, N, pt, 1, named divisors). The parser
// enforces the stratification; blow-up constructors inside a surface-class
// position are rejected with their column.
enum class NodeKind {
    Number,   // value
    SymbolN,  // the polynomial variable
    ClassD,   // exceptional divisor atom
    Box,      // kids: two surface expressions
    Exc,      // kid: surface expression
    Diag,     // kid: surface expression
    PointPt,  // surface atom pt
    Divisor,  // surface atom, named; name
    Neg,      // kid
    Add,      // kids: left, right
    Sub,      // kids: left, right
    Mul,      // kids: left, right
    Pow       // kid: base; exponent
};

struct Node {
    NodeKind kind;
    Rational value;     // Number
    std::string name;   // Divisor
    long exponent = 0;  // Pow
    int column = 1;     // 1-based position of the defining token
    std::vector<Node> kids;
};

struct Expr {
    Node root;
};

// Grammar (whitespace-insensitive, `*` required between factors):
//   expr    := term (("+" | "-") term)*
//   term    := ("-")? factor ("*" factor)*
//   factor  := atom ("^" nat)?
//   atom    := rational | "N" | "D" | "box" "(" sexpr "," sexpr ")"
//            | "exc" "(" sexpr ")" | "diag" "(" sexpr ")" | "(" expr ")"
//   sexpr/sterm/sfactor mirror the above;
//   satom   := rational | "N" | "1" | "pt" | divisor-name | "(" sexpr ")"
//   rational := integer ("/" positive-integer)?
// `^` is right-associative with a nonnegative integer exponent. Errors throw
// parse_error with a 1-based column inside the input.
Expr parse(const std::string& text);

// Evaluates on the blow-up ring over s. Unknown divisor names, or basis names
// e<k> beyond the Picard rank, throw input_error. Exponents only truncate
// classes (never error) since the ring is bounded in codimension.
CycleBlowup eval(const Expr& e, const SurfaceData& s);

// Canonical text (delegates to the ring printer); parse(format(v)) evaluates
// back to v for every value in the image of eval.
std::string format(const CycleBlowup& c, const SurfaceData& s);

} // namespace hilbstab
