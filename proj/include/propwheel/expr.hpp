#ifndef PROPWHEEL_EXPR_HPP
#define PROPWHEEL_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "propwheel/diagram.hpp"
#include "propwheel/rational.hpp"

namespace propwheel {

// Morphism expression tree. Grammar of the surface language:
//
//   expr   := term (('+' | '-') term)*
//   term   := rational? comp
//   comp   := tens ('.' tens)*                 g . f is g after f
//   tens   := factor ('*' factor)*
//   factor := 'mu(' int ')' | 'id(' int ')' | 'w(' int ')'
//           | 'xi(' int ',' int ',' expr ')'
//           | 'sin[' cycles ']' expr | 'sout[' cycles ']' expr
//           | '(' expr ')'
//
// with rationals like 3, -2, 5/2 and cycles like (1 2)(3 4). The argument
// of sin/sout extends to the end of the enclosing expression, so the
// printer always parenthesizes those nodes.
struct MorphismExpr;
using ExprPtr = std::shared_ptr<const MorphismExpr>;

struct MorphismExpr {
    enum class Kind { mu, id, wheel, tensor, compose, contract, act_in, act_out, scale, sum };
    Kind kind{};
    int n = 0;          // generator arity
    int i = 0;          // contracted input
    int j = 0;          // contracted output
    std::string perm;   // cycle notation, verbatim
    Rat coeff;          // scale factor
    std::vector<ExprPtr> args;

    bool operator==(const MorphismExpr& o) const;
    bool operator!=(const MorphismExpr& o) const { return !(*this == o); }
};

ExprPtr make_mu(int n);
ExprPtr make_id(int n);
ExprPtr make_wheel(int n);
ExprPtr make_tensor(ExprPtr left, ExprPtr right);
// upper . lower: upper applied after lower.
ExprPtr make_compose(ExprPtr upper, ExprPtr lower);
ExprPtr make_contract(int i, int j, ExprPtr inner);
ExprPtr make_act_in(std::string perm, ExprPtr inner);
ExprPtr make_act_out(std::string perm, ExprPtr inner);
ExprPtr make_scale(Rat coeff, ExprPtr inner);
// A single summand collapses to itself; empty sums are rejected.
ExprPtr make_sum(std::vector<ExprPtr> summands);

struct Biarity {
    int q = 0;
    int l = 0;
    bool operator==(const Biarity& o) const { return q == o.q && l == o.l; }
};

// Bottom-up arity check: composition middles must agree, contraction legs
// and permutation entries must be in range, summands must share a biarity.
// Throws std::runtime_error with a description on any mismatch.
Biarity infer_biarity(const ExprPtr& e);

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_);
};

ExprPtr parse_expression(const std::string& text);

// Canonical rendering; parse_expression(expression_to_string(e)) rebuilds
// an identical tree.
std::string expression_to_string(const ExprPtr& e);

Element eval_expression(const ExprPtr& e);

}  // namespace propwheel

#endif
