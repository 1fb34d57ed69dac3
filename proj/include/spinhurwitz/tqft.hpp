#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "spinhurwitz/hurwitz.hpp"
#include "spinhurwitz/spectral.hpp"

namespace spinhurwitz {

/// Connected cobordism atom D(r, s, h, p): genus-h parity-p surface from r
/// input circles to s output circles.  Disconnected cobordisms are built with
/// the tensor operation.
struct CobordismAtom {
    int inputs = 0;   // r
    int outputs = 0;  // s
    int genus = 0;    // h
    Parity parity = Parity::even;
};

struct CobordismExpr;
using ExprPtr = std::shared_ptr<const CobordismExpr>;

struct TensorNode {
    ExprPtr left, right;
};
struct ComposeNode {
    ExprPtr first, second;  // diagrammatic order: first is the source cobordism
};

struct CobordismExpr {
    std::variant<CobordismAtom, TensorNode, ComposeNode> node;
    int line = 1, column = 1;  // source position for error reporting
};

ExprPtr make_atom(CobordismAtom atom);
ExprPtr make_tensor(ExprPtr left, ExprPtr right);
ExprPtr make_compose(ExprPtr first, ExprPtr second);

/// Grammar (whitespace-insensitive):
///   expr   := term { ';' term }         composition, diagrammatic order
///   term   := factor { '|' factor }     tensor / disjoint union
///   factor := atom | '(' expr ')'
///   atom   := 'D' '(' INT ',' INT ',' INT ',' PARITY ')'
///           | 'cap' | 'cup' | 'pant' | 'copant' | 'handle' | 'twist'
///   PARITY := '+' | '-'
/// Sugar: cap=D(0,1,0,+) cup=D(1,0,0,+) pant=D(2,1,0,+) copant=D(1,2,0,+)
///        handle=D(1,1,1,+) twist=D(1,1,0,-).
/// Throws parse_error with position on bad syntax; arity errors are deferred
/// to evaluation.
ExprPtr parse_cobordism(const std::string& text);

std::string to_string(const ExprPtr& expr);

/// Exact linear map between tensor powers of the state space F.  Tuple indexes
/// are row-major over the fixed OP(d) basis order, first circle most
/// significant; arity-0 ends are the scalar line (dimension 1).
struct LinearMap {
    int d = 1;
    int m = 1;           // dim F = |OP(d)|
    int in_arity = 0;    // r
    int out_arity = 0;   // s
    MatrixXq matrix;     // m^s x m^r

    bool is_scalar() const { return in_arity == 0 && out_arity == 0; }
    Rational scalar() const { return matrix(0, 0); }
};

/// Matrix of one atom: entry (beta-tuple, alpha-tuple) equals the
/// index-raised normalized value theta_{beta_1}...theta_{beta_s} *
/// H(h,p)_{alpha...,beta...}; the (0,0) atom is the closed scalar H(h,p).
LinearMap evaluate_atom(const CobordismAtom& atom, const SpinSpectrum& spectrum);

/// Functor on expressions: composition goes to matrix product (diagrammatic
/// order), tensor to the Kronecker product.  Arity mismatches name the
/// offending node's source position.
LinearMap evaluate_expr(const ExprPtr& expr, const SpinSpectrum& spectrum);

/// Everything the Frobenius-algebra view of the state space needs: the
/// multiplication, unit, counit, and the genus-adding / parity operators.
struct FrobeniusData {
    int d = 1;
    int m = 1;
    std::vector<MatrixXq> mult;  // mult[a](g, b): coefficient of v_g in v_a v_b
    VectorXq unit;               // U(1)
    VectorXq counit;             // T as a row functional (stored as a vector)
    MatrixXq genus_adding;       // G
    MatrixXq parity_involution;  // A
};
FrobeniusData make_frobenius(const ClassAlgebra& algebra, const SpinSpectrum& spectrum);

/// T . A^p . G^h . U applied to 1: the closed normalized value H(h,p).
Rational closed_value(int genus, Parity parity, const SpinSpectrum& spectrum);

}  // namespace spinhurwitz
