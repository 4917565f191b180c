#pragma once

// Constructors for equations with guaranteed multiple solutions: the
// factorization method for double solutions and elliptic-curve point
// doubling (tangent method) for triples, with its X = 0 corollary and
// the 2mP sequence extension.

#include <array>
#include <vector>

#include "rn/equation.hpp"

namespace rn {

// A factorization certificate for a two-solution equation:
//   A*B^n2 - A*B^n1 = C*E*F  with E and F of equal parity.
struct DoubleSpec {
    Int A;       // >= 1
    Int B;       // >= 2
    Int C;       // >= 1
    long n1, n2; // 0 <= n1 < n2
    Int E, F;    // >= 1
};

// Builds the equation (A, B, C, D) with
//   D = C*(E^2 + F^2)/4 - A*(B^n1 + B^n2)/2
// and verifies that both n1 and n2 admit solutions before returning.
// Throws parity_error, factor_mismatch_error or zero_d_error.
Equation construct_double(const DoubleSpec& spec);

// All factorizations G = C*E*F of G = A*(B^n2 - B^n1) with E >= F >= 1 and
// E = F (mod 2), ordered by E descending, deduplicated as unordered pairs,
// truncated to `limit` entries. Empty when C does not divide G or no
// same-parity split exists.
std::vector<DoubleSpec> enumerate_double_specs(const Int& A, const Int& B, const Int& C,
                                               long n1, long n2, std::size_t limit);

// The curve y^2 = (x+a)(x+b)(x+c) with pairwise distinct a, b, c
// (its roots are x = -a, -b, -c).
struct Curve {
    Int a, b, c;
    Curve(Int a_, Int b_, Int c_);
};

// A point known only through X and Y^2; Y itself may be irrational.
struct CurvePoint {
    Rat X;
    Rat Ysq;
};

// Abscissa of 2P by the tangent method:
//   X2 = S^2/(4*Ysq) - (a + b + c + 2X),
//   S  = (X+a)(X+b) + (X+a)(X+c) + (X+b)(X+c).
// Only Y^2 enters, so irrational-Y points are supported.
// Throws torsion_error when Ysq = 0.
Rat double_point(const Curve& curve, const CurvePoint& p);

// A verified three-solution equation together with its exponents and the
// doubled abscissa X2 = D/A (lowest terms) that produced it.
struct ConstructedTriple {
    Equation eq;
    std::array<long, 3> exponents;
    Rat X2;
};

// Doubling construction on the curve with roots a = B^n1, b = B^n2,
// c = B^n3 at integer abscissa X: sets D = numerator(X2), A = denominator(X2),
// C = squarefree_part(A * Ysq), flipping the signs of A and D when Ysq < 0 so
// that C stays positive. All three exponents are verified via solve_at_n
// before returning. Requires B >= 2 and 0 <= n1 < n2 < n3.
ConstructedTriple construct_triple(const Int& B, long n1, long n2, long n3, const Int& X);

// The X = 0 specialization in closed form: the A = 4 equation with
//   D = B^(n1+n2-n3) + B^(n1+n3-n2) + B^(n2+n3-n1) - 2*(B^n1 + B^n2 + B^n3),
// reduced to A = 1 when 4 | D. Requires 0 <= n1 < n2 < n3 <= n1+n2 and
// n1+n2+n3 even; equals construct_triple(B, n1, n2, n3, 0).
ConstructedTriple corollary_D(const Int& B, long n1, long n2, long n3);

// The sufficiency witness for A in {1, 4}: alpha = (X+b)(X+c)/(X+a) and its
// two rotations, plus whether all three are integers.
struct IntegralityCertificate {
    Rat alpha, beta, gamma;
    bool all_integer;
};

// Throws std::invalid_argument when X coincides with a root.
IntegralityCertificate integrality_certificate(const Curve& curve, const Int& X);

// Walks P, 2P, 3P, ... by chord-and-tangent addition (P must have rational Y,
// i.e. Ysq a rational square) and emits the equation obtained by doubling mP
// for m = 1..m_max. Emitted equations share B and C but have distinct D.
// Throws torsion_error when a multiple lands on a root, repeats an abscissa,
// or reaches the point at infinity; a verification failure is a logic error.
std::vector<ConstructedTriple> triple_sequence(const Int& B, long n1, long n2, long n3,
                                               const CurvePoint& p, unsigned m_max);

}  // namespace rn
