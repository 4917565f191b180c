#pragma once

#include "rn/numeric.hpp"

#include <optional>
#include <vector>

namespace rn {

/* The quadruple (A, B, C, D) of C*z^2 = D + A*B^n.  A and D nonzero, C >= 1,
 * |B| >= 2.  Solutions are pairs (z, n) with z a non-negative rational and n
 * any integer; z = 0 counts. */
struct Equation {
    Int A, B, C, D;

    Equation(Int a, Int b, Int c, Int d);

    bool operator==(const Equation&) const = default;
};

struct Solution {
    Rat z;
    long n;

    bool operator==(const Solution&) const = default;
};

struct Window {
    long lo;
    long hi;
};

struct SolutionReport {
    Equation eq;
    long n_min;
    long n_max;
    std::vector<Solution> solutions;  // sorted by n

    std::size_t K() const { return solutions.size(); }
};

/* The solution at exponent n, if any.  For n >= 0 this tests whether
 * C*(D + A*B^n) is a perfect square r^2 and yields z = r/C.  For n < 0, with
 * k = ceil(-n/2), it tests C*(D*B^(2k) + A*B^(n+2k)) and yields
 * z = r/(C*|B|^k). */
std::optional<Solution> solve_at_n(const Equation& eq, long n);

// All solutions with n in [window.lo, window.hi], ascending n.
SolutionReport find_solutions(const Equation& eq, const Window& window);

// [-2*bits(|D|) - 64, 4*bits(|D|) + 64], both ends scaled by 1/log2|B|.
Window default_window(const Equation& eq);

/* Primitivity conditions:
 *   i    C squarefree
 *   ii   gcd(A, C, D) = 1
 *   iii  gcd(A, D) squarefree
 *   iv   B^2 does not divide D
 *   v    B does not divide A
 *   vi   if squarefree_part(|B|) divides C then B does not divide D
 */
struct PrimitivityReport {
    bool primitive;
    std::vector<std::string> violated;  // subset of {"i",...,"vi"} in order
};

PrimitivityReport is_primitive(const Equation& eq);

/* Result of rewriting an equation until conditions (i)-(v) hold.  A solution
 * (z, n) of the original maps to (z * z_scale, n + n_shift) of the reduced
 * equation, bijectively.  Condition (vi) is reported but never rewritten. */
struct Reduction {
    Equation eq;
    long n_shift;
    Rat z_scale;
};

Reduction reduce_to_primitive(const Equation& eq);

}  // namespace rn
