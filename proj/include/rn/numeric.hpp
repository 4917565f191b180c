#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rn {

using Int = mpz_class;
using Rat = mpq_class;

/* Failures of a mathematical precondition discovered at run time.  The CLI
 * maps these to exit code 1; malformed input maps std::invalid_argument to
 * exit code 2 instead. */
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class zero_d_error : public domain_error {
public:
    explicit zero_d_error(const std::string& what = "construction yields D = 0") : domain_error(what) {}
};

class parity_error : public domain_error {
public:
    explicit parity_error(const std::string& what = "E and F must have equal parity") : domain_error(what) {}
};

class factor_mismatch_error : public domain_error {
public:
    explicit factor_mismatch_error(const std::string& what = "C*E*F does not match A*(B^n2 - B^n1)")
        : domain_error(what) {}
};

class torsion_error : public domain_error {
public:
    explicit torsion_error(const std::string& what = "point is a torsion point") : domain_error(what) {}
};

class factorization_incomplete : public domain_error {
public:
    explicit factorization_incomplete(const std::string& what = "factorization incomplete: effort budget exhausted")
        : domain_error(what) {}
};

// base^e for e >= 0.
Int pow_int(const Int& base, unsigned long e);

// Number of bits of |v|; bit_length(0) == 0.
unsigned long bit_length(const Int& v);

// floor(sqrt(v)); throws std::invalid_argument for v < 0.
Int isqrt(const Int& v);

// The exact root when v is a perfect square (0 counts), nullopt otherwise.
std::optional<Int> is_perfect_square(const Int& v);

// Deterministic Miller-Rabin below 2^64, BPSW-style probable-prime test above.
bool is_probable_prime(const Int& v);

struct PrimePower {
    Int prime;
    unsigned exponent;
};

/* Effort budget for factorize/squarefree_part.  Exceeding it raises
 * factorization_incomplete instead of returning a wrong or partial answer. */
struct FactorBudget {
    unsigned long trial_bound = 1ul << 16;      // trial division up to this bound
    unsigned long rho_budget = 40'000'000;      // total Pollard rho squarings
};

// Prime factorization of v >= 1, primes ascending.  factorize(1) == {}.
std::vector<PrimePower> factorize(const Int& v, const FactorBudget& budget = {});

// Unique squarefree s with v = s * t^2; sign of s matches sign of v.  v != 0.
Int squarefree_part(const Int& v, const FactorBudget& budget = {});

/* Squarefree integer representing the class of q in Q* / (Q*)^2, i.e.
 * squarefree_part(numerator * denominator).  q != 0. */
Int square_class(const Rat& q, const FactorBudget& budget = {});

// num/den in canonical form (den > 0, gcd 1); throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

}  // namespace rn
