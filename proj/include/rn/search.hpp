#pragma once

// D-range sweeps for fixed (A, B, C): enumerate (z, n) pairs via the identity
// D = C*z^2 - A*B^n, aggregate multiplicities per D, and evaluate the two
// counting bounds for positive and negative D.

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rn/equation.hpp"

namespace rn {

struct SearchSpec {
    Int A;               // >= 1
    Int B;               // >= 2
    Int C;               // >= 1
    Int d_lo, d_hi;      // d_lo <= d_hi
    long n_max = 0;      // window is n in [0, n_max]
    std::size_t k_min = 1;
    bool primitive_only = false;
};

struct SearchHit {
    Int D;
    std::vector<long> exponents;  // sorted ascending
    std::size_t K() const { return exponents.size(); }
};

struct SweepOptions {
    unsigned workers = 0;                // 0 = hardware concurrency
    std::size_t memory_budget_bytes = 0; // 0 = RNKIT_MEMORY_BUDGET env var or 256 MiB
    std::ostream* progress = nullptr;    // per-chunk progress notes, diagnostic only
};

// Every D in [d_lo, d_hi] \ {0} hit by at least k_min exponents in [0, n_max],
// sorted by D. Ranges wider than the memory budget are processed in
// independent chunks; the result does not depend on chunking or worker count.
// Throws std::invalid_argument when the budget cannot hold even one
// D-column's worth of exponents.
std::vector<SearchHit> sweep(const SearchSpec& spec, const SweepOptions& opts = {});

// sqrt(D_M/C) * log_B(4*D_M/A): the positive-D counting bound.
double bound_positive(const Int& A, const Int& B, const Int& C, const Int& D_M);

// sqrt(D_M) * (pi - 2) / (sqrt(C) * ln B): the negative-D counting bound.
double bound_negative(const Int& A, const Int& B, const Int& C, const Int& D_M);

// Number of distinct D in (0, D_M] and in [-D_M, 0) with at least one
// solution (integer z, 0 <= n <= n_max), via sweep with k_min = 1.
std::pair<std::size_t, std::size_t> empirical_counts(const Int& A, const Int& B, const Int& C,
                                                     const Int& D_M, long n_max,
                                                     const SweepOptions& opts = {});

}  // namespace rn
