#include "rn/numeric.hpp"

#include <algorithm>
#include <map>

namespace rn {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

unsigned long bit_length(const Int& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Int isqrt(const Int& v) {
    if (v < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

std::optional<Int> is_perfect_square(const Int& v) {
    if (v < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
    return isqrt(v);
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this base set.
bool miller_rabin_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/* Brent's variant of Pollard rho.  Deterministic: fixed start, increasing
 * polynomial offsets.  Returns a proper factor or nullopt once the budget is
 * spent. */
std::optional<Int> rho_brent(const Int& n, unsigned long& budget) {
    for (unsigned long c = 1; c < 100; ++c) {
        Int y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            if (budget < r) return std::nullopt;
            budget -= r;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                if (budget < lim) return std::nullopt;
                budget -= lim;
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
    return std::nullopt;
}

void factor_into(const Int& v, std::map<Int, unsigned>& out, unsigned multiplicity, unsigned long& rho_budget,
                 const FactorBudget& budget) {
    Int n = v;
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += multiplicity;
        return;
    }
    // Perfect powers: factor the root, multiply exponents.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        unsigned long maxk = bit_length(n);
        for (unsigned long k = 2; k <= maxk; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                factor_into(root, out, multiplicity * static_cast<unsigned>(k), rho_budget, budget);
                return;
            }
        }
    }
    auto f = rho_brent(n, rho_budget);
    if (!f) throw factorization_incomplete();
    factor_into(*f, out, multiplicity, rho_budget, budget);
    factor_into(n / *f, out, multiplicity, rho_budget, budget);
}

}  // namespace

bool is_probable_prime(const Int& v) {
    if (v < 2) return false;
    if (mpz_fits_ulong_p(v.get_mpz_t()) && bit_length(v) <= 64) {
        return miller_rabin_u64(mpz_get_ui(v.get_mpz_t()));
    }
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

std::vector<PrimePower> factorize(const Int& v, const FactorBudget& budget) {
    if (v <= 0) throw std::invalid_argument("factorize: argument must be >= 1");
    std::map<Int, unsigned> acc;
    Int n = v;
    while (mpz_even_p(n.get_mpz_t())) {
        acc[2] += 1;
        n /= 2;
    }
    for (Int d = 3; d * d <= n && d <= budget.trial_bound; d += 2) {
        while (n % d == 0) {
            acc[d] += 1;
            n /= d;
        }
    }
    if (n > 1) {
        if (Int bound = Int(budget.trial_bound) * Int(budget.trial_bound); n <= bound) {
            acc[n] += 1;  // below the squared trial bound the remainder is prime
        } else {
            unsigned long rho_budget = budget.rho_budget;
            factor_into(n, acc, 1, rho_budget, budget);
        }
    }
    std::vector<PrimePower> out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

Int squarefree_part(const Int& v, const FactorBudget& budget) {
    if (v == 0) throw std::invalid_argument("squarefree_part: argument must be nonzero");
    Int s = 1;
    for (const auto& pp : factorize(abs(v), budget)) {
        if (pp.exponent % 2 == 1) s *= pp.prime;
    }
    return v < 0 ? Int(-s) : s;
}

Int square_class(const Rat& q, const FactorBudget& budget) {
    if (q == 0) throw std::invalid_argument("square_class: argument must be nonzero");
    return squarefree_part(Int(q.get_num() * q.get_den()), budget);
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace rn
