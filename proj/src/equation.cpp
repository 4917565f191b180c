#include "rn/equation.hpp"

#include <cmath>

namespace rn {

namespace {

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Rat rat_pow(const Int& base, long e) {
    if (e >= 0) return Rat(pow_int(base, static_cast<unsigned long>(e)));
    return make_rat(1, pow_int(base, static_cast<unsigned long>(-e)));
}

}  // namespace

Equation::Equation(Int a, Int b, Int c, Int d) : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    if (A == 0) throw std::invalid_argument("A must be nonzero");
    if (D == 0) throw std::invalid_argument("D must be nonzero");
    if (C < 1) throw std::invalid_argument("C must be positive");
    if (abs(B) < 2) throw std::invalid_argument("|B| must be at least 2");
}

std::optional<Solution> solve_at_n(const Equation& eq, long n) {
    Int t, zden;
    if (n >= 0) {
        t = eq.C * (eq.D + eq.A * pow_int(eq.B, static_cast<unsigned long>(n)));
        zden = eq.C;
    } else {
        const unsigned long k = (static_cast<unsigned long>(-n) + 1) / 2;
        const Int b2k = pow_int(eq.B, 2 * k);
        t = eq.C * (eq.D * b2k + eq.A * pow_int(eq.B, static_cast<unsigned long>(n + static_cast<long>(2 * k))));
        zden = eq.C * pow_int(abs(eq.B), k);
    }
    auto root = is_perfect_square(t);
    if (!root) return std::nullopt;
    Solution s{make_rat(*root, zden), n};
    if (Rat(eq.C) * s.z * s.z != Rat(eq.D) + Rat(eq.A) * rat_pow(eq.B, n))
        throw std::logic_error("solution identity violated");
    return s;
}

SolutionReport find_solutions(const Equation& eq, const Window& window) {
    if (window.lo > window.hi) throw std::invalid_argument("window.lo must not exceed window.hi");
    SolutionReport report{eq, window.lo, window.hi, {}};
    for (long n = window.lo; n <= window.hi; ++n) {
        if (auto s = solve_at_n(eq, n)) report.solutions.push_back(std::move(*s));
    }
    return report;
}

Window default_window(const Equation& eq) {
    const double log2b = std::log2(Int(abs(eq.B)).get_d());
    const double bits = static_cast<double>(bit_length(eq.D));
    return Window{static_cast<long>(std::floor((-2.0 * bits - 64.0) / log2b)),
                  static_cast<long>(std::ceil((4.0 * bits + 64.0) / log2b))};
}

PrimitivityReport is_primitive(const Equation& eq) {
    PrimitivityReport rep{true, {}};
    auto violate = [&rep](const char* label) {
        rep.primitive = false;
        rep.violated.emplace_back(label);
    };
    if (squarefree_part(eq.C) != eq.C) violate("i");
    if (gcd_int(eq.A, gcd_int(eq.C, eq.D)) != 1) violate("ii");
    const Int gAD = gcd_int(eq.A, eq.D);
    if (squarefree_part(gAD) != gAD) violate("iii");
    if (divides(eq.B * eq.B, eq.D)) violate("iv");
    if (divides(eq.B, eq.A)) violate("v");
    if (divides(squarefree_part(abs(eq.B)), eq.C) && divides(eq.B, eq.D)) violate("vi");
    return rep;
}

Reduction reduce_to_primitive(const Equation& input) {
    Int A = input.A, B = input.B, C = input.C, D = input.D;
    long shift = 0;
    Rat scale(1);
    const Int Bsq = B * B;
    bool changed = true;
    while (changed) {
        changed = false;
        // (i) strip the square part of C; z picks up its root
        if (Int s = squarefree_part(C); s != C) {
            scale *= Rat(isqrt(C / s));
            C = s;
            changed = true;
        }
        // (ii) common factor of all three coefficients cancels outright
        if (Int g = gcd_int(A, gcd_int(C, D)); g > 1) {
            A /= g;
            C /= g;
            D /= g;
            changed = true;
        }
        // (iii) square part of gcd(A, D) divides out, scaling z down
        Int gAD = gcd_int(A, D);
        if (Int hsq = gAD / squarefree_part(gAD); hsq > 1) {
            A /= hsq;
            D /= hsq;
            scale /= Rat(isqrt(hsq));
            changed = true;
        }
        // (iv) D/B^2 moves a square of B out of D: n -> n-2, z -> z/|B|
        while (divides(Bsq, D)) {
            D /= Bsq;
            shift -= 2;
            scale /= Rat(abs(B));
            changed = true;
        }
        // (v) A/B absorbs one power of B into the exponent: n -> n+1
        while (divides(B, A)) {
            A /= B;
            shift += 1;
            changed = true;
        }
    }
    return Reduction{Equation(A, B, C, D), shift, scale};
}

}  // namespace rn
