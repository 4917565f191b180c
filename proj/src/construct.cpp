#include "rn/construct.hpp"

#include <set>

namespace rn {

namespace {

struct RatPoint {
    Rat x, y;
};

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void verify_exponents(const Equation& eq, const std::array<long, 3>& ns, const char* what) {
    for (long n : ns) {
        if (!solve_at_n(eq, n)) throw std::logic_error(std::string(what) + ": verification failed at n = " + std::to_string(n));
    }
}

}  // namespace

Equation construct_double(const DoubleSpec& spec) {
    require(spec.A >= 1, "A must be positive");
    require(spec.B >= 2, "B must be at least 2");
    require(spec.C >= 1, "C must be positive");
    require(spec.n1 >= 0 && spec.n1 < spec.n2, "exponents must satisfy 0 <= n1 < n2");
    require(spec.E >= 1 && spec.F >= 1, "E and F must be positive");
    if ((spec.E - spec.F) % 2 != 0) throw parity_error();
    const Int b_lo = spec.A * pow_int(spec.B, static_cast<unsigned long>(spec.n1));
    const Int b_hi = spec.A * pow_int(spec.B, static_cast<unsigned long>(spec.n2));
    if (spec.C * spec.E * spec.F != b_hi - b_lo) throw factor_mismatch_error();
    const Rat d_rat = make_rat(spec.C * (spec.E * spec.E + spec.F * spec.F), 4) - make_rat(b_lo + b_hi, 2);
    if (d_rat.get_den() != 1) throw std::logic_error("double construction produced a non-integer D");
    const Int D = d_rat.get_num();
    if (D == 0) throw zero_d_error();
    Equation eq(spec.A, spec.B, spec.C, D);
    if (!solve_at_n(eq, spec.n1) || !solve_at_n(eq, spec.n2))
        throw std::logic_error("double construction: verification failed");
    return eq;
}

std::vector<DoubleSpec> enumerate_double_specs(const Int& A, const Int& B, const Int& C,
                                               long n1, long n2, std::size_t limit) {
    require(A >= 1, "A must be positive");
    require(B >= 2, "B must be at least 2");
    require(C >= 1, "C must be positive");
    require(n1 >= 0 && n1 < n2, "exponents must satisfy 0 <= n1 < n2");
    std::vector<DoubleSpec> out;
    const Int G = A * (pow_int(B, static_cast<unsigned long>(n2)) - pow_int(B, static_cast<unsigned long>(n1)));
    if (!mpz_divisible_p(G.get_mpz_t(), C.get_mpz_t())) return out;
    const Int H = G / C;
    // F ascending gives E = H/F descending; F <= sqrt(H) walks each
    // unordered pair {E, F} exactly once with E >= F.
    for (Int F = 1; F * F <= H && out.size() < limit; ++F) {
        if (!mpz_divisible_p(H.get_mpz_t(), F.get_mpz_t())) continue;
        Int E = H / F;
        if ((E - F) % 2 != 0) continue;
        out.push_back(DoubleSpec{A, B, C, n1, n2, std::move(E), F});
    }
    return out;
}

Curve::Curve(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == b || a == c || b == c) throw std::invalid_argument("curve roots must be pairwise distinct");
}

Rat double_point(const Curve& curve, const CurvePoint& p) {
    if (p.Ysq == 0) throw torsion_error("two-torsion point: doubling lands at infinity");
    const Rat u = p.X + Rat(curve.a), v = p.X + Rat(curve.b), w = p.X + Rat(curve.c);
    const Rat S = u * v + u * w + v * w;
    return S * S / (Rat(4) * p.Ysq) - (Rat(curve.a + curve.b + curve.c) + Rat(2) * p.X);
}

ConstructedTriple construct_triple(const Int& B, long n1, long n2, long n3, const Int& X) {
    require(B >= 2, "B must be at least 2");
    require(n1 >= 0 && n1 < n2 && n2 < n3, "exponents must satisfy 0 <= n1 < n2 < n3");
    const Curve curve(pow_int(B, static_cast<unsigned long>(n1)), pow_int(B, static_cast<unsigned long>(n2)),
                      pow_int(B, static_cast<unsigned long>(n3)));
    const Int Ysq = (X + curve.a) * (X + curve.b) * (X + curve.c);
    const Rat X2 = double_point(curve, CurvePoint{Rat(X), Rat(Ysq)});
    if (X2 == 0) throw zero_d_error();
    Int D = X2.get_num(), A = X2.get_den();
    if (Ysq < 0) {
        A = -A;
        D = -D;
    }
    const Int C = squarefree_part(A * Ysq);
    Equation eq(A, B, C, D);
    verify_exponents(eq, {n1, n2, n3}, "triple construction");
    return ConstructedTriple{std::move(eq), {n1, n2, n3}, X2};
}

ConstructedTriple corollary_D(const Int& B, long n1, long n2, long n3) {
    require(B >= 2, "B must be at least 2");
    require(n1 >= 0 && n1 < n2 && n2 < n3, "exponents must satisfy 0 <= n1 < n2 < n3");
    require(n3 <= n1 + n2, "exponents must satisfy n3 <= n1 + n2");
    require((n1 + n2 + n3) % 2 == 0, "n1 + n2 + n3 must be even");
    auto bpow = [&B](long e) { return pow_int(B, static_cast<unsigned long>(e)); };
    const Int display = bpow(n1 + n2 - n3) + bpow(n1 + n3 - n2) + bpow(n2 + n3 - n1)
                        - 2 * (bpow(n1) + bpow(n2) + bpow(n3));
    if (display == 0) throw zero_d_error();
    const Rat X2 = make_rat(display, 4);
    const Int A = X2.get_den();
    if (A != 1 && A != 4) throw std::logic_error("corollary produced A outside {1, 4}");
    Equation eq(A, B, 1, X2.get_num());
    verify_exponents(eq, {n1, n2, n3}, "corollary construction");
    return ConstructedTriple{std::move(eq), {n1, n2, n3}, X2};
}

IntegralityCertificate integrality_certificate(const Curve& curve, const Int& X) {
    const Int u = X + curve.a, v = X + curve.b, w = X + curve.c;
    if (u == 0 || v == 0 || w == 0) throw std::invalid_argument("X coincides with a curve root");
    IntegralityCertificate cert{make_rat(v * w, u), make_rat(u * w, v), make_rat(u * v, w), false};
    cert.all_integer = cert.alpha.get_den() == 1 && cert.beta.get_den() == 1 && cert.gamma.get_den() == 1;
    return cert;
}

std::vector<ConstructedTriple> triple_sequence(const Int& B, long n1, long n2, long n3,
                                               const CurvePoint& p, unsigned m_max) {
    require(B >= 2, "B must be at least 2");
    require(n1 >= 0 && n1 < n2 && n2 < n3, "exponents must satisfy 0 <= n1 < n2 < n3");
    const Curve curve(pow_int(B, static_cast<unsigned long>(n1)), pow_int(B, static_cast<unsigned long>(n2)),
                      pow_int(B, static_cast<unsigned long>(n3)));
    if ((p.X + Rat(curve.a)) * (p.X + Rat(curve.b)) * (p.X + Rat(curve.c)) != p.Ysq)
        throw std::invalid_argument("point is not on the curve");
    if (p.Ysq == 0) throw torsion_error("torsion point: base point is 2-torsion");
    if (p.Ysq < 0) throw std::invalid_argument("Ysq must be the square of a rational");
    const auto num_root = is_perfect_square(p.Ysq.get_num());
    const auto den_root = is_perfect_square(p.Ysq.get_den());
    if (!num_root || !den_root) throw std::invalid_argument("Ysq must be the square of a rational");

    const RatPoint base{p.X, make_rat(*num_root, *den_root)};
    const Rat sigma1(curve.a + curve.b + curve.c);
    const Rat sigma2(curve.a * curve.b + curve.a * curve.c + curve.b * curve.c);
    // Explicit return type: gmpxx expression templates must not outlive
    // the temporaries of the return statement.
    auto tangent_slope = [&](const RatPoint& q) -> Rat {
        return (Rat(3) * q.x * q.x + Rat(2) * sigma1 * q.x + sigma2) / (Rat(2) * q.y);
    };

    std::vector<ConstructedTriple> out;
    std::set<Rat> seen{base.x};
    RatPoint cur = base;
    for (unsigned m = 1; m <= m_max; ++m) {
        if (cur.y == 0) throw torsion_error("torsion point: multiple is 2-torsion");
        const Rat Ysq_cur = cur.y * cur.y;
        const Rat X2 = double_point(curve, CurvePoint{cur.x, Ysq_cur});
        if (X2 == 0) throw zero_d_error();
        const Int A = X2.get_den();
        const Int C = square_class(Rat(A) * Ysq_cur);
        Equation eq(A, B, C, X2.get_num());
        verify_exponents(eq, {n1, n2, n3}, "sequence construction");
        out.push_back(ConstructedTriple{std::move(eq), {n1, n2, n3}, X2});
        if (m == m_max) break;
        // advance cur = (m+1)P by adding the base point
        Rat lambda;
        if (cur.x == base.x) {
            if (cur.y != base.y) throw torsion_error("torsion point: sum is the point at infinity");
            lambda = tangent_slope(cur);
        } else {
            lambda = (base.y - cur.y) / (base.x - cur.x);
        }
        Rat x3 = lambda * lambda - sigma1 - cur.x - base.x;
        Rat y3 = lambda * (cur.x - x3) - cur.y;
        if (!seen.insert(x3).second) throw torsion_error("torsion point: multiples repeat");
        cur = RatPoint{std::move(x3), std::move(y3)};
    }
    return out;
}

}  // namespace rn
