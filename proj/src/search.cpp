#include "rn/search.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>

namespace rn {

namespace {

constexpr std::size_t kDefaultBudgetBytes = 256u << 20;
// rough footprint of one (D, n) aggregation entry: map node + key limbs + one exponent
constexpr std::size_t kBytesPerEntry = 96;

std::size_t resolve_budget(const SweepOptions& opts) {
    if (opts.memory_budget_bytes != 0) return opts.memory_budget_bytes;
    if (const char* env = std::getenv("RNKIT_MEMORY_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::invalid_argument("RNKIT_MEMORY_BUDGET must be a positive byte count");
    }
    return kDefaultBudgetBytes;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_sqrt(const Int& v) {
    Int r = isqrt(v);
    if (r * r < v) ++r;
    return r;
}

// All hits inside one D-chunk. n ascending keeps each exponent list sorted
// and duplicate-free without post-processing.
std::vector<SearchHit> sweep_chunk(const SearchSpec& spec, const Int& lo, const Int& hi) {
    std::map<Int, std::vector<long>> agg;
    Int power = spec.A;  // A * B^n
    for (long n = 0; n <= spec.n_max; ++n, power *= spec.B) {
        const Int upper = hi + power;
        if (upper < 0) continue;
        const Int z_max = isqrt(floor_div(upper, spec.C));
        const Int lower = lo + power;
        Int z = lower > 0 ? ceil_sqrt(ceil_div(lower, spec.C)) : Int(0);
        Int zsq_c = spec.C * z * z;
        for (; z <= z_max; ++z) {
            agg[zsq_c - power].push_back(n);
            zsq_c += spec.C * (2 * z + 1);
        }
    }
    std::vector<SearchHit> hits;
    for (auto& [d, ns] : agg) {
        if (d == 0 || ns.size() < spec.k_min) continue;
        if (spec.primitive_only && !is_primitive(Equation(spec.A, spec.B, spec.C, d)).primitive) continue;
        hits.push_back(SearchHit{d, std::move(ns)});
    }
    return hits;
}

}  // namespace

std::vector<SearchHit> sweep(const SearchSpec& spec, const SweepOptions& opts) {
    if (spec.A < 1) throw std::invalid_argument("A must be positive");
    if (spec.B < 2) throw std::invalid_argument("B must be at least 2");
    if (spec.C < 1) throw std::invalid_argument("C must be positive");
    if (spec.d_lo > spec.d_hi) throw std::invalid_argument("d_lo must not exceed d_hi");
    if (spec.n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    if (spec.k_min < 1) throw std::invalid_argument("k_min must be at least 1");

    // Worst-case entries in a chunk of width W are (n_max+1)*(sqrt(W/C)+1);
    // pick W so that stays within the budget.
    const std::size_t budget_entries = resolve_budget(opts) / kBytesPerEntry;
    const std::size_t per_n = budget_entries / static_cast<std::size_t>(spec.n_max + 1);
    if (per_n < 2) throw std::invalid_argument("memory budget too small for this n_max");
    const Int chunk_width = spec.C * Int(per_n - 1) * Int(per_n - 1);

    std::vector<std::pair<Int, Int>> chunks;
    for (Int lo = spec.d_lo; lo <= spec.d_hi; lo += chunk_width) {
        Int hi = lo + chunk_width - 1;
        if (hi > spec.d_hi) hi = spec.d_hi;
        chunks.emplace_back(lo, hi);
    }

    std::vector<std::vector<SearchHit>> partial(chunks.size());
    unsigned workers = opts.workers != 0 ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            partial[i] = sweep_chunk(spec, chunks[i].first, chunks[i].second);
            if (opts.progress) *opts.progress << "sweep: chunk " << (i + 1) << "/" << chunks.size() << " done\n";
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> done{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < chunks.size(); i = next.fetch_add(1)) {
                    partial[i] = sweep_chunk(spec, chunks[i].first, chunks[i].second);
                    done.fetch_add(1);
                }
            });
        }
        for (auto& t : pool) t.join();
        if (opts.progress) *opts.progress << "sweep: " << done.load() << "/" << chunks.size() << " chunks done\n";
    }

    std::vector<SearchHit> hits;
    for (auto& part : partial)
        for (auto& h : part) hits.push_back(std::move(h));
    return hits;
}

double bound_positive(const Int& A, const Int& B, const Int& C, const Int& D_M) {
    if (A < 1 || B < 2 || C < 1 || D_M < 1) throw std::invalid_argument("bound arguments must be positive with B >= 2");
    const double dm = D_M.get_d();
    return std::sqrt(dm / C.get_d()) * (std::log(4.0 * dm / A.get_d()) / std::log(B.get_d()));
}

double bound_negative(const Int& A, const Int& B, const Int& C, const Int& D_M) {
    if (A < 1 || B < 2 || C < 1 || D_M < 1) throw std::invalid_argument("bound arguments must be positive with B >= 2");
    const double pi = 3.14159265358979323846;
    return std::sqrt(D_M.get_d()) * (pi - 2.0) / (std::sqrt(C.get_d()) * std::log(B.get_d()));
}

std::pair<std::size_t, std::size_t> empirical_counts(const Int& A, const Int& B, const Int& C,
                                                     const Int& D_M, long n_max,
                                                     const SweepOptions& opts) {
    if (D_M < 1) return {0, 0};
    SearchSpec pos{A, B, C, Int(1), D_M, n_max, 1, false};
    SearchSpec neg{A, B, C, -D_M, Int(-1), n_max, 1, false};
    return {sweep(pos, opts).size(), sweep(neg, opts).size()};
}

}  // namespace rn
