#pragma once

// The survey tables as machine-readable data: parsing, family expansion,
// and verification of every row against the solver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rn/equation.hpp"

namespace rn {

// Thrown by eval_int_expr when / does not divide exactly; family
// enumeration treats it as "parameter value inadmissible".
struct inexact_division : std::invalid_argument {
    inexact_division() : std::invalid_argument("division is not exact") {}
};

// Exact-integer expression evaluator for the corpus formula language and
// the CLI's --D-expr flag: + - * / ^ with parentheses, unary minus, decimal
// literals, and identifier variables resolved through `bindings`.
// / requires exact divisibility; ^ requires a non-negative exponent.
Int eval_int_expr(const std::string& text, const std::map<std::string, Int>& bindings = {});

// One table row, stored as printed: coefficient fields are expressions in
// the declared parameters (plain integers for concrete rows).
struct CorpusRow {
    std::string table_id;  // neg-AC1, pos-AC1, neg-C, pos-C, neg-A, pos-A
    std::string A, B, C, D;
    std::size_t K_claimed = 0;
    bool K_is_lower_bound = false;  // ">=" claims; equality not required
    std::vector<std::string> exponents;
    std::vector<std::string> params;       // display order, e.g. {"p","k"}
    std::vector<std::string> constraints;  // e.g. "k>=4", "k!=2", "prime(p)"
    bool suspect = false;
    std::string note;
    std::size_t line = 0;  // 1-based line in the data file

    bool parametric() const { return !params.empty(); }
};

// Parses the documented pipe-separated format (see data/tables.rn).
// Throws std::invalid_argument naming the offending line.
std::vector<CorpusRow> parse_corpus(const std::string& text);

// The shipped tables, embedded at build time.
const char* builtin_corpus_text();
const std::vector<CorpusRow>& builtin_corpus();

// Returns the row with every formula evaluated at k (and, for two-parameter
// families, the second declared parameter bound to m). The identity on
// concrete rows. Throws std::invalid_argument on constraint violations,
// missing/extra parameters, and inexact division.
CorpusRow expand_family(const CorpusRow& row, const Int& k, const std::optional<Int>& m = std::nullopt);

enum class VerifyStatus { confirmed, k_mismatch, exponent_mismatch, window_insufficient };
const char* to_string(VerifyStatus status);

struct VerificationOutcome {
    CorpusRow row;              // concrete
    std::string instantiation;  // "k=5", "p=3,k=1", ... ; empty for concrete rows
    VerifyStatus status = VerifyStatus::confirmed;
    // Absent only for window_insufficient, where no search was attempted.
    std::optional<SolutionReport> observed;
};

// Runs find_solutions over [min claimed n - slack, max claimed n + slack]
// (the lower end clamped to 0 unless the claims include negative n) and
// compares against the claims. Exact rows need set equality; ">=" rows need
// claimed exponents to be a subset of the observed and observed K >= claimed.
// Mismatches are reported, never thrown. Windows wider than an internal cap
// come back as window_insufficient.
VerificationOutcome verify_row(const CorpusRow& row, long window_slack = 10);

struct VerifySummary {
    std::vector<VerificationOutcome> outcomes;  // corpus order
    std::size_t confirmed = 0;
    std::size_t mismatched = 0;
    std::size_t window_insufficient = 0;
};

// Verifies every concrete row plus the first `samples_per_family` admissible
// instantiations of every parametric row (parameters enumerated by ascending
// sum, then first declared parameter; values making a / inexact are skipped).
// Rows are verified in parallel; outcomes keep corpus order.
VerifySummary verify_all(const std::vector<CorpusRow>& rows, long window_slack = 10,
                         std::size_t samples_per_family = 3, unsigned workers = 0);

}  // namespace rn
