#include "rn/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstring>
#include <sstream>
#include <thread>

namespace rn {

namespace {

// ---- expression evaluator ---------------------------------------------------

struct Parser {
    const std::string& text;
    const std::map<std::string, Int>& bindings;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("bad expression \"" + text + "\": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int parse_expr() {
        Int v = parse_term();
        for (;;) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }

    Int parse_term() {
        Int v = parse_factor();
        for (;;) {
            if (eat('*')) {
                v *= parse_factor();
            } else if (eat('/')) {
                const Int d = parse_factor();
                if (d == 0) fail("division by zero");
                if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) throw inexact_division();
                v /= d;
            } else {
                return v;
            }
        }
    }

    Int parse_factor() {
        if (eat('-')) return -parse_factor();
        Int base = parse_primary();
        if (eat('^')) {
            const Int e = parse_factor();  // right-associative
            if (e < 0 || e > 1'000'000) fail("exponent out of range");
            return pow_int(base, e.get_ui());
        }
        return base;
    }

    Int parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            Int v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return Int(text.substr(start, pos - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string name = text.substr(start, pos - start);
            const auto it = bindings.find(name);
            if (it == bindings.end()) fail("unknown variable '" + name + "'");
            return it->second;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

// ---- constraints ------------------------------------------------------------

bool constraint_holds(const std::string& c, const std::map<std::string, Int>& bindings) {
    if (c.compare(0, 6, "prime(") == 0 && c.back() == ')') {
        const Int v = eval_int_expr(c.substr(6, c.size() - 7), bindings);
        return v >= 2 && is_probable_prime(v);
    }
    static const char* ops[] = {">=", "<=", "!=", "==", ">", "<", "="};
    for (const char* op : ops) {
        const auto at = c.find(op);
        if (at == std::string::npos) continue;
        const Int lhs = eval_int_expr(c.substr(0, at), bindings);
        const Int rhs = eval_int_expr(c.substr(at + std::strlen(op)), bindings);
        const std::string o(op);
        if (o == ">=") return lhs >= rhs;
        if (o == "<=") return lhs <= rhs;
        if (o == "!=") return lhs != rhs;
        if (o == ">") return lhs > rhs;
        if (o == "<") return lhs < rhs;
        return lhs == rhs;  // == and =
    }
    throw std::invalid_argument("bad constraint \"" + c + "\"");
}

// ---- parsing ----------------------------------------------------------------

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

const char* const kTableIds[] = {"neg-AC1", "pos-AC1", "neg-C", "pos-C", "neg-A", "pos-A"};

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("corpus line " + std::to_string(line) + ": " + msg);
}

// ---- verification helpers ---------------------------------------------------

constexpr long kMaxWindowWidth = 4096;

long eval_exponent(const std::string& expr, const std::map<std::string, Int>& bindings) {
    const Int v = eval_int_expr(expr, bindings);
    if (!v.fits_slong_p()) throw std::invalid_argument("exponent does not fit a machine word");
    return v.get_si();
}

std::map<std::string, Int> make_bindings(const CorpusRow& row, const Int& k, const std::optional<Int>& m) {
    std::map<std::string, Int> b;
    if (row.params.empty()) return b;
    if (std::find(row.params.begin(), row.params.end(), "k") == row.params.end())
        throw std::invalid_argument("parametric row has no parameter k");
    b["k"] = k;
    if (row.params.size() == 1) {
        if (m) throw std::invalid_argument("row has no second parameter");
        return b;
    }
    if (row.params.size() == 2) {
        if (!m) throw std::invalid_argument("row needs a second parameter");
        const std::string& other = row.params[0] == "k" ? row.params[1] : row.params[0];
        b[other] = *m;
        return b;
    }
    throw std::invalid_argument("rows support at most two parameters");
}

}  // namespace

Int eval_int_expr(const std::string& text, const std::map<std::string, Int>& bindings) {
    Parser p{text, bindings};
    Int v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

std::vector<CorpusRow> parse_corpus(const std::string& text) {
    std::vector<CorpusRow> rows;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split(line, '|');
        if (fields.size() != 11) parse_fail(line_no, "expected 11 fields, got " + std::to_string(fields.size()));
        CorpusRow row;
        row.line = line_no;
        row.table_id = fields[0];
        if (std::find(std::begin(kTableIds), std::end(kTableIds), row.table_id) == std::end(kTableIds))
            parse_fail(line_no, "unknown table id \"" + row.table_id + "\"");
        row.A = fields[1];
        row.B = fields[2];
        row.C = fields[3];
        row.D = fields[4];
        std::string k = fields[5];
        if (k.rfind(">=", 0) == 0) {
            row.K_is_lower_bound = true;
            k = trim(k.substr(2));
        }
        try {
            const unsigned long parsed = std::stoul(k);
            if (parsed == 0) throw std::invalid_argument("zero");
            row.K_claimed = parsed;
        } catch (const std::exception&) {
            parse_fail(line_no, "bad K field \"" + fields[5] + "\"");
        }
        row.exponents = split(fields[6], ',');
        if (row.exponents.empty() || row.exponents.front().empty()) parse_fail(line_no, "empty exponent list");
        if (!fields[7].empty()) row.params = split(fields[7], ',');
        if (!fields[8].empty()) row.constraints = split(fields[8], ';');
        if (!fields[9].empty()) {
            for (const auto& flag : split(fields[9], ',')) {
                if (flag == "suspect") row.suspect = true;
                else parse_fail(line_no, "unknown flag \"" + flag + "\"");
            }
        }
        row.note = fields[10];
        if (!row.parametric()) {
            // concrete rows must evaluate outright; catches data typos at load
            try {
                eval_int_expr(row.A);
                eval_int_expr(row.B);
                eval_int_expr(row.C);
                eval_int_expr(row.D);
                for (const auto& e : row.exponents) eval_exponent(e, {});
            } catch (const std::exception& ex) {
                parse_fail(line_no, ex.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<CorpusRow>& builtin_corpus() {
    static const std::vector<CorpusRow> rows = parse_corpus(builtin_corpus_text());
    return rows;
}

CorpusRow expand_family(const CorpusRow& row, const Int& k, const std::optional<Int>& m) {
    if (!row.parametric()) return row;
    const auto bindings = make_bindings(row, k, m);
    for (const auto& c : row.constraints) {
        if (!constraint_holds(c, bindings)) throw std::invalid_argument("constraint violated: " + c);
    }
    CorpusRow out = row;
    out.A = eval_int_expr(row.A, bindings).get_str();
    out.B = eval_int_expr(row.B, bindings).get_str();
    out.C = eval_int_expr(row.C, bindings).get_str();
    out.D = eval_int_expr(row.D, bindings).get_str();
    out.exponents.clear();
    for (const auto& e : row.exponents) out.exponents.push_back(std::to_string(eval_exponent(e, bindings)));
    out.params.clear();
    out.constraints.clear();
    return out;
}

const char* to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::confirmed: return "confirmed";
        case VerifyStatus::k_mismatch: return "K-mismatch";
        case VerifyStatus::exponent_mismatch: return "exponent-mismatch";
        case VerifyStatus::window_insufficient: return "window-insufficient";
    }
    return "unknown";
}

VerificationOutcome verify_row(const CorpusRow& row, long window_slack) {
    if (row.parametric()) throw std::invalid_argument("verify_row needs a concrete row");
    if (window_slack < 0) throw std::invalid_argument("window_slack must be non-negative");

    std::vector<long> claimed;
    for (const auto& e : row.exponents) claimed.push_back(eval_exponent(e, {}));
    std::sort(claimed.begin(), claimed.end());
    claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());

    long lo = claimed.front() - window_slack;
    if (claimed.front() >= 0 && lo < 0) lo = 0;
    const long hi = claimed.back() + window_slack;

    VerificationOutcome outcome{row, "", VerifyStatus::confirmed, std::nullopt};
    if (hi - lo + 1 > kMaxWindowWidth) {
        outcome.status = VerifyStatus::window_insufficient;
        return outcome;
    }

    const Equation eq(eval_int_expr(row.A), eval_int_expr(row.B), eval_int_expr(row.C), eval_int_expr(row.D));
    SolutionReport report = find_solutions(eq, Window{lo, hi});
    std::vector<long> observed;
    for (const auto& s : report.solutions) observed.push_back(s.n);

    const bool subset = std::includes(observed.begin(), observed.end(), claimed.begin(), claimed.end());
    if (row.K_is_lower_bound) {
        if (!subset) outcome.status = VerifyStatus::exponent_mismatch;
        else if (observed.size() < row.K_claimed) outcome.status = VerifyStatus::k_mismatch;
    } else {
        if (observed != claimed) {
            outcome.status = observed.size() != row.K_claimed ? VerifyStatus::k_mismatch
                                                              : VerifyStatus::exponent_mismatch;
        }
    }
    outcome.observed = std::move(report);
    return outcome;
}

VerifySummary verify_all(const std::vector<CorpusRow>& rows, long window_slack,
                         std::size_t samples_per_family, unsigned workers) {
    // Enumerate the work list serially so outcome order is corpus order.
    std::vector<std::pair<CorpusRow, std::string>> tasks;
    for (const auto& row : rows) {
        if (!row.parametric()) {
            tasks.emplace_back(row, "");
            continue;
        }
        const std::string& first = row.params[0];
        const bool two = row.params.size() == 2;
        const std::string second = two ? row.params[1] : "";
        std::size_t found = 0;
        auto try_values = [&](const Int& v1, const Int& v2) {
            std::map<std::string, Int> b{{first, v1}};
            if (two) b[second] = v2;
            try {
                for (const auto& c : row.constraints)
                    if (!constraint_holds(c, b)) return;
                const Int& kv = first == "k" ? v1 : v2;
                std::optional<Int> mv;
                if (two) mv = first == "k" ? v2 : v1;
                CorpusRow concrete = expand_family(row, kv, mv);
                std::string inst = first + "=" + v1.get_str();
                if (two) inst += "," + second + "=" + v2.get_str();
                tasks.emplace_back(std::move(concrete), std::move(inst));
                ++found;
            } catch (const inexact_division&) {
                // parameter value inadmissible
            }
        };
        if (!two) {
            for (long v = 0; v <= 200 && found < samples_per_family; ++v) try_values(Int(v), Int(0));
        } else {
            for (long sum = 0; sum <= 120 && found < samples_per_family; ++sum)
                for (long v1 = 0; v1 <= sum && found < samples_per_family; ++v1)
                    try_values(Int(v1), Int(sum - v1));
        }
    }

    VerifySummary summary;
    summary.outcomes.resize(tasks.size());
    auto run_task = [&](std::size_t i) {
        summary.outcomes[i] = verify_row(tasks[i].first, window_slack);
        summary.outcomes[i].instantiation = tasks[i].second;
    };
    unsigned n_workers = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, tasks.size()));
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) run_task(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (const auto& o : summary.outcomes) {
        switch (o.status) {
            case VerifyStatus::confirmed: ++summary.confirmed; break;
            case VerifyStatus::window_insufficient: ++summary.window_insufficient; break;
            default: ++summary.mismatched; break;
        }
    }
    return summary;
}

}  // namespace rn
