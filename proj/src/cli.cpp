#include "rn/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rn/json_io.hpp"

namespace rn {

namespace {

enum class Format { json, csv, pretty };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "pretty") return Format::pretty;
    throw std::invalid_argument("--format must be json, csv or pretty");
}

Int parse_int(const char* name, const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be a decimal integer, got \"" + s + "\"");
    }
}

Rat parse_rat(const char* name, const std::string& s) {
    try {
        Rat q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be a rational like 3 or -3/4, got \"" + s + "\"");
    }
}

std::string eq_str(const Equation& eq) {
    return "(" + eq.A.get_str() + ", " + eq.B.get_str() + ", " + eq.C.get_str() + ", " + eq.D.get_str() + ")";
}

template <class Seq, class F>
std::string join(const Seq& xs, const char* sep, F f) {
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty()) out += sep;
        out += f(x);
    }
    return out;
}

// Flags shared by every command that names a full equation.
struct EqFlags {
    std::string A, B, C, D, D_expr;
    CLI::Option* d_opt = nullptr;
    CLI::Option* d_expr_opt = nullptr;

    void add(CLI::App* cmd) {
        cmd->add_option("-A,--A", A, "coefficient A")->required();
        cmd->add_option("-B,--B", B, "base B")->required();
        cmd->add_option("-C,--C", C, "coefficient C")->required();
        d_opt = cmd->add_option("-D,--D", D, "constant D (decimal integer)");
        d_expr_opt = cmd->add_option("--D-expr", D_expr,
                                     "constant D as an exact expression, e.g. \"277665*17^6\"");
        d_opt->excludes(d_expr_opt);
    }

    Equation equation() const {
        if (d_opt->count() + d_expr_opt->count() != 1)
            throw std::invalid_argument("exactly one of -D and --D-expr is required");
        const Int d = d_opt->count() ? parse_int("-D", D) : eval_int_expr(D_expr);
        return Equation(parse_int("-A", A), parse_int("-B", B), parse_int("-C", C), d);
    }
};

void add_format_flag(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->default_val("json");
}

// ---- per-command emitters ---------------------------------------------------

void emit_report(std::ostream& out, Format fmt, const SolutionReport& report) {
    switch (fmt) {
        case Format::json:
            out << to_json(report).dump() << '\n';
            break;
        case Format::csv:
            out << "n,z_num,z_den\n";
            for (const auto& s : report.solutions)
                out << s.n << ',' << s.z.get_num().get_str() << ',' << s.z.get_den().get_str() << '\n';
            break;
        case Format::pretty:
            out << "K = " << report.K() << " for " << eq_str(report.eq) << " with n in ["
                << report.n_min << ", " << report.n_max << "]\n";
            for (const auto& s : report.solutions)
                out << "  n = " << s.n << "\tz = " << s.z.get_str() << '\n';
            break;
    }
}

void emit_triple(std::ostream& out, Format fmt, const ConstructedTriple& t, unsigned m = 0) {
    switch (fmt) {
        case Format::json: {
            Json j;
            if (m != 0) j["m"] = m;
            j.update(to_json(t));
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            if (m != 0) out << m << ',';
            out << t.eq.A.get_str() << ',' << t.eq.B.get_str() << ',' << t.eq.C.get_str() << ','
                << t.eq.D.get_str() << ',' << t.exponents[0] << ',' << t.exponents[1] << ','
                << t.exponents[2] << ',' << t.X2.get_str() << '\n';
            break;
        case Format::pretty:
            if (m != 0) out << "m = " << m << ": ";
            out << eq_str(t.eq) << " with solutions at n = " << t.exponents[0] << ", "
                << t.exponents[1] << ", " << t.exponents[2] << "  (X2 = " << t.X2.get_str() << ")\n";
            break;
    }
}

const char* kTripleCsvHeader = "A,B,C,D,n1,n2,n3,X2\n";

// ---- command state ----------------------------------------------------------

struct SolveCmd {
    EqFlags eq;
    long n_min = 0, n_max = 0;
    CLI::Option* n_min_opt = nullptr;
    CLI::Option* n_max_opt = nullptr;
    std::string fmt;
};

struct SearchCmd {
    std::string A, B, C, d_lo, d_hi;
    long n_max = 0;
    std::size_t k_min = 1;
    bool primitive_only = false;
    unsigned workers = 0;
    std::size_t budget = 0;
    bool progress = false;
    std::string fmt;
};

struct DoubleCmd {
    std::string A, B, C, E, F;
    long n1 = 0, n2 = 0;
    bool enumerate = false;
    std::size_t limit = 16;
    CLI::Option* e_opt = nullptr;
    CLI::Option* f_opt = nullptr;
    std::string fmt;
};

struct TripleCmd {
    std::string B, X = "0";
    std::vector<long> exponents;
    std::string fmt;
};

struct SequenceCmd {
    std::string B, px, py;
    std::vector<long> exponents;
    unsigned m_max = 5;
    std::string fmt;
};

struct BoundCmd {
    std::string A, B, C, d_max;
    bool empirical = false;
    long n_max = 0;
    CLI::Option* n_max_opt = nullptr;
    unsigned workers = 0;
    std::string fmt;
};

struct VerifyCmd {
    std::string file, table;
    long slack = 10;
    std::size_t samples = 3;
    unsigned workers = 0;
    bool strict = false;
    bool all = false;
    std::string fmt;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"toolkit for exponential Diophantine equations C z^2 = D + A B^n", "rnkit"};
    app.require_subcommand(1);

    int exit_code = 0;

    // solve ---------------------------------------------------------------
    auto solve = std::make_shared<SolveCmd>();
    {
        auto* cmd = app.add_subcommand("solve", "find all solutions (z, n) over an exponent window");
        solve->eq.add(cmd);
        solve->n_min_opt = cmd->add_option("--n-min", solve->n_min, "window lower end (default 0)");
        solve->n_max_opt = cmd->add_option("--n-max", solve->n_max, "window upper end (default derived)");
        add_format_flag(cmd, solve->fmt);
        cmd->callback([solve, &out] {
            const Equation eq = solve->eq.equation();
            Window w = default_window(eq);
            if (solve->n_min_opt->count()) w.lo = solve->n_min;
            else if (solve->n_max_opt->count()) w.lo = 0;
            if (solve->n_max_opt->count()) w.hi = solve->n_max;
            emit_report(out, parse_format(solve->fmt), find_solutions(eq, w));
        });
    }

    // reduce --------------------------------------------------------------
    auto reduce = std::make_shared<SolveCmd>();
    {
        auto* cmd = app.add_subcommand("reduce", "rewrite an equation to its primitive form");
        reduce->eq.add(cmd);
        add_format_flag(cmd, reduce->fmt);
        cmd->callback([reduce, &out] {
            const Equation eq = reduce->eq.equation();
            const PrimitivityReport pr = is_primitive(eq);
            const Reduction red = reduce_to_primitive(eq);
            switch (parse_format(reduce->fmt)) {
                case Format::json: {
                    Json j;
                    j["input"] = to_json(eq);
                    j["input_violations"] = pr.violated;
                    j.update(to_json(red));
                    out << j.dump() << '\n';
                    break;
                }
                case Format::csv:
                    out << "A,B,C,D,n_shift,z_scale\n"
                        << red.eq.A.get_str() << ',' << red.eq.B.get_str() << ',' << red.eq.C.get_str()
                        << ',' << red.eq.D.get_str() << ',' << red.n_shift << ',' << red.z_scale.get_str()
                        << '\n';
                    break;
                case Format::pretty:
                    out << "input:     " << eq_str(eq) << "  violations: "
                        << (pr.violated.empty() ? "none"
                                                : join(pr.violated, ", ", [](const std::string& s) { return s; }))
                        << '\n'
                        << "primitive: " << eq_str(red.eq) << '\n'
                        << "n_shift = " << red.n_shift << '\n'
                        << "z_scale = " << red.z_scale.get_str() << '\n';
                    break;
            }
        });
    }

    // search ----------------------------------------------------------------
    auto search = std::make_shared<SearchCmd>();
    {
        auto* cmd = app.add_subcommand("search", "sweep a D range for equations with many solutions");
        cmd->add_option("-A,--A", search->A, "coefficient A")->required();
        cmd->add_option("-B,--B", search->B, "base B")->required();
        cmd->add_option("-C,--C", search->C, "coefficient C")->required();
        cmd->add_option("--d-lo", search->d_lo, "lower end of the D range")->required();
        cmd->add_option("--d-hi", search->d_hi, "upper end of the D range")->required();
        cmd->add_option("--n-max", search->n_max, "largest exponent considered")->required();
        cmd->add_option("--k-min", search->k_min, "report only D with at least this many solutions");
        cmd->add_flag("--primitive-only", search->primitive_only, "keep only primitive equations");
        cmd->add_option("--workers", search->workers, "worker threads (0 = all cores)");
        cmd->add_option("--memory-budget", search->budget, "aggregation budget in bytes");
        cmd->add_flag("--progress", search->progress, "print per-chunk progress to the diagnostic stream");
        add_format_flag(cmd, search->fmt);
        cmd->callback([search, &out, &err] {
            SearchSpec spec;
            spec.A = parse_int("-A", search->A);
            spec.B = parse_int("-B", search->B);
            spec.C = parse_int("-C", search->C);
            spec.d_lo = parse_int("--d-lo", search->d_lo);
            spec.d_hi = parse_int("--d-hi", search->d_hi);
            spec.n_max = search->n_max;
            spec.k_min = search->k_min;
            spec.primitive_only = search->primitive_only;
            SweepOptions opts;
            opts.workers = search->workers;
            opts.memory_budget_bytes = search->budget;
            if (search->progress) opts.progress = &err;
            const auto hits = sweep(spec, opts);
            const Format fmt = parse_format(search->fmt);
            if (fmt == Format::csv) out << "D,K,n\n";
            for (const auto& hit : hits) {
                switch (fmt) {
                    case Format::json:
                        out << to_json(hit).dump() << '\n';
                        break;
                    case Format::csv:
                        out << hit.D.get_str() << ',' << hit.K() << ','
                            << join(hit.exponents, ";", [](long n) { return std::to_string(n); }) << '\n';
                        break;
                    case Format::pretty:
                        out << "D = " << hit.D.get_str() << ": K = " << hit.K() << ", n = "
                            << join(hit.exponents, " ", [](long n) { return std::to_string(n); }) << '\n';
                        break;
                }
            }
            err << "sweep: " << hits.size() << " hits\n";
        });
    }

    // construct-double ------------------------------------------------------
    auto dbl = std::make_shared<DoubleCmd>();
    {
        auto* cmd = app.add_subcommand("construct-double",
                                       "build a two-solution equation from a factorization E, F");
        cmd->add_option("-A,--A", dbl->A, "coefficient A")->required();
        cmd->add_option("-B,--B", dbl->B, "base B")->required();
        cmd->add_option("-C,--C", dbl->C, "coefficient C")->required();
        cmd->add_option("--n1", dbl->n1, "smaller exponent")->required();
        cmd->add_option("--n2", dbl->n2, "larger exponent")->required();
        dbl->e_opt = cmd->add_option("-E,--E", dbl->E, "larger factor");
        dbl->f_opt = cmd->add_option("-F,--F", dbl->F, "smaller factor");
        cmd->add_flag("--enumerate", dbl->enumerate, "list admissible (E, F) pairs instead");
        cmd->add_option("--limit", dbl->limit, "maximum pairs to enumerate");
        add_format_flag(cmd, dbl->fmt);
        cmd->callback([dbl, &out] {
            const Format fmt = parse_format(dbl->fmt);
            const Int A = parse_int("-A", dbl->A), B = parse_int("-B", dbl->B), C = parse_int("-C", dbl->C);
            const bool have_pair = dbl->e_opt->count() && dbl->f_opt->count();
            if (dbl->enumerate == have_pair)
                throw std::invalid_argument("give either -E and -F or --enumerate");
            if (dbl->enumerate) {
                const auto specs = enumerate_double_specs(A, B, C, dbl->n1, dbl->n2, dbl->limit);
                if (fmt == Format::csv) out << "A,B,C,n1,n2,E,F,D\n";
                for (const auto& spec : specs) {
                    std::string d, note;
                    try {
                        d = construct_double(spec).D.get_str();
                    } catch (const domain_error& e) {
                        note = e.what();
                    }
                    switch (fmt) {
                        case Format::json: {
                            Json j = to_json(spec);
                            if (note.empty()) j["D"] = d;
                            else j["error"] = note;
                            out << j.dump() << '\n';
                            break;
                        }
                        case Format::csv:
                            out << spec.A.get_str() << ',' << spec.B.get_str() << ',' << spec.C.get_str()
                                << ',' << spec.n1 << ',' << spec.n2 << ',' << spec.E.get_str() << ','
                                << spec.F.get_str() << ',' << d << '\n';
                            break;
                        case Format::pretty:
                            out << "E = " << spec.E.get_str() << ", F = " << spec.F.get_str() << " -> "
                                << (note.empty() ? "D = " + d : note) << '\n';
                            break;
                    }
                }
            } else {
                const DoubleSpec spec{A, B, C, dbl->n1, dbl->n2, parse_int("-E", dbl->E),
                                      parse_int("-F", dbl->F)};
                const Equation eq = construct_double(spec);
                switch (fmt) {
                    case Format::json: {
                        Json j = to_json(eq);
                        j["n1"] = spec.n1;
                        j["n2"] = spec.n2;
                        j["E"] = spec.E.get_str();
                        j["F"] = spec.F.get_str();
                        out << j.dump() << '\n';
                        break;
                    }
                    case Format::csv:
                        out << "A,B,C,D,n1,n2,E,F\n"
                            << eq.A.get_str() << ',' << eq.B.get_str() << ',' << eq.C.get_str() << ','
                            << eq.D.get_str() << ',' << spec.n1 << ',' << spec.n2 << ','
                            << spec.E.get_str() << ',' << spec.F.get_str() << '\n';
                        break;
                    case Format::pretty:
                        out << eq_str(eq) << " with solutions at n = " << spec.n1 << ", " << spec.n2
                            << '\n';
                        break;
                }
            }
        });
    }

    // construct-triple --------------------------------------------------------
    auto triple = std::make_shared<TripleCmd>();
    {
        auto* cmd = app.add_subcommand("construct-triple",
                                       "build a three-solution equation by point doubling");
        cmd->add_option("-B,--B", triple->B, "base B")->required();
        cmd->add_option("--exponents", triple->exponents, "the three exponents n1,n2,n3")
            ->required()
            ->delimiter(',')
            ->expected(3);
        cmd->add_option("-X,--X", triple->X, "integer abscissa of the base point (default 0)");
        add_format_flag(cmd, triple->fmt);
        cmd->callback([triple, &out] {
            const Format fmt = parse_format(triple->fmt);
            const auto t = construct_triple(parse_int("-B", triple->B), triple->exponents[0],
                                            triple->exponents[1], triple->exponents[2],
                                            parse_int("-X", triple->X));
            if (fmt == Format::csv) out << kTripleCsvHeader;
            emit_triple(out, fmt, t);
        });
    }

    // corollary ---------------------------------------------------------------
    auto coro = std::make_shared<TripleCmd>();
    {
        auto* cmd = app.add_subcommand("corollary", "the closed-form X = 0 triple construction");
        cmd->add_option("-B,--B", coro->B, "base B")->required();
        cmd->add_option("--exponents", coro->exponents, "the three exponents n1,n2,n3")
            ->required()
            ->delimiter(',')
            ->expected(3);
        add_format_flag(cmd, coro->fmt);
        cmd->callback([coro, &out] {
            const Format fmt = parse_format(coro->fmt);
            const auto t = corollary_D(parse_int("-B", coro->B), coro->exponents[0], coro->exponents[1],
                                       coro->exponents[2]);
            if (fmt == Format::csv) out << kTripleCsvHeader;
            emit_triple(out, fmt, t);
        });
    }

    // sequence ------------------------------------------------------------------
    auto seq = std::make_shared<SequenceCmd>();
    {
        auto* cmd = app.add_subcommand("sequence",
                                       "equations from doubling the multiples mP of a rational point");
        cmd->add_option("-B,--B", seq->B, "base B")->required();
        cmd->add_option("--exponents", seq->exponents, "the three exponents n1,n2,n3")
            ->required()
            ->delimiter(',')
            ->expected(3);
        cmd->add_option("--px", seq->px, "X coordinate of P (rational)")->required();
        cmd->add_option("--py", seq->py, "Y coordinate of P (rational)")->required();
        cmd->add_option("--m-max", seq->m_max, "walk m = 1..m_max");
        add_format_flag(cmd, seq->fmt);
        cmd->callback([seq, &out] {
            const Format fmt = parse_format(seq->fmt);
            const Rat y = parse_rat("--py", seq->py);
            const CurvePoint p{parse_rat("--px", seq->px), y * y};
            const auto triples = triple_sequence(parse_int("-B", seq->B), seq->exponents[0],
                                                 seq->exponents[1], seq->exponents[2], p, seq->m_max);
            if (fmt == Format::csv) out << "m,A,B,C,D,n1,n2,n3,X2\n";
            for (std::size_t i = 0; i < triples.size(); ++i)
                emit_triple(out, fmt, triples[i], static_cast<unsigned>(i + 1));
        });
    }

    // bound -----------------------------------------------------------------------
    auto bound = std::make_shared<BoundCmd>();
    {
        auto* cmd = app.add_subcommand("bound", "counting-conjecture bounds for |D| <= D_M");
        cmd->add_option("-A,--A", bound->A, "coefficient A")->required();
        cmd->add_option("-B,--B", bound->B, "base B")->required();
        cmd->add_option("-C,--C", bound->C, "coefficient C")->required();
        cmd->add_option("--d-max", bound->d_max, "range limit D_M")->required();
        cmd->add_flag("--empirical", bound->empirical, "also sweep and report observed counts");
        bound->n_max_opt = cmd->add_option("--n-max", bound->n_max, "exponent cap for --empirical");
        cmd->add_option("--workers", bound->workers, "worker threads for --empirical");
        add_format_flag(cmd, bound->fmt);
        cmd->callback([bound, &out] {
            const Int A = parse_int("-A", bound->A), B = parse_int("-B", bound->B),
                      C = parse_int("-C", bound->C), D_M = parse_int("--d-max", bound->d_max);
            const double pos = bound_positive(A, B, C, D_M);
            const double neg = bound_negative(A, B, C, D_M);
            std::pair<std::size_t, std::size_t> counts{0, 0};
            if (bound->empirical) {
                if (!bound->n_max_opt->count())
                    throw std::invalid_argument("--empirical requires --n-max");
                SweepOptions opts;
                opts.workers = bound->workers;
                counts = empirical_counts(A, B, C, D_M, bound->n_max, opts);
            }
            switch (parse_format(bound->fmt)) {
                case Format::json: {
                    Json j{{"A", A.get_str()},
                           {"B", B.get_str()},
                           {"C", C.get_str()},
                           {"D_M", D_M.get_str()},
                           {"bound_positive", pos},
                           {"bound_negative", neg}};
                    if (bound->empirical) {
                        j["count_positive"] = counts.first;
                        j["count_negative"] = counts.second;
                    }
                    out << j.dump() << '\n';
                    break;
                }
                case Format::csv:
                    out << "bound_positive,bound_negative";
                    if (bound->empirical) out << ",count_positive,count_negative";
                    out << '\n' << pos << ',' << neg;
                    if (bound->empirical) out << ',' << counts.first << ',' << counts.second;
                    out << '\n';
                    break;
                case Format::pretty:
                    out << "bound_positive = " << pos << '\n' << "bound_negative = " << neg << '\n';
                    if (bound->empirical)
                        out << "count_positive = " << counts.first << '\n'
                            << "count_negative = " << counts.second << '\n';
                    break;
            }
        });
    }

    // verify-tables ------------------------------------------------------------------
    auto verify = std::make_shared<VerifyCmd>();
    {
        auto* cmd = app.add_subcommand("verify-tables", "check the survey tables against the solver");
        cmd->add_option("--file", verify->file, "corpus file (default: the built-in tables)");
        cmd->add_option("--table", verify->table, "restrict to one table id");
        cmd->add_option("--slack", verify->slack, "window slack around the claimed exponents");
        cmd->add_option("--samples", verify->samples, "instantiations per parametric family");
        cmd->add_option("--workers", verify->workers, "worker threads (0 = all cores)");
        cmd->add_flag("--strict", verify->strict, "exit 1 when a non-suspect row mismatches");
        cmd->add_flag("--all", verify->all, "print every outcome, not only mismatches");
        add_format_flag(cmd, verify->fmt);
        cmd->callback([verify, &out, &err, &exit_code] {
            std::vector<CorpusRow> rows;
            if (verify->file.empty()) {
                rows = builtin_corpus();
            } else {
                std::ifstream in(verify->file);
                if (!in) throw std::invalid_argument("cannot read corpus file \"" + verify->file + "\"");
                std::ostringstream text;
                text << in.rdbuf();
                rows = parse_corpus(text.str());
            }
            if (!verify->table.empty()) {
                std::erase_if(rows, [&](const CorpusRow& r) { return r.table_id != verify->table; });
                if (rows.empty())
                    throw std::invalid_argument("no rows in table \"" + verify->table + "\"");
            }
            const auto summary = verify_all(rows, verify->slack, verify->samples, verify->workers);
            const Format fmt = parse_format(verify->fmt);
            if (fmt == Format::csv) out << "table,line,instantiation,A,B,C,D,status,suspect,observed_n\n";
            bool unexpected = false;
            for (const auto& o : summary.outcomes) {
                const bool mismatch = o.status == VerifyStatus::k_mismatch ||
                                      o.status == VerifyStatus::exponent_mismatch;
                if (mismatch && !o.row.suspect) unexpected = true;
                if (!mismatch && !verify->all) continue;
                switch (fmt) {
                    case Format::json:
                        out << to_json(o).dump() << '\n';
                        break;
                    case Format::csv:
                        out << o.row.table_id << ',' << o.row.line << ',' << o.instantiation << ','
                            << o.row.A << ',' << o.row.B << ',' << o.row.C << ',' << o.row.D << ','
                            << to_string(o.status) << ',' << (o.row.suspect ? 1 : 0) << ','
                            << (o.observed ? join(o.observed->solutions, ";",
                                                  [](const Solution& s) { return std::to_string(s.n); })
                                           : std::string())
                            << '\n';
                        break;
                    case Format::pretty:
                        out << o.row.table_id << " line " << o.row.line;
                        if (!o.instantiation.empty()) out << " [" << o.instantiation << "]";
                        out << ": " << to_string(o.status);
                        if (o.row.suspect) out << " (flagged suspect)";
                        if (mismatch && o.observed) {
                            out << "  (" << o.row.A << ", " << o.row.B << ", " << o.row.C << ", "
                                << o.row.D << ") claimed n = {"
                                << join(o.row.exponents, ",", [](const std::string& s) { return s; })
                                << "} observed n = {"
                                << join(o.observed->solutions, ",",
                                        [](const Solution& s) { return std::to_string(s.n); })
                                << "}";
                        }
                        out << '\n';
                        break;
                }
            }
            err << "corpus: " << summary.outcomes.size() << " instantiations, " << summary.confirmed
                << " confirmed, " << summary.mismatched << " mismatched, " << summary.window_insufficient
                << " window-insufficient\n";
            if (verify->strict && unexpected) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}

}  // namespace rn
