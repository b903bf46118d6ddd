#include "kbonacci/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbonacci/closed_form.hpp"
#include "kbonacci/engine.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/fast_eval.hpp"
#include "kbonacci/sequence_core.hpp"
#include "kbonacci/tiling_lab.hpp"

namespace kbonacci::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { plain, json, csv };

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw ParameterError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

Format parse_format(const std::string& name) {
    if (name == "plain") {
        return Format::plain;
    }
    if (name == "json") {
        return Format::json;
    }
    if (name == "csv") {
        return Format::csv;
    }
    throw ParameterError("unknown format '" + name + "' (expected plain, json or csv)");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

EnumerationCap resolve_cap(const std::optional<std::int64_t>& flag, const std::optional<std::string>& env) {
    EnumerationCap cap;
    if (flag.has_value()) {
        cap.max_n = *flag;
    } else if (env.has_value() && !env->empty()) {
        cap.max_n = parse_int(*env);
    }
    if (cap.max_n < 0 || cap.max_n > EnumerationCap::kHardLimit) {
        throw ParameterError("enumeration cap must be within 0.." + std::to_string(EnumerationCap::kHardLimit));
    }
    return cap;
}

// -- eval / sum ---------------------------------------------------------------

struct SequenceOptions {
    std::string k;
    std::string n;
    std::string engine;
    std::optional<std::int64_t> m;
    std::string format = "plain";
};

int run_sequence(const SequenceOptions& opts, Quantity quantity, std::ostream& out) {
    const auto ks = IntRange::parse(opts.k);
    const auto ns = IntRange::parse(opts.n);
    const auto format = parse_format(opts.format);
    const std::string default_engine = quantity == Quantity::value ? "recurrence" : "direct";
    const std::string& selector = opts.engine.empty() ? default_engine : opts.engine;

    EngineChoice engine{parse_engine_name(selector), std::nullopt};
    const bool extended = selector == "dunkel-extended";
    if (extended != opts.m.has_value()) {
        throw ParameterError("--m is required by, and only accepted with, --engine dunkel-extended");
    }
    if (extended) {
        if (quantity != Quantity::partial_sum) {
            throw ParameterError("dunkel-extended is a partial-sum engine");
        }
        engine.limit = SumLimit{*opts.m};
    }
    const std::string name = engine_name(engine.kind, quantity, extended);

    // Evaluate everything first so a parameter error produces no partial output.
    std::vector<Json> records;
    for (std::int64_t k = ks.lo; k <= ks.hi; ++k) {
        for (std::int64_t n = ns.lo; n <= ns.hi; ++n) {
            Json rec;
            rec["k"] = k;
            rec["n"] = n;
            rec["engine"] = name;
            if (engine.limit) {
                rec["m"] = engine.limit->m;
            }
            rec["value"] = evaluate(engine, quantity, k, n).to_string();
            records.push_back(std::move(rec));
        }
    }

    if (format == Format::csv) {
        out << "k,n,engine,value\n";
    }
    for (const auto& rec : records) {
        switch (format) {
        case Format::plain:
            out << rec["value"].get<std::string>() << '\n';
            break;
        case Format::json:
            out << rec.dump() << '\n';
            break;
        case Format::csv:
            out << rec["k"].get<std::int64_t>() << ',' << rec["n"].get<std::int64_t>() << ','
                << rec["engine"].get<std::string>() << ',' << rec["value"].get<std::string>() << '\n';
            break;
        }
    }
    return kSuccess;
}

// -- terms --------------------------------------------------------------------

struct TermsOptions {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::string which = "sum-formula";
    std::string format = "plain";
};

int run_terms(const TermsOptions& opts, std::ostream& out) {
    TermFormula which{};
    if (opts.which == "sum-formula") {
        which = TermFormula::sum_formula;
    } else if (opts.which == "term-formula") {
        which = TermFormula::term_formula;
    } else {
        throw ParameterError("--which must be sum-formula or term-formula");
    }
    const auto format = parse_format(opts.format);
    const auto terms = term_breakdown(opts.k, opts.n, which);

    if (format == Format::csv) {
        out << "j,sign,magnitude\n";
    }
    for (const auto& t : terms) {
        const char* sign = t.sign < 0 ? "-" : "+";
        switch (format) {
        case Format::plain:
            out << t.j << ' ' << sign << ' ' << t.magnitude << '\n';
            break;
        case Format::csv:
            out << t.j << ',' << sign << ',' << t.magnitude << '\n';
            break;
        case Format::json: {
            Json rec;
            rec["k"] = opts.k;
            rec["n"] = opts.n;
            rec["which"] = opts.which;
            rec["j"] = t.j;
            rec["sign"] = sign;
            rec["magnitude"] = t.magnitude.to_string();
            out << rec.dump() << '\n';
            break;
        }
        }
    }
    return kSuccess;
}

// -- tilings ------------------------------------------------------------------

struct TilingsOptions {
    std::int64_t k = 0;
    std::int64_t n = 0;
    bool bounded = false;
    bool count = false;
    std::optional<std::int64_t> cap;
    std::string format = "plain";
};

template <typename Producer>
int emit_tilings(Producer producer, const TilingsOptions& opts, Format format, std::ostream& out) {
    if (opts.count) {
        std::uint64_t count = 0;
        while (producer.next()) {
            ++count;
        }
        switch (format) {
        case Format::plain:
            out << count << '\n';
            break;
        case Format::csv:
            out << "k,n,bounded,count\n" << opts.k << ',' << opts.n << ',' << (opts.bounded ? "true" : "false") << ','
                << count << '\n';
            break;
        case Format::json: {
            Json rec;
            rec["k"] = opts.k;
            rec["n"] = opts.n;
            rec["bounded"] = opts.bounded;
            rec["count"] = std::to_string(count);
            out << rec.dump() << '\n';
            break;
        }
        }
        return kSuccess;
    }
    if (format == Format::csv) {
        out << "total,tiles\n";
    }
    while (auto t = producer.next()) {
        switch (format) {
        case Format::plain:
            out << to_string(*t) << '\n';
            break;
        case Format::csv: {
            out << t->total() << ',';
            for (std::size_t i = 0; i < t->tiles().size(); ++i) {
                out << (i == 0 ? "" : " ") << t->tiles()[i];
            }
            out << '\n';
            break;
        }
        case Format::json: {
            Json rec;
            rec["k"] = opts.k;
            rec["total"] = t->total();
            rec["tiles"] = t->tiles();
            out << rec.dump() << '\n';
            break;
        }
        }
    }
    return kSuccess;
}

int run_tilings(const TilingsOptions& opts, const std::optional<std::string>& cap_env, std::ostream& out) {
    const auto cap = resolve_cap(opts.cap, cap_env);
    const auto format = parse_format(opts.format);
    if (opts.bounded) {
        return emit_tilings(BoundedTilingProducer(opts.k, opts.n, cap), opts, format, out);
    }
    return emit_tilings(TilingProducer(opts.k, opts.n, cap), opts, format, out);
}

// -- verify -------------------------------------------------------------------

struct Check {
    std::string suite;
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::optional<std::int64_t> i;
    bool pass = false;
    std::string detail;
};

struct Grid {
    IntRange k;
    IntRange n;
};

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"engines", "closed-form", "tilings", "inclusion-exclusion",
                                                "bijection"};
    return names;
}

Grid default_grid(const std::string& suite) {
    if (suite == "engines") {
        return {{1, 6}, {0, 60}};
    }
    if (suite == "closed-form") {
        return {{1, 5}, {0, 40}};
    }
    if (suite == "tilings") {
        return {{1, 5}, {0, 14}};
    }
    return {{1, 12}, {0, 12}};
}

std::string describe(const BigNat& a, const BigNat& b) { return a.to_string() + " vs " + b.to_string(); }

void suite_engines(const Grid& g, std::vector<Check>& checks) {
    const EngineChoice kinds[] = {{EngineKind::recurrence, {}},
                                  {EngineKind::dunkel, {}},
                                  {EngineKind::corollary, {}},
                                  {EngineKind::matrix, {}}};
    for (std::int64_t k = g.k.lo; k <= g.k.hi; ++k) {
        for (std::int64_t n = g.n.lo; n <= g.n.hi; ++n) {
            const BigNat value = evaluate(kinds[0], Quantity::value, k, n);
            bool ok = true;
            std::string detail = "value=" + value.to_string();
            for (const auto& e : kinds) {
                const auto v = evaluate(e, Quantity::value, k, n);
                if (v != value) {
                    ok = false;
                    detail += "; " + engine_name(e.kind, Quantity::value) + " gave " + v.to_string();
                }
            }
            const BigNat sum = partial_sum_direct(k, n);
            for (const auto& e : {kinds[1], kinds[3]}) {
                const auto s = evaluate(e, Quantity::partial_sum, k, n);
                if (s != sum) {
                    ok = false;
                    detail += "; " + engine_name(e.kind, Quantity::partial_sum) + " sum " + describe(s, sum);
                }
            }
            checks.push_back({"engines", k, n, std::nullopt, ok, detail + " sum=" + sum.to_string()});
        }
    }
}

void suite_closed_form(const Grid& g, std::vector<Check>& checks) {
    for (std::int64_t k = g.k.lo; k <= g.k.hi; ++k) {
        for (std::int64_t n = g.n.lo; n <= g.n.hi; ++n) {
            std::vector<std::string> failures;
            const auto base = partial_sum_dunkel(k, n);
            if (n <= k && base != BigNat::pow2(static_cast<std::uint64_t>(n))) {
                failures.push_back("base case " + describe(base, BigNat::pow2(static_cast<std::uint64_t>(n))));
            }
            for (std::int64_t m = n / (k + 1); m <= n / k; ++m) {
                const auto ext = partial_sum_dunkel_extended(k, n, SumLimit{m});
                if (ext != base) {
                    failures.push_back("m=" + std::to_string(m) + " " + describe(ext, base));
                }
            }
            const auto closed = kbonacci_closed(k, n);
            if (fold_terms(term_breakdown(k, n, TermFormula::term_formula)) != closed) {
                failures.push_back("term fold");
            }
            if (closed != kbonacci_recurrence({k, n})) {
                failures.push_back("term formula " + describe(closed, kbonacci_recurrence({k, n})));
            }
            if (n >= 1 && closed != base - partial_sum_dunkel(k, n - 1)) {
                failures.push_back("difference identity");
            }
            std::string detail;
            for (const auto& f : failures) {
                detail += (detail.empty() ? "" : "; ") + f;
            }
            checks.push_back({"closed-form", k, n, std::nullopt, failures.empty(),
                              failures.empty() ? "sum=" + base.to_string() : detail});
        }
    }
}

void suite_tilings(const Grid& g, EnumerationCap cap, std::vector<Check>& checks) {
    for (std::int64_t k = g.k.lo; k <= g.k.hi; ++k) {
        for (std::int64_t n = g.n.lo; n <= g.n.hi; ++n) {
            const auto exact = enumerate_tilings(k, n, cap);
            const auto bounded = enumerate_bounded_tilings(k, n, cap);
            bool ok = BigNat{exact.size()} == kbonacci_recurrence({k, n}) &&
                      BigNat{bounded.size()} == partial_sum_direct(k, n);
            if (n >= 1) {
                for (const auto& [len, count] : count_by_rightmost_tile(k, n, cap)) {
                    ok = ok && BigNat{count} == kbonacci_recurrence({k, n - len});
                }
            }
            checks.push_back({"tilings", k, n, std::nullopt, ok,
                              "exact=" + std::to_string(exact.size()) + " bounded=" + std::to_string(bounded.size())});
        }
    }
}

void suite_inclusion_exclusion(const Grid& g, EnumerationCap cap, std::vector<Check>& checks) {
    for (std::int64_t n = g.n.lo; n <= g.n.hi; ++n) {
        const auto all = enumerate_unrestricted(n, cap);
        std::set<Tiling> unique(all.begin(), all.end());
        const bool ok = BigNat{all.size()} == BigNat::pow2(static_cast<std::uint64_t>(n)) && unique.size() == all.size();
        checks.push_back({"inclusion-exclusion", 0, n, std::nullopt, ok, "|U|=" + std::to_string(all.size())});
    }
    for (std::int64_t k = g.k.lo; k <= g.k.hi; ++k) {
        for (std::int64_t n = std::max<std::int64_t>(g.n.lo, 0); n <= g.n.hi; ++n) {
            const OversizedEndIndex index(k, n, cap);
            const BigNat kept = BigNat::pow2(static_cast<std::uint64_t>(n)) - BigNat{index.count_with_oversized()};
            const BigNat direct = partial_sum_direct(k, n);
            checks.push_back({"inclusion-exclusion", k, n, std::nullopt, kept == direct,
                              "2^n - oversized = " + describe(kept, direct)});
            if (k > n) {
                continue;
            }
            for (std::int64_t i = 1; i <= n / (k + 1); ++i) {
                const auto report = verify_intersection_identity(k, n, i, cap);
                checks.push_back({"inclusion-exclusion", k, n, i,
                                  report.brute_force_total == report.formula_total,
                                  "sum of intersections " + describe(report.brute_force_total, report.formula_total)});
            }
        }
    }
}

void suite_bijection(const Grid& g, EnumerationCap cap, std::vector<Check>& checks) {
    for (std::int64_t k = g.k.lo; k <= g.k.hi; ++k) {
        for (std::int64_t n = std::max<std::int64_t>(g.n.lo, k); n <= g.n.hi; ++n) {
            for (std::int64_t i = 1; i <= n / (k + 1); ++i) {
                const auto report = verify_intersection_identity(k, n, i, cap);
                std::ostringstream detail;
                detail << "configurations=" << report.configurations << " injective=" << report.injective
                       << " image_matches=" << report.image_matches;
                checks.push_back({"bijection", k, n, i, report.passed(), detail.str()});
            }
        }
    }
}

struct VerifyOptions {
    std::vector<std::string> suites;
    std::string k;
    std::string n;
    std::optional<std::int64_t> cap;
    std::string format = "plain";
};

int run_verify(const VerifyOptions& opts, const std::optional<std::string>& cap_env, std::ostream& out) {
    const auto cap = resolve_cap(opts.cap, cap_env);
    const auto format = parse_format(opts.format);

    std::vector<std::string> selected;
    for (const auto& entry : opts.suites) {
        for (const auto& s : split_list(entry)) {
            if (s == "all") {
                selected = suite_names();
                break;
            }
            if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
                throw ParameterError("unknown suite '" + s + "'");
            }
            selected.push_back(s);
        }
    }
    if (selected.empty()) {
        selected = suite_names();
    }

    std::vector<Check> checks;
    for (const auto& suite : suite_names()) {
        if (std::find(selected.begin(), selected.end(), suite) == selected.end()) {
            continue;
        }
        Grid grid = default_grid(suite);
        if (!opts.n.empty()) {
            grid.n = IntRange::parse(opts.n);
        }
        if (!opts.k.empty()) {
            grid.k = IntRange::parse(opts.k);
        } else if (suite == "inclusion-exclusion" || suite == "bijection") {
            grid.k = {1, std::max<std::int64_t>(grid.n.hi, 1)};
        }
        if (grid.k.lo < 1 || grid.n.lo < 0) {
            throw ParameterError("verify needs k >= 1 and n >= 0");
        }
        if (suite == "engines") {
            suite_engines(grid, checks);
        } else if (suite == "closed-form") {
            suite_closed_form(grid, checks);
        } else if (suite == "tilings") {
            suite_tilings(grid, cap, checks);
        } else if (suite == "inclusion-exclusion") {
            suite_inclusion_exclusion(grid, cap, checks);
        } else {
            suite_bijection(grid, cap, checks);
        }
    }

    const auto failures = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
        return !c.pass;
    }));
    if (format == Format::csv) {
        out << "suite,k,n,i,status,detail\n";
    }
    for (const auto& c : checks) {
        const char* status = c.pass ? "PASS" : "FAIL";
        switch (format) {
        case Format::plain:
            out << status << ' ' << c.suite << " k=" << c.k << " n=" << c.n;
            if (c.i) {
                out << " i=" << *c.i;
            }
            out << ' ' << c.detail << '\n';
            break;
        case Format::csv:
            out << c.suite << ',' << c.k << ',' << c.n << ',' << (c.i ? std::to_string(*c.i) : "") << ',' << status
                << ",\"" << c.detail << "\"\n";
            break;
        case Format::json: {
            Json rec;
            rec["suite"] = c.suite;
            rec["k"] = c.k;
            rec["n"] = c.n;
            if (c.i) {
                rec["i"] = *c.i;
            }
            rec["pass"] = c.pass;
            rec["detail"] = c.detail;
            out << rec.dump() << '\n';
            break;
        }
        }
    }
    if (format == Format::json) {
        Json summary;
        summary["suite"] = "summary";
        summary["checks"] = checks.size();
        summary["failures"] = failures;
        out << summary.dump() << '\n';
    } else if (format == Format::plain) {
        out << "summary: " << checks.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? kSuccess : kVerificationFailure;
}

// -- bench --------------------------------------------------------------------

struct BenchOptions {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::string engines = "recurrence,matrix";
    std::int64_t reps = 3;
    bool sum = false;
    std::string format = "plain";
};

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    const auto format = parse_format(opts.format);
    if (opts.reps < 1) {
        throw ParameterError("--reps must be >= 1");
    }
    const Quantity quantity = opts.sum ? Quantity::partial_sum : Quantity::value;
    std::set<EngineKind> kinds;
    for (const auto& name : split_list(opts.engines)) {
        if (name == "dunkel-extended") {
            throw ParameterError("bench does not take dunkel-extended; use dunkel");
        }
        kinds.insert(parse_engine_name(name));
    }
    if (kinds.empty()) {
        throw ParameterError("--engines must name at least one engine");
    }

    struct Row {
        std::string engine;
        std::string value;
        std::int64_t elapsed_ns;
        EvalStats stats;
    };
    std::vector<Row> rows;
    for (const auto kind : kinds) {
        Row row{engine_name(kind, quantity), {}, 0, {}};
        for (std::int64_t rep = 0; rep < opts.reps; ++rep) {
            EvalStats stats;
            const auto start = std::chrono::steady_clock::now();
            const auto value = evaluate({kind, std::nullopt}, quantity, opts.k, opts.n, &stats);
            const auto elapsed =
                std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
            if (rep == 0 || elapsed < row.elapsed_ns) {
                row.elapsed_ns = elapsed;
            }
            row.stats = stats;
            row.value = value.to_string();
        }
        rows.push_back(std::move(row));
    }

    switch (format) {
    case Format::plain:
        out << "engine elapsed_ns additions multiplications squarings value\n";
        break;
    case Format::csv:
        out << "k,n,engine,value,elapsed_ns,additions,multiplications,squarings\n";
        break;
    case Format::json:
        break;
    }
    for (const auto& r : rows) {
        switch (format) {
        case Format::plain:
            out << r.engine << ' ' << r.elapsed_ns << ' ' << r.stats.additions << ' ' << r.stats.multiplications << ' '
                << r.stats.squarings << ' ' << r.value << '\n';
            break;
        case Format::csv:
            out << opts.k << ',' << opts.n << ',' << r.engine << ',' << r.value << ',' << r.elapsed_ns << ','
                << r.stats.additions << ',' << r.stats.multiplications << ',' << r.stats.squarings << '\n';
            break;
        case Format::json: {
            Json rec;
            rec["k"] = opts.k;
            rec["n"] = opts.n;
            rec["engine"] = r.engine;
            rec["value"] = r.value;
            rec["elapsed_ns"] = r.elapsed_ns;
            rec["additions"] = r.stats.additions;
            rec["multiplications"] = r.stats.multiplications;
            rec["squarings"] = r.stats.squarings;
            out << rec.dump() << '\n';
            break;
        }
        }
    }
    const bool agree = std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return r.value == rows.front().value; });
    if (!agree) {
        err << "bench: engines disagree on the value\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

} // namespace

IntRange IntRange::parse(std::string_view text) {
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw ParameterError("empty range '" + std::string(text) + "'");
    }
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::optional<std::string> cap_env) {
    CLI::App app{"Exact k-bonacci numbers, partial sums, and tiling identities", "kbonacci"};
    app.require_subcommand(1);

    const std::string format_help = "Output format: plain, json or csv";

    SequenceOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "Print f_n^(k) for a value or range of n");
    eval->add_option("--k", eval_opts.k, "Window length k (a or a..b)")->required();
    eval->add_option("--n", eval_opts.n, "Index n (a or a..b)")->required();
    eval->add_option("--engine", eval_opts.engine, "recurrence | dunkel | dunkel-term | matrix");
    eval->add_option("--format", eval_opts.format, format_help);

    SequenceOptions sum_opts;
    auto* sum = app.add_subcommand("sum", "Print f_0 + ... + f_n");
    sum->add_option("--k", sum_opts.k, "Window length k (a or a..b)")->required();
    sum->add_option("--n", sum_opts.n, "Upper index n (a or a..b)")->required();
    sum->add_option("--engine", sum_opts.engine, "direct | dunkel | dunkel-extended | matrix");
    sum->add_option("--m", sum_opts.m, "Summation limit for dunkel-extended");
    sum->add_option("--format", sum_opts.format, format_help);

    TermsOptions terms_opts;
    auto* terms = app.add_subcommand("terms", "List the summands of a closed formula");
    terms->add_option("--k", terms_opts.k, "Window length k")->required();
    terms->add_option("--n", terms_opts.n, "Index n")->required();
    terms->add_option("--which", terms_opts.which, "sum-formula | term-formula");
    terms->add_option("--format", terms_opts.format, format_help);

    TilingsOptions tilings_opts;
    auto* tilings = app.add_subcommand("tilings", "Enumerate ruler tilings with tiles 1..k");
    tilings->add_option("--k", tilings_opts.k, "Largest tile length")->required();
    tilings->add_option("--n", tilings_opts.n, "Ruler length")->required();
    tilings->add_flag("--bounded", tilings_opts.bounded, "Total length at most n instead of exactly n");
    tilings->add_flag("--count", tilings_opts.count, "Print only the number of tilings");
    tilings->add_option("--cap", tilings_opts.cap, "Enumeration cap on n (default 24)");
    tilings->add_option("--format", tilings_opts.format, format_help);

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run identity suites; exit 1 on any failure");
    verify->add_option("--suite", verify_opts.suites,
                       "engines, closed-form, tilings, inclusion-exclusion, bijection or all (repeatable)");
    verify->add_option("--k", verify_opts.k, "k range a..b");
    verify->add_option("--n", verify_opts.n, "n range a..b");
    verify->add_option("--cap", verify_opts.cap, "Enumeration cap on n (default 24)");
    verify->add_option("--format", verify_opts.format, format_help);

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "Time engines against each other");
    bench->add_option("--k", bench_opts.k, "Window length k")->required();
    bench->add_option("--n", bench_opts.n, "Index n")->required();
    bench->add_option("--engines", bench_opts.engines, "Comma-separated engines");
    bench->add_option("--reps", bench_opts.reps, "Repetitions; the fastest is reported");
    bench->add_flag("--sum", bench_opts.sum, "Time partial sums instead of values");
    bench->add_option("--format", bench_opts.format, format_help);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "kbonacci: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (eval->parsed()) {
            return run_sequence(eval_opts, Quantity::value, out);
        }
        if (sum->parsed()) {
            return run_sequence(sum_opts, Quantity::partial_sum, out);
        }
        if (terms->parsed()) {
            return run_terms(terms_opts, out);
        }
        if (tilings->parsed()) {
            return run_tilings(tilings_opts, cap_env, out);
        }
        if (verify->parsed()) {
            return run_verify(verify_opts, cap_env, out);
        }
        return run_bench(bench_opts, out, err);
    } catch (const ParameterError& e) {
        err << "kbonacci: " << e.what() << '\n';
    } catch (const RangeError& e) {
        err << "kbonacci: " << e.what() << '\n';
    } catch (const CapError& e) {
        err << "kbonacci: " << e.what() << " (raise it with --cap or " << kCapEnvVar << ")\n";
    }
    return kUsageError;
}

} // namespace kbonacci::cli
