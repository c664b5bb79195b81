// clh: exact probabilities, moments, samplers and cross-verification for
// the Cohen-Lenstra measure on finite abelian p-groups.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clh/decimal.hpp"
#include "clh/fplinalg.hpp"
#include "clh/measure.hpp"
#include "clh/partition.hpp"
#include "clh/qseries.hpp"
#include "clh/random.hpp"
#include "clh/stats.hpp"
#include "clh/verify.hpp"
#include "clh/young.hpp"

using json = nlohmann::ordered_json;
using namespace clh;

namespace {

struct OutputSink {
    std::optional<std::string> path;

    void write(const std::string& text) const {
        if (path) {
            std::ofstream os(*path, std::ios::binary);
            if (!os) throw CLI::RuntimeError("cannot open output file " + *path, 2);
            os << text;
        } else {
            std::cout << text;
        }
    }
};

Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw CLI::RuntimeError("cannot parse rational '" + text + "'", 2);
    r.canonicalize();
    return r;
}

std::vector<std::int64_t> parse_primes(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::int64_t p = std::stoll(tok);
        if (!is_prime_i64(p)) throw CLI::RuntimeError("not a prime: " + tok, 2);
        out.push_back(p);
    }
    if (out.empty()) throw CLI::RuntimeError("no primes given", 2);
    return out;
}

// digits are only printed when the certified error cannot move them
void require_certified(const EvalResult& r, unsigned digits) {
    Rat limit = pow_rat(make_rat(Int(1), Int(10)), digits) / 2;
    if (r.tail_bound >= limit)
        throw CLI::RuntimeError(
            "tail bound " + to_string(r.tail_bound) +
                " is too large for " + std::to_string(digits) +
                " digits; rerun with a larger --T",
            3);
}

json eval_to_json(const EvalResult& r, unsigned digits) {
    require_certified(r, digits);
    return json{{"value", to_string(r.value)},
                {"decimal", to_decimal_half_even(r.value, digits)},
                {"tail_bound", to_string(r.tail_bound)}};
}

// ---- prob ---------------------------------------------------------------

struct ProbArgs {
    std::string stat;
    std::int64_t p = 2;
    unsigned digits = 4;
    unsigned T = 64;
    long n = -1, r = -1, e = -1, u = -1;
    std::string partition;
    std::string format = "text";
    OutputSink sink;
};

int run_prob(const ProbArgs& a) {
    MeasureContext ctx(a.p, a.T, 30);
    EvalResult result = EvalResult::exact(Rat(0));
    json params;
    if (a.stat == "order") {
        if (a.n < 0) throw CLI::RuntimeError("--stat order needs --n", 2);
        params["n"] = a.n;
        result = prob_order(static_cast<unsigned long>(a.n), ctx);
    } else if (a.stat == "rank") {
        if (a.r < 0) throw CLI::RuntimeError("--stat rank needs --r", 2);
        params["r"] = a.r;
        result = prob_rank(static_cast<unsigned>(a.r), ctx);
    } else if (a.stat == "rank_order") {
        if (a.n < 0 || a.r < 0) throw CLI::RuntimeError("--stat rank_order needs --n and --r", 2);
        params["n"] = a.n;
        params["r"] = a.r;
        result = prob_rank_order(static_cast<unsigned long>(a.n), static_cast<unsigned>(a.r), ctx);
    } else if (a.stat == "exponent_le") {
        if (a.e < 0) throw CLI::RuntimeError("--stat exponent_le needs --e", 2);
        params["e"] = a.e;
        result = prob_exponent_le(static_cast<unsigned>(a.e), ctx);
    } else if (a.stat == "uprob") {
        if (a.u < 1 || a.partition.empty())
            throw CLI::RuntimeError("--stat uprob needs --u >= 1 and --partition", 2);
        params["u"] = a.u;
        params["partition"] = a.partition;
        result = u_prob(Partition::parse(a.partition), static_cast<unsigned>(a.u), ctx);
    } else if (a.stat == "group") {
        if (a.partition.empty()) throw CLI::RuntimeError("--stat group needs --partition", 2);
        params["partition"] = a.partition;
        result = cl_prob(Partition::parse(a.partition), ctx);
    } else {
        throw CLI::RuntimeError("unknown stat '" + a.stat + "'", 2);
    }

    require_certified(result, a.digits);
    std::string decimal = to_decimal_half_even(result.value, a.digits);
    if (a.format == "json") {
        json out{{"command", "prob"}, {"stat", a.stat}, {"p", a.p}, {"params", params}};
        out.update(eval_to_json(result, a.digits));
        a.sink.write(out.dump(2) + "\n");
    } else if (a.format == "csv") {
        std::ostringstream os;
        os << "stat,p,decimal,value,tail_bound\n"
           << a.stat << ',' << a.p << ',' << decimal << ',' << to_string(result.value) << ','
           << to_string(result.tail_bound) << '\n';
        a.sink.write(os.str());
    } else {
        std::ostringstream os;
        os << "P = " << decimal;
        std::string exact = to_string(result.value);
        if (exact.size() <= 40) os << "   (exact " << exact << ")";
        char tail[32];
        std::snprintf(tail, sizeof tail, "%.1e", to_double(result.tail_bound));
        os << "   certified to +-" << tail << "\n";
        a.sink.write(os.str());
    }
    return 0;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
    std::string kind;
    std::string primes = "2,3,5,7,11,13,17";
    unsigned digits = 4;
    unsigned max_n = 10, max_r = 6;
    std::string format = "csv";
    OutputSink sink;
};

EvalResult moment_entry(unsigned k, std::int64_t p, bool variance) {
    const Rat target = make_rat(Int(1), Int(100000));
    for (unsigned T = 40;; T += 20) {
        EvalResult r = variance ? eval_poly_growth(eisenstein(2, T), p, 2, Rat(1))
                                : order_moment_value(k, p, T);
        if (r.tail_bound < target) return r;
        if (T > 400) throw CLI::RuntimeError("moment tail does not certify; bug in growth bounds", 3);
    }
}

int run_table(const TableArgs& a) {
    std::vector<std::int64_t> primes = parse_primes(a.primes);
    std::vector<std::string> rows;
    std::vector<std::vector<EvalResult>> cells;

    if (a.kind == "moments") {
        rows = {"M1", "V", "M2", "M3", "M4"};
        cells.resize(rows.size());
        for (std::int64_t p : primes) {
            cells[0].push_back(moment_entry(1, p, false));
            cells[1].push_back(moment_entry(0, p, true));
            cells[2].push_back(moment_entry(2, p, false));
            cells[3].push_back(moment_entry(3, p, false));
            cells[4].push_back(moment_entry(4, p, false));
        }
    } else if (a.kind == "order_dist") {
        for (unsigned n = 0; n <= a.max_n; ++n) rows.push_back("n=" + std::to_string(n));
        cells.resize(rows.size());
        for (std::int64_t p : primes) {
            MeasureContext ctx(p, 96, 30);
            for (unsigned n = 0; n <= a.max_n; ++n) cells[n].push_back(prob_order(n, ctx));
        }
    } else if (a.kind == "rank_dist") {
        for (unsigned r = 0; r <= a.max_r; ++r) rows.push_back("r=" + std::to_string(r));
        cells.resize(rows.size());
        for (std::int64_t p : primes) {
            MeasureContext ctx(p, 96, 30);
            for (unsigned r = 0; r <= a.max_r; ++r) cells[r].push_back(prob_rank(r, ctx));
        }
    } else {
        throw CLI::RuntimeError("unknown table kind '" + a.kind + "'", 2);
    }

    for (const auto& row : cells)
        for (const EvalResult& r : row) require_certified(r, a.digits);

    if (a.format == "json") {
        json out{{"command", "table"}, {"kind", a.kind}, {"digits", a.digits}};
        json jp = json::array();
        for (std::int64_t p : primes) jp.push_back(p);
        out["primes"] = jp;
        json jr = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json row{{"stat", rows[i]}};
            json vals = json::array();
            for (const EvalResult& r : cells[i]) vals.push_back(to_decimal_half_even(r.value, a.digits));
            row["values"] = vals;
            jr.push_back(row);
        }
        out["rows"] = jr;
        a.sink.write(out.dump(2) + "\n");
    } else if (a.format == "csv") {
        std::ostringstream os;
        os << "stat";
        for (std::int64_t p : primes) os << ",p=" << p;
        os << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << rows[i];
            for (const EvalResult& r : cells[i]) os << ',' << to_decimal_half_even(r.value, a.digits);
            os << '\n';
        }
        a.sink.write(os.str());
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << rows[i] << ":";
            for (const EvalResult& r : cells[i]) os << ' ' << to_decimal_half_even(r.value, a.digits);
            os << '\n';
        }
        a.sink.write(os.str());
    }
    return 0;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
    std::string sampler;
    std::int64_t p = 2;
    unsigned long count = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string eps = "1/1000000";
    unsigned n = 0;
    unsigned K = 12;
    unsigned u = 1;
    std::uint64_t a = 1;
    OutputSink sink;
};

int run_sample(const SampleArgs& args) {
    if (!args.seed_set) throw CLI::RuntimeError("--seed is required for reproducible runs", 2);
    RandomSource rng(args.seed);
    const Rat eps = parse_rat(args.eps);

    SampleSummary summary;
    summary.sampler = args.sampler;
    summary.seed = args.seed;
    unsigned long saturated = 0;

    std::ostringstream stream;
    stream << "seed,index,partition\n";

    for (unsigned long i = 0; i < args.count; ++i) {
        Partition out;
        if (args.sampler == "ytab") {
            out = ytab_sample(args.p, rng, eps);
        } else if (args.sampler == "lattice") {
            out = lattice_walk_sample(args.p, rng);
        } else if (args.sampler == "matrix") {
            unsigned n = args.n ? args.n : 4;
            out = partition_at(random_gl(n, args.p, rng), args.a);
        } else if (args.sampler == "cokernel") {
            unsigned n = args.n ? args.n : 2;
            CokernelDraw draw = cokernel_sample(n, args.p, args.K, rng);
            if (draw.saturated) ++saturated;
            out = draw.shape;
        } else if (args.sampler == "uquotient") {
            Partition h = ytab_sample(args.p, rng, eps);
            out = from_group_shape(quotient_by_random_elements(to_group_shape(h), args.u, args.p, rng));
        } else {
            throw CLI::RuntimeError("unknown sampler '" + args.sampler + "'", 2);
        }
        summary.add(out);
        stream << args.seed << ',' << i << ',' << out.to_string() << '\n';
    }

    if (args.sampler == "ytab" || args.sampler == "uquotient") summary.metadata["eps"] = to_string(eps);
    if (args.sampler == "matrix") {
        summary.metadata["n"] = std::to_string(args.n ? args.n : 4);
        summary.metadata["a"] = std::to_string(args.a);
    }
    if (args.sampler == "cokernel") {
        summary.metadata["n"] = std::to_string(args.n ? args.n : 2);
        summary.metadata["K"] = std::to_string(args.K);
        summary.metadata["saturated"] = std::to_string(saturated);
    }
    if (args.sampler == "uquotient") summary.metadata["u"] = std::to_string(args.u);

    json meta = json::object();
    for (const auto& [k, v] : summary.metadata) meta[k] = v;
    json counts = json::object();
    for (const auto& [lam, c] : summary.counts) counts[lam.to_string()] = c;
    json out{{"command", "sample"}, {"sampler", args.sampler}, {"p", args.p},
             {"seed", args.seed},   {"total", summary.total},  {"metadata", meta},
             {"counts", counts}};

    if (args.sink.path) {
        args.sink.write(stream.str());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << stream.str();
        std::cerr << out.dump(2) << "\n";
    }
    return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = run_all_suites(opt);
    } else if (suite == "closed_forms") {
        reports = {run_suite(Suite::closed_forms, opt)};
    } else if (suite == "samplers") {
        reports = {run_suite(Suite::samplers, opt)};
    } else if (suite == "lattice") {
        reports = {run_suite(Suite::lattice, opt)};
    } else if (suite == "conjugacy") {
        reports = {run_suite(Suite::conjugacy, opt)};
    } else if (suite == "zeta") {
        reports = {run_suite(Suite::zeta, opt)};
    } else {
        throw CLI::RuntimeError("unknown suite '" + suite + "'", 2);
    }

    bool all_ok = true;
    unsigned total = 0, passed = 0;
    for (const SuiteReport& rep : reports) {
        for (const CheckResult& c : rep.checks) {
            ++total;
            if (c.pass) ++passed;
            std::cout << "[" << rep.suite << "] " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        if (!rep.all_pass()) all_ok = false;
    }
    std::cout << (all_ok ? "OK" : "FAILED") << ": " << passed << "/" << total << " checks passed\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Lenstra measure toolkit: exact closed forms, samplers and cross-verification"};
    app.require_subcommand(1);

    ProbArgs pa;
    CLI::App* prob = app.add_subcommand("prob", "probability of a single event");
    prob->add_option("--stat", pa.stat, "order|rank|rank_order|exponent_le|uprob|group")->required();
    prob->add_option("--p", pa.p, "prime")->required();
    prob->add_option("--n", pa.n, "order exponent");
    prob->add_option("--r", pa.r, "rank");
    prob->add_option("--e", pa.e, "exponent bound");
    prob->add_option("--u", pa.u, "number of quotient generators");
    prob->add_option("--partition", pa.partition, "partition, e.g. 2+1 or () or 0");
    prob->add_option("--digits", pa.digits, "decimal digits (default 4)");
    prob->add_option("--T", pa.T, "series truncation order (default 64)");
    prob->add_option("--format", pa.format, "text|json|csv");
    prob->add_option("--out", pa.sink.path, "write to a file instead of stdout");

    TableArgs ta;
    CLI::App* table = app.add_subcommand("table", "tables across primes");
    table->add_option("--kind", ta.kind, "moments|order_dist|rank_dist")->required();
    table->add_option("--primes", ta.primes, "comma-separated primes");
    table->add_option("--digits", ta.digits, "decimal digits (default 4)");
    table->add_option("--max-n", ta.max_n, "largest order exponent for order_dist");
    table->add_option("--max-r", ta.max_r, "largest rank for rank_dist");
    table->add_option("--format", ta.format, "csv|json|text");
    table->add_option("--out", ta.sink.path, "write to a file instead of stdout");

    SampleArgs sa;
    CLI::App* sample = app.add_subcommand("sample", "run a sampler, streaming CSV");
    sample->add_option("--sampler", sa.sampler, "ytab|lattice|matrix|cokernel|uquotient")->required();
    sample->add_option("--p", sa.p, "prime")->required();
    sample->add_option("--count", sa.count, "number of draws")->required();
    sample->add_option("--seed", sa.seed, "64-bit seed (required)")->each([&](const std::string&) {
        sa.seed_set = true;
    });
    sample->add_option("--eps", sa.eps, "halting threshold as a rational, e.g. 1/1000000");
    sample->add_option("--n", sa.n, "matrix dimension (matrix/cokernel)");
    sample->add_option("--K", sa.K, "modulus exponent for cokernel draws");
    sample->add_option("--u", sa.u, "number of quotient generators (uquotient)");
    sample->add_option("--a", sa.a, "unit whose linear factor is tracked (matrix)");
    sample->add_option("--out", sa.sink.path, "write the CSV stream to a file");

    std::string suite;
    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "run cross-verification suites");
    verify->add_option("--suite", suite, "all|closed_forms|samplers|lattice|conjugacy|zeta")->required();
    verify->add_option("--seed", vo.seed, "seed for empirical checks");
    verify->add_option("--samples", vo.samples, "draws per empirical check");
    verify->add_flag("--quick", vo.quick, "shrink empirical runs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (prob->parsed()) return run_prob(pa);
        if (table->parsed()) return run_table(ta);
        if (sample->parsed()) return run_sample(sa);
        if (verify->parsed()) return run_verify(suite, vo);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
