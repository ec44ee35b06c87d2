#include "paucity/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "paucity/census.hpp"
#include "paucity/delta.hpp"
#include "paucity/divisor_search.hpp"
#include "paucity/errors.hpp"
#include "paucity/io.hpp"
#include "paucity/rng.hpp"
#include "paucity/system.hpp"
#include "paucity/testgen.hpp"

namespace paucity {

namespace {

constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;

std::uint64_t resolve_budget(bool flag_given, std::uint64_t flag_value) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("PAUCITY_BUDGET")) {
        try {
            std::size_t used = 0;
            std::uint64_t v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("PAUCITY_BUDGET is not an integer: ") + env);
        }
    }
    return kDefaultBudget;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ','))
        out.push_back(Int128::parse(field).to_int64());
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::stringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) rows.push_back(parse_int_list(row));
    if (rows.empty()) throw ParseError("empty matrix");
    return rows;
}

std::string int_list_str(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string tuple_str(const std::vector<std::int64_t>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error("cannot write output file: " + out_path);
    file << content;
}

// ---------------------------------------------------------------- normalize

int cmd_normalize(const std::string& system_path, std::ostream& out) {
    AnySystem any = load_system(system_path);
    if (const auto* linear = std::get_if<SymmetricSystem>(&any)) {
        NormalizedSystem norm = normalize(*linear);
        out << "k=" << norm.k() << " degrees=" << int_list_str(norm.degrees())
            << " R=" << int_list_str(norm.free_degrees()) << " w=" << norm.weight()
            << " A=" << norm.leading_product().str() << "\n";
        return 0;
    }
    const auto& sys = std::get<NonlinearSystem>(any);
    out << "k=" << sys.k() << " degrees=" << int_list_str(sys.degrees())
        << " R=" << int_list_str(sys.free_degrees()) << " w=" << sys.weight()
        << " A=" << sys.leading_product().str() << "\n";
    return 0;
}

// ------------------------------------------------------------------- census

struct CensusArgs {
    std::string system_path;
    std::vector<std::int64_t> xs;
    std::string method = "brute";
    std::uint64_t budget = kDefaultBudget;
    int workers = 1;
    std::string format = "table";
    std::string out_path;
};

std::vector<SolutionPair> non_diagonal_only(const std::vector<SolutionPair>& pairs) {
    std::vector<SolutionPair> out;
    for (const SolutionPair& p : pairs)
        if (p.cls == SolutionClass::NonDiagonal) out.push_back(p);
    return out;
}

template <typename System>
CensusRow census_via_divisor(const System& sys, std::int64_t X,
                             const CensusArgs& args,
                             std::vector<SolutionPair>* nd_out) {
    SearchOptions search{args.budget, args.workers, std::size_t{1} << 22};
    std::vector<SolutionPair> nd = divisor_search(sys, X, search);
    CensusOptions sweep_opts;
    sweep_opts.budget = args.budget;
    PotentiallyDiagonalSweep sweep = potentially_diagonal_sweep(sys, X, sweep_opts);
    CensusRow row;
    row.X = X;
    row.t = count_trivial_exact(sys.k(), X);
    row.tstar = sweep.count;
    row.tdagger = Int128(static_cast<unsigned long long>(nd.size()));
    row.n = row.t + row.tstar + row.tdagger;
    if (nd_out) *nd_out = std::move(nd);
    return row;
}

template <typename System>
CensusRow census_one(const System& sys, std::int64_t X, const CensusArgs& args) {
    if (args.method == "brute") {
        CensusOptions opts;
        opts.budget = args.budget;
        opts.workers = args.workers;
        opts.collect_solutions = false;
        return to_row(brute_census(sys, X, opts));
    }
    if (args.method == "divisor") {
        return census_via_divisor(sys, X, args, nullptr);
    }
    // both: run the two enumerations and insist they agree
    CensusOptions opts;
    opts.budget = args.budget;
    opts.workers = args.workers;
    opts.collect_solutions = true;
    CensusReport brute = brute_census(sys, X, opts);
    std::vector<SolutionPair> nd_divisor;
    CensusRow divisor_row = census_via_divisor(sys, X, args, &nd_divisor);
    std::vector<SolutionPair> nd_brute = non_diagonal_only(brute.nontrivial);
    if (nd_brute != nd_divisor || !(divisor_row.tdagger == brute.non_diagonal))
        throw MismatchError("brute-force and divisor enumerations disagree at X=" +
                            std::to_string(X));
    return to_row(brute);
}

int cmd_census(const CensusArgs& args, std::ostream& out) {
    AnySystem any = load_system(args.system_path);
    // linear inputs run through their normal form
    std::variant<NormalizedSystem, NonlinearSystem> runnable =
        std::holds_alternative<SymmetricSystem>(any)
            ? std::variant<NormalizedSystem, NonlinearSystem>(
                  normalize(std::get<SymmetricSystem>(any)))
            : std::variant<NormalizedSystem, NonlinearSystem>(
                  std::get<NonlinearSystem>(any));
    std::vector<CensusRow> rows;
    for (std::int64_t X : args.xs) {
        rows.push_back(std::visit(
            [&](const auto& sys) { return census_one(sys, X, args); }, runnable));
    }
    std::string content;
    if (args.format == "csv") content = to_csv(rows);
    else if (args.format == "jsonl") content = to_jsonl(rows);
    else content = to_table(rows);
    emit(content, args.out_path, out);
    return 0;
}

// ------------------------------------------------------------------- verify

struct PropertyOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

// Fisher-Yates with the shared generator, so shuffles are seed-reproducible.
template <typename T>
void shuffle_tuple(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1));
        std::swap(v[i - 1], v[j]);
    }
}

std::vector<PropertyOutcome> run_property_suite(std::uint64_t seed, bool mutate) {
    std::vector<PropertyOutcome> outcomes;

    { // generating identity: product of (t+z_i) vs reversed sigma vector
        SplitMix64 rng(seed ^ 0x01ULL);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < 1000 && ok; ++i) {
            int k = static_cast<int>(rng.range(1, 8));
            auto z = random_tuple(rng, k, -50, 50);
            if (witness.empty()) witness = tuple_str(z);
            SigmaVector sigma = elementary_symmetric(z);
            Poly p = poly_from_roots(z);
            for (int j = 0; j <= k; ++j)
                if (!(p.coeff(k - j) == sigma[static_cast<std::size_t>(j)])) ok = false;
        }
        outcomes.push_back({"sigma-product-identity", ok, "1000 tuples; witness z=" + witness});
    }

    { // sigma values ignore the ordering of the tuple
        SplitMix64 rng(seed ^ 0x02ULL);
        bool ok = true;
        std::string witness;
        for (int k = 2; k <= 5 && ok; ++k) {
            auto z = random_tuple(rng, k, -9, 9);
            if (witness.empty()) witness = tuple_str(z);
            SigmaVector expected = elementary_symmetric(z);
            std::sort(z.begin(), z.end());
            do {
                if (elementary_symmetric(z) != expected) ok = false;
            } while (ok && std::next_permutation(z.begin(), z.end()));
        }
        for (int k = 6; k <= 8 && ok; ++k) {
            auto z = random_tuple(rng, k, -9, 9);
            SigmaVector expected = elementary_symmetric(z);
            for (int i = 0; i < 20 && ok; ++i) {
                shuffle_tuple(z, rng);
                if (elementary_symmetric(z) != expected) ok = false;
            }
        }
        outcomes.push_back({"sigma-permutation-invariance", ok, "witness z=" + witness});
    }

    { // each -z_i is a root of prod(t+z_i)
        SplitMix64 rng(seed ^ 0x03ULL);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < 200 && ok; ++i) {
            int k = static_cast<int>(rng.range(1, 8));
            auto z = random_tuple(rng, k, -20, 20);
            if (witness.empty()) witness = tuple_str(z);
            Poly p = poly_from_roots(z);
            for (std::int64_t zi : z)
                if (!p.eval(Int128(-zi)).is_zero()) ok = false;
        }
        outcomes.push_back({"roots-evaluate-to-zero", ok, "200 tuples; witness z=" + witness});
    }

    { // delta polynomial degree stays below k
        SplitMix64 rng(seed ^ 0x04ULL);
        bool ok = true;
        int checked = 0;
        for (int s = 0; s < 50 && ok; ++s) {
            NormalizedSystem norm = normalize(random_linear_system(rng, 2, 4));
            const std::int64_t X = 6;
            for (int i = 0; i < 10 && ok; ++i) {
                std::vector<Int128> values;
                for (int l : norm.free_degrees()) {
                    std::int64_t bound =
                        (pow_checked(2, norm.k()) * pow_checked(Int128(X), l)).to_int64();
                    values.emplace_back(static_cast<long long>(rng.range(-bound, bound)));
                }
                FreeValues fv(norm.k(), X, norm.free_degrees(), values);
                DeltaPoly delta = delta_poly(norm, fv);
                if (delta.poly.degree() > norm.k() - 1) ok = false;
                ++checked;
            }
        }
        outcomes.push_back({"delta-degree-bound", ok,
                            std::to_string(checked) + " constructions"});
    }

    { // delta is additive in its free values
        SplitMix64 rng(seed ^ 0x05ULL);
        bool ok = true;
        for (int s = 0; s < 50 && ok; ++s) {
            NormalizedSystem norm = normalize(random_linear_system(rng, 2, 4));
            const std::int64_t X = 6;
            std::vector<Int128> a, b, sum;
            for (int l : norm.free_degrees()) {
                std::int64_t bound =
                    (pow_checked(2, norm.k()) * pow_checked(Int128(X), l)).to_int64() / 2;
                Int128 va{static_cast<long long>(rng.range(-bound, bound))};
                Int128 vb{static_cast<long long>(rng.range(-bound, bound))};
                a.push_back(va);
                b.push_back(vb);
                sum.push_back(va + vb);
            }
            Poly lhs = delta_poly(norm, FreeValues(norm.k(), X, norm.free_degrees(), sum)).poly;
            Poly rhs = delta_poly(norm, FreeValues(norm.k(), X, norm.free_degrees(), a)).poly +
                       delta_poly(norm, FreeValues(norm.k(), X, norm.free_degrees(), b)).poly;
            if (!(lhs == rhs)) ok = false;
        }
        outcomes.push_back({"delta-linearity", ok, "50 systems"});
    }

    { // on solutions, delta vanishes exactly for permutations
        SplitMix64 rng(seed ^ 0x06ULL);
        bool ok = true;
        Int128 nontrivial_seen = 0;
        for (int s = 0; s < 10 && ok; ++s) {
            NormalizedSystem norm = normalize(random_linear_system(rng, 2, 3));
            const std::int64_t X = 5;
            CensusOptions opts;
            CensusReport report = brute_census(norm, X, opts);
            for (const SolutionPair& p : report.nontrivial) {
                DeltaPoly delta = delta_poly(norm, sigma_deltas(p.x, p.y, norm));
                if (delta.poly.is_zero()) ok = false;
                nontrivial_seen += 1;
            }
            auto x = random_tuple(rng, norm.k(), 1, X);
            auto y = x;
            shuffle_tuple(y, rng);
            if (!delta_poly(norm, sigma_deltas(x, y, norm)).poly.is_zero()) ok = false;
        }
        outcomes.push_back({"delta-zero-iff-permutation", ok,
                            nontrivial_seen.str() + " non-trivial solutions checked"});
    }

    { // the product identity holds exactly on solutions (mutation hook lives here)
        SplitMix64 rng(seed ^ 0x07ULL);
        bool ok = true;
        std::string witness;
        for (int s = 0; s < 15 && ok; ++s) {
            NormalizedSystem norm = normalize(random_linear_system(rng, 2, 4));
            for (int i = 0; i < 40 && ok; ++i) {
                auto x = random_tuple(rng, norm.k(), 1, 8);
                std::vector<std::int64_t> y;
                if (i % 4 == 0) { // guaranteed solutions: permutations
                    y = x;
                    shuffle_tuple(y, rng);
                } else {
                    y = random_tuple(rng, norm.k(), 1, 8);
                }
                if (witness.empty()) witness = "x=" + tuple_str(x) + " y=" + tuple_str(y);
                bool truth = norm.phi_values(elementary_symmetric(x)) ==
                             norm.phi_values(elementary_symmetric(y));
                Poly lhs = (poly_from_roots(x) - poly_from_roots(y))
                               .scaled(norm.leading_product());
                Poly rhs = delta_poly(norm, sigma_deltas(x, y, norm)).poly;
                if (mutate) rhs = rhs + Poly::constant(1);
                bool identity = lhs == rhs;
                if (identity != truth) ok = false;
            }
        }
        outcomes.push_back({"identity-solution-equivalence", ok, "witness " + witness});
    }

    { // specializing the identity at each y entry balances both sides
        SplitMix64 rng(seed ^ 0x08ULL);
        bool ok = true;
        Int128 solutions_seen = 0;
        for (int s = 0; s < 10 && ok; ++s) {
            NormalizedSystem norm = normalize(random_linear_system(rng, 2, 3));
            const std::int64_t X = 5;
            CensusReport report = brute_census(norm, X, CensusOptions{});
            std::vector<SolutionPair> pairs = report.nontrivial;
            auto x = random_tuple(rng, norm.k(), 1, X);
            auto shuffled = x;
            shuffle_tuple(shuffled, rng);
            pairs.push_back({x, shuffled, SolutionClass::Trivial});
            for (const SolutionPair& p : pairs) {
                DeltaPoly delta = delta_poly(norm, sigma_deltas(p.x, p.y, norm));
                for (std::int64_t v : p.y) {
                    auto [lhs, rhs] =
                        substitution_sides(p.x, v, norm.leading_product(), delta);
                    if (!(lhs == rhs)) ok = false;
                }
                solutions_seen += 1;
            }
        }
        outcomes.push_back({"substitution-consistency", ok,
                            solutions_seen.str() + " solutions checked"});
    }

    return outcomes;
}

int cmd_verify(std::uint64_t seed, bool mutate, std::ostream& out) {
    auto outcomes = run_property_suite(seed, mutate);
    bool all = true;
    for (const PropertyOutcome& o : outcomes) {
        out << (o.pass ? "[PASS] " : "[FAIL] ") << o.name << " (" << o.detail << ")\n";
        all = all && o.pass;
    }
    out << (all ? "verify: all properties hold\n" : "verify: FAILURES present\n");
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------- fit

int cmd_fit(const std::string& csv_path, const std::string& system_path,
            const std::string& column, std::ostream& out) {
    std::vector<CensusRow> rows = load_csv(csv_path);
    std::vector<std::pair<std::int64_t, Int128>> points;
    for (const CensusRow& row : rows) {
        Int128 value = column == "N" ? row.n
                       : column == "T" ? row.t
                       : column == "Tstar" ? row.tstar
                                           : row.tdagger;
        points.emplace_back(row.X, value);
    }
    FitResult fit = exponent_fit(points);
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(4);
    line << "column=" << column << " slope=" << fit.slope
         << " used=" << fit.used_points << " dropped-zeros=" << fit.dropped_zeros;
    out << line.str() << "\n";
    if (!system_path.empty()) {
        AnySystem any = load_system(system_path);
        int w = std::visit(
            [](const auto& sys) {
                if constexpr (std::is_same_v<std::decay_t<decltype(sys)>, SymmetricSystem>)
                    return normalize(sys).weight();
                else
                    return sys.weight();
            },
            any);
        double threshold = static_cast<double>(w) + 1.0 + 0.75;
        std::ostringstream verdict;
        verdict.setf(std::ios::fixed);
        verdict.precision(4);
        verdict << "bound=w+1=" << (w + 1) << " threshold=" << threshold << " "
                << (fit.slope <= threshold ? "PASS" : "WARN");
        out << verdict.str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------- gen

int cmd_gen_corollary(int k, int r, const std::string& coeffs,
                      const std::string& out_path, std::ostream& out) {
    if (k < 1 || k > 16 || r < 1 || r > k)
        throw ParseError("gen corollary needs 1 <= r <= k <= 16");
    std::vector<std::vector<Int128>> a;
    const int width = k - r;
    if (coeffs == "0" || width == 0) {
        a.assign(static_cast<std::size_t>(r),
                 std::vector<Int128>(static_cast<std::size_t>(width), Int128(0)));
    } else {
        for (const auto& row : parse_matrix(coeffs)) {
            std::vector<Int128> converted;
            for (std::int64_t v : row) converted.emplace_back(static_cast<long long>(v));
            a.push_back(std::move(converted));
        }
        if (static_cast<int>(a.size()) != r)
            throw ParseError("gen corollary coefficient matrix needs r rows");
        for (const auto& row : a)
            if (static_cast<int>(row.size()) != width)
                throw ParseError("gen corollary coefficient rows need k-r entries");
    }
    emit(serialize_system(corollary_system(k, r, a)), out_path, out);
    return 0;
}

int cmd_gen_theta(const std::string& minpoly_text, int k,
                  const std::string& out_path, std::ostream& out) {
    std::vector<Int128> coeffs;
    for (std::int64_t v : parse_int_list(minpoly_text))
        coeffs.emplace_back(static_cast<long long>(v));
    Poly minpoly{std::move(coeffs)};
    emit(serialize_system(theta_system(minpoly, k)), out_path, out);
    return 0;
}

int cmd_gen_product(const std::string& matrix_text, std::ostream& out) {
    SolutionPair pair = product_parametrized_solution(parse_matrix(matrix_text));
    out << "x=" << tuple_str(pair.x) << " y=" << tuple_str(pair.y) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"symmetric Diophantine census and verification tool"};
    app.require_subcommand(1);

    std::string system_path, out_path, format = "table", method = "brute";
    std::uint64_t budget = kDefaultBudget, seed = 0;
    int workers = 1;
    std::int64_t x_single = 0;
    std::string x_list_text;
    bool mutate = false;

    auto* normalize_cmd = app.add_subcommand("normalize", "echo a system's normal form");
    normalize_cmd->add_option("--system", system_path, "system file")->required();

    auto* census_cmd = app.add_subcommand("census", "count and classify solutions");
    census_cmd->add_option("--system", system_path, "system file")->required();
    auto* x_opt = census_cmd->add_option("--x", x_single, "box bound X");
    auto* xlist_opt = census_cmd->add_option("--x-list", x_list_text,
                                             "comma-separated strictly increasing X values");
    auto* budget_opt = census_cmd->add_option("--budget", budget, "work budget in tuple tests");
    census_cmd->add_option("--method", method, "brute | divisor | both")
        ->check(CLI::IsMember({"brute", "divisor", "both"}));
    census_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    census_cmd->add_option("--format", format, "table | csv | jsonl")
        ->check(CLI::IsMember({"table", "csv", "jsonl"}));
    census_cmd->add_option("--out", out_path, "write output to this path");

    auto* verify_cmd = app.add_subcommand("verify", "run the randomized property suites");
    verify_cmd->add_option("--seed", seed, "64-bit seed for the SplitMix64 generator");
    verify_cmd->add_flag("--inject-mutation", mutate,
                         "self-test hook: corrupt one identity coefficient");

    std::string csv_path, column = "Tdagger";
    auto* fit_cmd = app.add_subcommand("fit", "log-log slope of census counts");
    fit_cmd->add_option("csv", csv_path, "census CSV produced by the census command")
        ->required();
    fit_cmd->add_option("--system", system_path, "system file for the weight bound");
    fit_cmd->add_option("--column", column, "count column to fit")
        ->check(CLI::IsMember({"N", "T", "Tstar", "Tdagger"}));

    auto* gen_cmd = app.add_subcommand("gen", "generate systems and sample solutions");
    gen_cmd->require_subcommand(1);
    int gen_k = 0, gen_r = 0;
    std::string gen_coeffs = "0", gen_minpoly, gen_matrix;
    auto* gen_cor = gen_cmd->add_subcommand("corollary", "sigma_j plus low-degree tail");
    gen_cor->add_option("--k", gen_k, "variables per side")->required();
    gen_cor->add_option("--r", gen_r, "equation count")->required();
    gen_cor->add_option("--coeffs", gen_coeffs,
                        "r x (k-r) matrix as rows 'a,b;c,d', or 0 for all zeros");
    gen_cor->add_option("--out", out_path, "write the system file here");
    auto* gen_theta_cmd = gen_cmd->add_subcommand("theta", "divisor-type system from a minimal polynomial");
    gen_theta_cmd->add_option("--minpoly", gen_minpoly,
                              "monic integer minimal polynomial, ascending coefficients")
        ->required();
    gen_theta_cmd->add_option("--k", gen_k, "variables per side")->required();
    gen_theta_cmd->add_option("--out", out_path, "write the system file here");
    auto* gen_prod = gen_cmd->add_subcommand("product-solution",
                                             "row/column product solution of the product equation");
    gen_prod->add_option("--matrix", gen_matrix, "positive matrix as rows 'a,b;c,d'")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (normalize_cmd->parsed()) return cmd_normalize(system_path, out);
        if (census_cmd->parsed()) {
            CensusArgs cargs;
            cargs.system_path = system_path;
            cargs.method = method;
            cargs.budget = resolve_budget(budget_opt->count() > 0, budget);
            cargs.workers = workers;
            cargs.format = format;
            cargs.out_path = out_path;
            if ((x_opt->count() > 0) == (xlist_opt->count() > 0))
                throw ParseError("census needs exactly one of --x and --x-list");
            if (x_opt->count() > 0) {
                cargs.xs = {x_single};
            } else {
                cargs.xs = parse_int_list(x_list_text);
                for (std::size_t i = 1; i < cargs.xs.size(); ++i)
                    if (cargs.xs[i] <= cargs.xs[i - 1])
                        throw ParseError("--x-list must be strictly increasing");
            }
            for (std::int64_t X : cargs.xs)
                if (X < 1) throw ParseError("X must be >= 1");
            return cmd_census(cargs, out);
        }
        if (verify_cmd->parsed()) return cmd_verify(seed, mutate, out);
        if (fit_cmd->parsed()) return cmd_fit(csv_path, system_path, column, out);
        if (gen_cmd->parsed()) {
            if (gen_cor->parsed())
                return cmd_gen_corollary(gen_k, gen_r, gen_coeffs, out_path, out);
            if (gen_theta_cmd->parsed())
                return cmd_gen_theta(gen_minpoly, gen_k, out_path, out);
            if (gen_prod->parsed()) return cmd_gen_product(gen_matrix, out);
        }
        err << "error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateSystemError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace paucity
