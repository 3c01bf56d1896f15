// zeta3pell command-line front end.
//
// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeta3pell/zeta3pell.hpp"

namespace {

using namespace zeta3pell;
using json = nlohmann::ordered_json;

enum ExitCode { exit_ok = 0, exit_parse = 2, exit_domain = 3, exit_io = 4 };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Globals {
    Format format = Format::text;
    std::uint64_t seed = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
}

/// "a,b" is a + b*zeta; a bare "n" is the rational integer n.
Eisenstein parse_eisenstein(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {parse_int(s), 0};
    return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

BigInt parse_bigint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("not a nonnegative integer: '" + s + "'");
    // BigInt reads a leading 0 as octal
    return BigInt(s.substr(std::min(s.find_first_not_of('0'), s.size() - 1)));
}

json pair(const Eisenstein& x) { return json::array({x.a(), x.b()}); }

std::string csv_pair(const Eisenstein& x) { return std::to_string(x.a()) + "," + std::to_string(x.b()); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_symbol(const Globals& g, const std::string& v_str, const std::string& w_str, const std::string& method) {
    const Eisenstein v = parse_eisenstein(v_str), w = parse_eisenstein(w_str);
    CubicSymbol s = CubicSymbol::not_coprime();
    if (method == "fast") s = fast_symbol(v, w);
    else if (method == "general") s = general_symbol(v, w);
    else if (method == "euler") s = euler_symbol(v, w);
    else throw ParseError("unknown method '" + method + "'");
    switch (g.format) {
    case Format::text:
        if (s.is_coprime()) std::cout << s.value_str() << " (log " << s.log() << ")\n";
        else std::cout << "0 (not coprime)\n";
        break;
    case Format::json: {
        json j;
        j["v"] = pair(v);
        j["w"] = pair(w);
        j["symbol"] = s.value_str();
        j["log"] = s.is_coprime() ? json(s.log()) : json(nullptr);
        print_json(j);
        break;
    }
    case Format::csv:
        std::cout << "v_a,v_b,w_a,w_b,symbol,log\n"
                  << csv_pair(v) << ',' << csv_pair(w) << ',' << s.value_str() << ','
                  << (s.is_coprime() ? std::to_string(s.log()) : "") << '\n';
        break;
    }
    return exit_ok;
}

int cmd_factor(const Globals& g, const std::string& x_str) {
    const Eisenstein x = parse_eisenstein(x_str);
    if (x.is_zero()) throw std::domain_error("factor: zero has no factorization");
    auto f = factor(x);
    switch (g.format) {
    case Format::text: {
        std::cout << f.unit.value<std::int64_t>();
        for (const auto& pp : f.factors) {
            std::cout << " * " << pp.prime;
            if (pp.exponent != 1) std::cout << '^' << pp.exponent;
        }
        std::cout << '\n';
        break;
    }
    case Format::json: {
        json j;
        j["x"] = pair(x);
        j["unit"] = pair(f.unit.value<std::int64_t>());
        json fs = json::array();
        for (const auto& pp : f.factors) fs.push_back({{"prime", pair(pp.prime)}, {"exponent", pp.exponent}, {"norm", pp.prime.norm()}});
        j["factors"] = fs;
        print_json(j);
        break;
    }
    case Format::csv:
        std::cout << "prime_a,prime_b,exponent,norm\n";
        for (const auto& pp : f.factors)
            std::cout << csv_pair(pp.prime) << ',' << pp.exponent << ',' << pp.prime.norm() << '\n';
        break;
    }
    return exit_ok;
}

int cmd_redei(const Globals& g, const std::string& alpha_str) {
    const FieldSpec spec = spec_from_alpha(parse_eisenstein(alpha_str));
    const RedeiMatrix m = build_redei(spec);
    const std::size_t rk = redei_rank(m), cork = redei_corank(m);
    const bool full = spec.field_class() != FieldClass::lambda_divides && positive_criterion(m);
    switch (g.format) {
    case Format::text: {
        std::cout << "alpha " << spec.alpha() << "  class " << to_string(spec.field_class()) << '\n';
        std::cout << "primes";
        for (std::size_t i = 0; i < spec.size(); ++i) std::cout << ' ' << spec.primes[i] << '^' << spec.exponents[i];
        std::cout << "  zeta_exp " << spec.zeta_exp << "  lambda_exp " << spec.lambda_exp << '\n';
        std::cout << m.matrix.str();
        std::cout << "rank " << rk << "  corank " << cork << "  full_rank " << (full ? "yes" : "no") << '\n';
        break;
    }
    case Format::json: {
        json j;
        j["alpha"] = pair(spec.alpha());
        json ps = json::array();
        for (const auto& p : spec.primes) ps.push_back(pair(p));
        j["primes"] = ps;
        j["exponents"] = spec.exponents;
        j["zeta_exp"] = spec.zeta_exp;
        j["lambda_exp"] = spec.lambda_exp;
        j["class"] = to_string(spec.field_class());
        json rows = json::array();
        for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.matrix.cols(); ++k) row.push_back(m.matrix(i, k));
            rows.push_back(row);
        }
        j["matrix"] = rows;
        j["rank"] = rk;
        j["corank"] = cork;
        j["full_rank"] = full;
        print_json(j);
        break;
    }
    case Format::csv:
        for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
            for (std::size_t k = 0; k < m.matrix.cols(); ++k) std::cout << (k ? "," : "") << int(m.matrix(i, k));
            std::cout << '\n';
        }
        break;
    }
    return exit_ok;
}

struct CensusArgs {
    std::string max_disc = "361";
    std::string variant = "tame";
    std::int64_t oracle_bound = 2;
    std::string out = "census.jsonl";
    std::string cl_data;
};

int cmd_census(const Globals& g, const CensusArgs& a) {
    CensusConfig c;
    c.X = parse_bigint(a.max_disc);
    if (c.X < 361) throw std::domain_error("census: --max-disc must be >= 361");
    try {
        c.variant = parse_variant(a.variant);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (a.oracle_bound < 0) throw std::domain_error("census: --oracle-bound must be >= 0");
    c.oracle_bound = a.oracle_bound;
    c.workers = g.workers;
    c.out_path = a.out;
    if (!a.cl_data.empty()) c.cl_data = load_cl_data(a.cl_data);
    CensusResult r = run_census(c);
    json summary = census_summary(c, r.stats);
    switch (g.format) {
    case Format::text: {
        const auto& s = r.stats;
        std::cout << "total " << s.total << ", solvable " << s.solvable_lower() << " (redei " << s.solvable_redei
                  << ", oracle " << s.solvable_oracle << "), insoluble " << s.insoluble_count << ", unknown "
                  << s.unknown_count << '\n';
        std::cout << "bracket [" << summary["bracket"]["lower"]["decimal"].get<std::string>() << ", "
                  << summary["bracket"]["upper"]["decimal"].get<std::string>() << "]\n";
        std::cout << "corank";
        for (auto [k, v] : s.by_corank) std::cout << ' ' << k << ':' << v;
        std::cout << "\nrecords " << a.out << '\n';
        break;
    }
    case Format::json: print_json(summary); break;
    case Format::csv: {
        const auto& s = r.stats;
        std::cout << "total,solvable_redei,solvable_oracle,insoluble,unknown,lower_num,lower_den,upper_num,upper_den\n"
                  << s.total << ',' << s.solvable_redei << ',' << s.solvable_oracle << ',' << s.insoluble_count << ','
                  << s.unknown_count << ',' << s.lower_fraction().num << ',' << s.lower_fraction().den << ','
                  << s.upper_fraction().num << ',' << s.upper_fraction().den << '\n';
        break;
    }
    }
    return exit_ok;
}

int cmd_constants(const Globals& g, unsigned terms, unsigned precision, unsigned series_terms) {
    if (terms == 0) throw std::domain_error("constants: --terms must be >= 1");
    ConstantsReport r = series_checks(terms, precision, series_terms);
    const unsigned d = r.digits();
    auto check = [&](const SeriesCheck& c) {
        json j;
        j["value"] = to_decimal(c.value, d);
        j["expected"] = to_decimal(c.expected, d);
        j["error_bound"] = to_decimal(c.error_bound, d + 10);
        j["holds"] = c.holds();
        return j;
    };
    json j;
    j["truncation_terms"] = r.truncation_terms;
    j["series_terms"] = r.series_terms;
    j["precision_bits"] = r.precision_bits;
    j["beta"] = to_decimal(r.beta.value, d);
    j["beta_second_form"] = to_decimal(r.beta_second.value, d);
    j["beta_truncation_bound"] = to_decimal(r.beta.upper - r.beta.lower, d + 10);
    json bm = json::array();
    for (std::size_t m = 0; m < std::min<std::size_t>(r.beta_m.size(), 8); ++m) bm.push_back(to_decimal(r.beta_m[m], d));
    j["beta_m"] = bm;
    j["sum_beta_m"] = check(r.sum_beta_m);
    j["upper_sum"] = check(r.upper_sum);
    j["stevenhagen_sum"] = check(r.stevenhagen_sum);
    j["two_minus_two_beta"] = to_decimal(r.conjecture_value, d);
    j["lambda_lower"] = to_decimal(r.lambda_lower, d);
    j["lambda_upper"] = {{"num", "95"}, {"den", "124"}, {"decimal", to_decimal(r.lambda_upper, d)}};
    j["trivial_lower"] = to_decimal(r.trivial_lower, d);
    j["trivial_upper"] = {{"num", "97"}, {"den", "124"}, {"decimal", to_decimal(r.trivial_upper, d)}};
    j["lower_identity_exact"] = r.lower_identity;
    j["upper_identity_exact"] = r.upper_identity;
    switch (g.format) {
    case Format::json: print_json(j); break;
    case Format::text:
    case Format::csv: {
        const bool csv = g.format == Format::csv;
        if (csv) std::cout << "name,value\n";
        auto line = [&](const std::string& k, const std::string& v) {
            std::cout << k << (csv ? "," : " ") << v << '\n';
        };
        line("beta", j["beta"].get<std::string>());
        line("beta_second_form", j["beta_second_form"].get<std::string>());
        for (std::size_t m = 0; m < bm.size(); ++m) line("beta_" + std::to_string(m), bm[m].get<std::string>());
        line("sum_beta_m", j["sum_beta_m"]["value"].get<std::string>());
        line("upper_sum", j["upper_sum"]["value"].get<std::string>());
        line("stevenhagen_sum", j["stevenhagen_sum"]["value"].get<std::string>());
        line("two_minus_two_beta", j["two_minus_two_beta"].get<std::string>());
        line("lambda_lower", j["lambda_lower"].get<std::string>());
        line("lambda_upper", "95/124");
        line("trivial_lower", j["trivial_lower"].get<std::string>());
        line("trivial_upper", "97/124");
        break;
    }
    }
    return exit_ok;
}

int cmd_montecarlo(const Globals& g, const std::string& mode, std::size_t n, std::uint64_t samples, unsigned m) {
    if (mode == "corank") {
        MCRankReport r = corank_mc(n, samples, g.seed, g.workers);
        json j;
        j["n"] = r.n;
        j["samples"] = r.samples;
        j["seed"] = r.seed;
        json counts;
        for (auto [k, c] : r.corank_counts) counts[std::to_string(k)] = c;
        j["corank_counts"] = counts;
        json cmp = json::array();
        for (const auto& c : r.comparison)
            cmp.push_back({{"m", c.m}, {"frequency", c.frequency}, {"beta_m", c.predicted}, {"deviation", c.deviation()}});
        j["comparison"] = cmp;
        switch (g.format) {
        case Format::json: print_json(j); break;
        case Format::text:
            std::cout << "n " << r.n << "  samples " << r.samples << "  seed " << r.seed << '\n';
            for (const auto& c : r.comparison)
                std::cout << "corank " << c.m << "  freq " << c.frequency << "  beta_m " << c.predicted << "  dev "
                          << c.deviation() << '\n';
            break;
        case Format::csv:
            std::cout << "m,count,frequency,beta_m\n";
            for (const auto& c : r.comparison)
                std::cout << c.m << ',' << (r.corank_counts.count(c.m) ? r.corank_counts.at(c.m) : 0) << ','
                          << c.frequency << ',' << c.predicted << '\n';
            break;
        }
        return exit_ok;
    }
    if (mode == "splitting") {
        SplittingReport r = splitting_mc(m, samples, g.seed, g.workers);
        json j;
        j["m"] = r.m;
        j["samples"] = r.samples;
        j["seed"] = r.seed;
        j["conditional_frequency"] = r.conditional_frequency;
        j["conditional_probability"] = to_decimal(r.conditional_probability, 9);
        j["composite_frequency"] = r.composite_frequency;
        j["composite_mass"] = to_decimal(r.composite_mass, 12);
        j["note"] = "model-arithmetic check of the 3^-m refinement, not a number-theoretic test";
        switch (g.format) {
        case Format::json: print_json(j); break;
        case Format::text:
            std::cout << "m " << r.m << "  conditional " << r.conditional_frequency << " (model "
                      << to_decimal(r.conditional_probability, 6) << ")  composite " << r.composite_frequency
                      << " (model " << to_decimal(r.composite_mass, 6) << ")\n";
            break;
        case Format::csv:
            std::cout << "m,conditional_frequency,conditional_probability,composite_frequency,composite_mass\n"
                      << r.m << ',' << r.conditional_frequency << ',' << to_decimal(r.conditional_probability, 9) << ','
                      << r.composite_frequency << ',' << to_decimal(r.composite_mass, 12) << '\n';
            break;
        }
        return exit_ok;
    }
    throw ParseError("unknown mode '" + mode + "' (expected corank or splitting)");
}

int cmd_pell_search(const Globals& g, const std::string& alpha_str, std::int64_t bound, const std::string& order) {
    const Eisenstein alpha = parse_eisenstein(alpha_str);
    if (bound < 1) throw std::domain_error("pell-search: --bound must be >= 1");
    json j;
    j["alpha"] = pair(alpha);
    j["bound"] = bound;
    j["order"] = order;
    std::string text;
    if (order == "monogenic") {
        SearchOutcome o = search_norm_zeta3(alpha, bound, g.workers);
        j["found"] = o.found();
        if (o.found()) {
            j["witness"] = {{"u", pair(o.witness->u)}, {"v", pair(o.witness->v)}, {"w", pair(o.witness->w)}};
            j["squared"] = o.scanned_norm_log == 2;
            text = "found u=" + o.witness->u.str() + " v=" + o.witness->v.str() + " w=" + o.witness->w.str();
        } else {
            j["witness"] = nullptr;
            text = "exhausted bound " + std::to_string(bound);
        }
    } else if (order == "extended") {
        const FieldSpec spec = spec_from_alpha(alpha);
        auto [f, gg] = oracle_order(spec);
        UnitSearchOutcome o = search_unit_norm_zeta3(f, gg, bound, g.workers);
        j["alpha"] = pair(spec.alpha());
        j["found"] = o.found();
        if (o.found()) {
            j["witness"] = witness_json(*o.witness);
            j["squared"] = o.scanned_norm_log == 2;
            const auto& w = *o.witness;
            text = "found (u + v t + w t^2/g) / lambda^k with u=" + w.coords.u.str() + " v=" + w.coords.v.str() +
                   " w=" + w.coords.w.str() + " g=" + w.g.str() + " k=" + std::to_string(w.lambda_power);
        } else {
            j["witness"] = nullptr;
            text = "exhausted bound " + std::to_string(bound);
        }
    } else {
        throw ParseError("unknown order '" + order + "' (expected extended or monogenic)");
    }
    switch (g.format) {
    case Format::json: print_json(j); break;
    case Format::text: std::cout << text << '\n'; break;
    case Format::csv:
        std::cout << "alpha_a,alpha_b,bound,order,found\n"
                  << csv_pair(alpha) << ',' << bound << ',' << order << ',' << (j["found"].get<bool>() ? 1 : 0) << '\n';
        break;
    }
    return exit_ok;
}

int cmd_two_prime(const Globals& g, std::uint64_t prime_bound, std::int64_t oracle_bound) {
    if (prime_bound < 37) throw std::domain_error("two-prime: --prime-bound must be >= 37");
    if (oracle_bound < 0) throw std::domain_error("two-prime: --oracle-bound must be >= 0");
    TwoPrimeReport r = two_prime_experiment(prime_bound, oracle_bound, g.workers);
    json j;
    j["prime_bound"] = r.prime_bound;
    j["oracle_bound"] = r.oracle_bound;
    j["primes"] = r.primes;
    j["pairs"] = r.pairs;
    j["full_rank"] = r.full_rank;
    j["full_rank_fraction"] = fraction_json(r.full_rank_fraction());
    j["remainder"] = r.remainder;
    j["oracle_found"] = r.oracle_found;
    j["oracle_extra_fraction"] = fraction_json(r.oracle_extra_fraction());
    j["oracle_extra_note"] = "lower estimate; an exhausted search is inconclusive";
    switch (g.format) {
    case Format::json: print_json(j); break;
    case Format::text:
        std::cout << "pairs " << r.pairs << "  full_rank " << r.full_rank << " ("
                  << j["full_rank_fraction"]["decimal"].get<std::string>() << ")\n"
                  << "remainder " << r.remainder << "  oracle_found " << r.oracle_found << " ("
                  << j["oracle_extra_fraction"]["decimal"].get<std::string>()
                  << " of all pairs, lower estimate)\n";
        break;
    case Format::csv:
        std::cout << "prime_bound,oracle_bound,pairs,full_rank,remainder,oracle_found\n"
                  << r.prime_bound << ',' << r.oracle_bound << ',' << r.pairs << ',' << r.full_rank << ','
                  << r.remainder << ',' << r.oracle_found << '\n';
        break;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic residue symbols, Redei matrices and zeta3-Pell experiments over Z[zeta3]"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    Globals g;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized commands");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);

    std::string v_str, w_str, method = "fast";
    auto* symbol = app.add_subcommand("symbol", "Cubic residue symbol (v/w)_3");
    symbol->add_option("--v", v_str, "Numerator a,b")->required();
    symbol->add_option("--w", w_str, "Denominator a,b, coprime to 3")->required();
    symbol->add_option("--method", method, "fast, general or euler")->check(CLI::IsMember({"fast", "general", "euler"}));

    std::string x_str;
    auto* fac = app.add_subcommand("factor", "Factor an Eisenstein integer");
    fac->add_option("--x", x_str, "Element a,b")->required();

    std::string alpha_str;
    auto* redei = app.add_subcommand("redei", "Redei matrix of K(cbrt(alpha))");
    redei->add_option("--alpha", alpha_str, "alpha as a,b")->required();

    CensusArgs ca;
    auto* census = app.add_subcommand("census", "Classify all fields up to a discriminant bound");
    census->add_option("--max-disc", ca.max_disc, "Discriminant norm bound X");
    census->add_option("--variant", ca.variant, "tame or lambda")->check(CLI::IsMember({"tame", "lambda"}));
    census->add_option("--oracle-bound", ca.oracle_bound, "Coefficient box for the unit oracle (0 disables)");
    census->add_option("--out", ca.out, "Records file (JSON lines)");
    census->add_option("--cl-data", ca.cl_data, "Class-group data file (JSON lines of alpha_a, alpha_b, cl_dim)");

    unsigned terms = 40, precision = 128, series_terms = 40;
    auto* constants = app.add_subcommand("constants", "beta, beta_m and the series identities");
    constants->add_option("--terms", terms, "Factors in the beta partial product");
    constants->add_option("--precision", precision, "Reporting precision in bits");
    constants->add_option("--series-terms", series_terms, "Terms kept in each series")->check(CLI::Range(2u, 400u));

    std::string mode = "corank";
    std::size_t mc_n = 30;
    std::uint64_t samples = 200000;
    unsigned split_m = 1;
    auto* mc = app.add_subcommand("montecarlo", "Random symmetric matrices over F_3");
    mc->add_option("--mode", mode, "corank or splitting")->check(CLI::IsMember({"corank", "splitting"}));
    mc->add_option("--n", mc_n, "Matrix size")->check(CLI::PositiveNumber);
    mc->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
    mc->add_option("--m", split_m, "Corank conditioned on (splitting mode)");

    std::int64_t bound = 3;
    std::string order = "extended";
    auto* pell = app.add_subcommand("pell-search", "Search for a unit of relative norm zeta3");
    pell->add_option("--alpha", alpha_str, "alpha as a,b")->required();
    pell->add_option("--bound", bound, "Per-coordinate coefficient bound");
    pell->add_option("--order", order, "extended or monogenic")->check(CLI::IsMember({"extended", "monogenic"}));

    std::uint64_t prime_bound = 10000;
    std::int64_t tp_oracle = 0;
    auto* two = app.add_subcommand("two-prime", "Full-rank frequency over pairs of admissible primes");
    two->add_option("--prime-bound", prime_bound, "Norm bound for the primes");
    two->add_option("--oracle-bound", tp_oracle, "Coefficient box for the unit oracle (0 disables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_parse;
    }
    g.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);

    try {
        if (*symbol) return cmd_symbol(g, v_str, w_str, method);
        if (*fac) return cmd_factor(g, x_str);
        if (*redei) return cmd_redei(g, alpha_str);
        if (*census) return cmd_census(g, ca);
        if (*constants) return cmd_constants(g, terms, precision, series_terms);
        if (*mc) return cmd_montecarlo(g, mode, mc_n, samples, split_m);
        if (*pell) return cmd_pell_search(g, alpha_str, bound, order);
        if (*two) return cmd_two_prime(g, prime_bound, tp_oracle);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::overflow_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_ok;
}
