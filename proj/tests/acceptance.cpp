// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "support/oracles.hpp"
#include "zeta3pell/zeta3pell.hpp"

using namespace zeta3pell;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Eisenstein random_with_norm_at_most(std::mt19937_64& gen, std::int64_t max_norm) {
    const auto r = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(max_norm) / 3.0));
    std::uniform_int_distribution<std::int64_t> d(-r, r);
    for (;;) {
        Eisenstein x(d(gen), d(gen));
        if (!x.is_zero() && x.norm() <= max_norm) return x;
    }
}

Outcome symbol_equivalence() {
    std::mt19937_64 gen(20240601);
    std::size_t random_pairs = 0, residues = 0, mismatches = 0;
    while (random_pairs < 10000) {
        Eisenstein v = random_with_norm_at_most(gen, 100000000);
        Eisenstein w = random_with_norm_at_most(gen, 100000000);
        if (divides(Eisenstein::lambda(), w)) continue;
        if (fast_symbol(v, w) != general_symbol(v, w)) ++mismatches;
        ++random_pairs;
    }
    for (const Eisenstein& pi : enumerate_admissible_primes(2000)) {
        for (std::int64_t r = 0; r < pi.norm(); ++r) {
            if (fast_symbol(Eisenstein(r), pi) != general_symbol(Eisenstein(r), pi)) ++mismatches;
            ++residues;
        }
    }
    std::ostringstream s;
    s << random_pairs << " random pairs, " << residues << " residues, " << mismatches << " mismatches";
    return {mismatches == 0, s.str()};
}

Outcome reciprocity() {
    auto primes = enumerate_admissible_primes(10000);
    std::size_t pairs = 0, violations = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            if (euler_symbol(primes[i], primes[j]) != euler_symbol(primes[j], primes[i])) ++violations;
            ++pairs;
        }
    std::ostringstream s;
    s << primes.size() << " primes, " << pairs << " pairs, " << violations << " violations";
    return {violations == 0 && pairs > 0, s.str()};
}

Outcome redei_structure() {
    auto fields = enumerate_fields(BigInt("10000000000"), Variant::tame);
    std::size_t bad = 0;
    for (const auto& e : fields) {
        RedeiMatrix r = redei_matrix(e.spec);
        bool ok = r.matrix.is_symmetric() && (r.matrix * r.exponent_vector).is_zero() &&
                  r.matrix.left_multiply(r.exponent_vector).is_zero();
        for (std::size_t i = 0; ok && i < e.spec.size(); ++i) ok = r.matrix(i, i) == oracle::direct_diagonal(e.spec, i);
        if (!ok) ++bad;
    }
    std::ostringstream s;
    s << fields.size() << " specs, " << bad << " failures";
    return {bad == 0 && !fields.empty(), s.str()};
}

Outcome constants() {
    ConstantsReport r = series_checks(40, 128, 40);
    const BigRational two_forms = r.beta.value - r.beta_second.value;
    const BigRational gap = two_forms < 0 ? BigRational(-two_forms) : two_forms;
    const BigRational tol9(1, 1000000000);
    bool ok = gap <= BigRational(1, BigInt("1000000000000"));
    for (const SeriesCheck* c : {&r.sum_beta_m, &r.upper_sum, &r.stevenhagen_sum}) ok = ok && c->deviation() <= tol9;
    ok = ok && r.lower_identity && r.upper_identity;
    std::ostringstream s;
    s << "beta " << to_decimal(r.beta.value, 15) << ", two forms differ by " << to_double(gap)
      << ", series deviations " << to_double(r.sum_beta_m.deviation()) << " " << to_double(r.upper_sum.deviation())
      << " " << to_double(r.stevenhagen_sum.deviation())
      << ", identities " << (r.lower_identity && r.upper_identity ? "exact" : "broken");
    return {ok, s.str()};
}

Outcome corank_law(unsigned workers) {
    auto exact = exact_corank_distribution(2);
    const bool exact_ok = exact.size() == 3 && exact[0] == BigRational(18, 27) && exact[1] == BigRational(8, 27) &&
                          exact[2] == BigRational(1, 27);
    bool ok = exact_ok;
    MCRankReport mc = corank_mc(30, 200000, 1, workers);
    const double f0 = mc.frequency(0), f1 = mc.frequency(1), f2 = mc.frequency(2);
    ok = ok && std::abs(f0 - 0.639005) <= 0.01 && std::abs(f1 - 0.319503) <= 0.01 && std::abs(f2 - 0.039938) <= 0.005;
    std::ostringstream s;
    s << "exact n=2 law " << (exact_ok ? "{18,8,1}/27" : "wrong") << ", MC n=30 freq " << f0 << " " << f1 << " " << f2;
    return {ok, s.str()};
}

Outcome two_prime(unsigned workers) {
    TwoPrimeReport r = two_prime_experiment(100000, 0, workers);
    const double f = to_double(r.full_rank_fraction().value());
    std::ostringstream s;
    s << r.primes << " primes, " << r.pairs << " pairs, full-rank fraction " << f;
    return {f >= 0.617 && f <= 0.717, s.str()};
}

Outcome norm_forms() {
    std::mt19937_64 gen(77);
    std::uniform_int_distribution<std::int64_t> small(-60, 60), big(-100000, 100000);
    auto elt = [&](auto& d) { return Witness{{d(gen), d(gen)}, {d(gen), d(gen)}, {d(gen), d(gen)}}; };
    std::size_t bad_forms = 0, bad_mult = 0;
    for (int i = 0; i < 10000; ++i) {
        Eisenstein alpha(small(gen), small(gen));
        if (alpha.is_zero()) alpha = Eisenstein::one();
        Witness x = elt(small);
        if (relative_norm(x, alpha) != conjugate_product_norm(x, alpha)) ++bad_forms;
    }
    for (int i = 0; i < 1000; ++i) {
        BigEisenstein alpha(BigInt(big(gen)), BigInt(big(gen)));
        if (alpha.is_zero()) alpha = BigEisenstein::one();
        auto x = elt(big).cast<BigInt>(), y = elt(big).cast<BigInt>();
        if (relative_norm(multiply(x, y, alpha), alpha) != relative_norm(x, alpha) * relative_norm(y, alpha)) ++bad_mult;
    }
    std::ostringstream s;
    s << "10000 norm pairs, " << bad_forms << " disagreements; 1000 products, " << bad_mult << " failures";
    return {bad_forms == 0 && bad_mult == 0, s.str()};
}

std::vector<std::string> sorted_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    std::sort(lines.begin(), lines.end());
    return lines;
}

Outcome mini_census(unsigned workers) {
    const auto dir = std::filesystem::temp_directory_path() / "zeta3pell_acceptance";
    std::filesystem::create_directories(dir);
    CensusConfig c;
    c.X = 361;
    c.workers = 1;
    c.out_path = (dir / "census_1.jsonl").string();
    CensusResult a = run_census(c);
    c.workers = std::max(8u, workers);
    c.out_path = (dir / "census_n.jsonl").string();
    CensusResult b = run_census(c);
    bool ok = a.stats.total == 2 && a.stats.solvable_redei == 2;
    for (const auto& r : a.records) ok = ok && r.verdict == Verdict::solvable_redei;
    const bool same = sorted_lines(dir / "census_1.jsonl") == sorted_lines(dir / "census_n.jsonl");
    std::ostringstream s;
    s << a.stats.total << " fields, " << a.stats.solvable_redei << " SOLVABLE_REDEI, record files "
      << (same ? "identical" : "differ") << " for 1 and " << c.workers << " workers";
    return {ok && same, s.str()};
}

Outcome bracket_report(unsigned workers) {
    CensusConfig c;
    c.X = BigInt("10000000000");
    c.workers = workers;
    CensusResult r = run_census(c);
    const auto lo = r.stats.lower_fraction(), hi = r.stats.upper_fraction();
    const auto c0 = r.stats.tame_corank_fraction(0);
    std::ostringstream s;
    s << "X=1e10 tame, " << r.stats.total << " fields, bracket [" << to_decimal(lo.value(), 6) << ", "
      << to_decimal(hi.value(), 6) << "], corank-0 fraction " << to_decimal(c0.value(), 6) << " (beta "
      << to_decimal(beta(40).value, 6) << "), reported without tolerance";
    return {r.stats.total > 0 && lo.value() <= hi.value(), s.str()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"symbol oracle equivalence", symbol_equivalence},
        {"cubic reciprocity symmetry", reciprocity},
        {"Redei structural invariants", redei_structure},
        {"constants", constants},
        {"corank law", [&] { return corank_law(workers); }},
        {"two-prime density", [&] { return two_prime(workers); }},
        {"norm-form correctness", norm_forms},
        {"mini census", [&] { return mini_census(workers); }},
        {"census bracket report", [&] { return bracket_report(workers); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail << " [" << std::fixed << std::setprecision(2) << secs << " s]" << std::defaultfloat
                  << std::endl;
        if (!o.pass) ++failures;
    }
    return failures ? 1 : 0;
}
