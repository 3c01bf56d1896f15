#pragma once

// Census of cubic Kummer fields K(cbrt(alpha)) ordered by the norm of the
// relative discriminant, with per-field verdicts and aggregate statistics.
//
// Discriminant rule: disc_norm = (prod N(pi_i))^2 for tame alpha, times 3^3
// when zeta divides the unit part and lambda does not divide alpha, times 3^4
// when lambda divides alpha.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubic_residue.hpp"
#include "eisenstein.hpp"
#include "factorization.hpp"
#include "heuristics.hpp"
#include "pell_oracle.hpp"
#include "redei.hpp"

#ifndef ZETA3PELL_BUILD_ID
#define ZETA3PELL_BUILD_ID "unknown"
#endif

namespace zeta3pell {

using ordered_json = nlohmann::ordered_json;

/// Raised when a records or class-group file cannot be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Variant { tame, lambda_all };

inline const char* to_string(Variant v) { return v == Variant::tame ? "tame" : "lambda"; }

inline Variant parse_variant(const std::string& s) {
    if (s == "tame") return Variant::tame;
    if (s == "lambda" || s == "lambda_all") return Variant::lambda_all;
    throw std::invalid_argument("unknown variant '" + s + "' (expected tame or lambda)");
}

enum class Verdict { solvable_redei, solvable_oracle, insoluble_external, unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::solvable_redei: return "SOLVABLE_REDEI";
    case Verdict::solvable_oracle: return "SOLVABLE_ORACLE";
    case Verdict::insoluble_external: return "INSOLUBLE_EXTERNAL";
    case Verdict::unknown: return "UNKNOWN";
    }
    return "?";
}

inline Verdict parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::solvable_redei, Verdict::solvable_oracle, Verdict::insoluble_external, Verdict::unknown})
        if (s == to_string(v)) return v;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

// ---------------------------------------------------------------------------
// Enumeration

/// Primes pi = 1 mod lambda^3 with N(pi) <= bound: both conjugates over every
/// rational p = 1 mod 9, sorted by (norm, a, b).
inline std::vector<Eisenstein> enumerate_admissible_primes(std::uint64_t bound) {
    std::vector<Eisenstein> out;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (p % 9 != 1) continue;
        Eisenstein pi = split_prime_over<std::int64_t>(p);
        for (const Eisenstein& x : {pi, pi.conj()}) {
            auto y = primary3_assoc(x);
            if (!y) throw std::logic_error("enumerate_admissible_primes: no primary3 associate over " + std::to_string(p));
            out.push_back(*y);
        }
    }
    std::sort(out.begin(), out.end(), [](const Eisenstein& x, const Eisenstein& y) { return norm_less(x, y); });
    return out;
}

inline BigInt disc_norm(const FieldSpec& spec) {
    BigInt p = 1;
    for (const auto& pi : spec.primes) p *= BigInt(pi.norm());
    BigInt d = p * p;
    switch (spec.field_class()) {
    case FieldClass::tame: break;
    case FieldClass::zeta_ramified: d *= 27; break;
    case FieldClass::lambda_divides: d *= 81; break;
    }
    return d;
}

struct FieldEntry {
    FieldSpec spec;
    BigInt disc_norm;
};

/// One spec per field with disc_norm <= X, ordered by disc_norm then alpha.
/// Of alpha and alpha^2 only the one whose first exponent is 1 is emitted.
inline std::vector<FieldEntry> enumerate_fields(const BigInt& X, Variant variant) {
    std::vector<FieldEntry> out;
    if (X < 1) return out;
    BigInt root = boost::multiprecision::sqrt(X);
    if (root > BigInt(std::numeric_limits<std::uint32_t>::max())) throw std::domain_error("enumerate_fields: X too large");
    const auto prime_bound = root.convert_to<std::uint64_t>();
    const std::vector<Eisenstein> primes = enumerate_admissible_primes(prime_bound);

    auto emit = [&](const std::vector<Eisenstein>& chosen) {
        const std::size_t n = chosen.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
            FieldSpec base;
            base.primes = chosen;
            base.exponents.assign(n, 1);
            for (std::size_t i = 1; i < n; ++i)
                if (mask >> (i - 1) & 1) base.exponents[i] = 2;
            std::vector<std::pair<int, int>> extras{{0, 0}};
            if (variant == Variant::lambda_all)
                extras.insert(extras.end(), {{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
            for (auto [z, l] : extras) {
                FieldSpec s = base;
                s.zeta_exp = z;
                s.lambda_exp = l;
                BigInt d = disc_norm(s);
                if (d <= X) out.push_back({std::move(s), std::move(d)});
            }
        }
    };

    std::vector<Eisenstein> chosen;
    // subsets of primes in increasing index order with prod N^2 <= X
    auto dfs = [&](auto&& self, std::size_t start, const BigInt& prod) -> void {
        for (std::size_t i = start; i < primes.size(); ++i) {
            BigInt next = prod * BigInt(primes[i].norm());
            if (next * next > X) break;
            chosen.push_back(primes[i]);
            emit(chosen);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, BigInt(1));

    std::vector<Eisenstein> alphas;
    alphas.reserve(out.size());
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        order[i] = i;
        alphas.push_back(out[i].spec.alpha());
    }
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (out[i].disc_norm != out[j].disc_norm) return out[i].disc_norm < out[j].disc_norm;
        return norm_less(alphas[i], alphas[j]);
    });
    std::vector<FieldEntry> sorted;
    sorted.reserve(out.size());
    for (std::size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

/// Reads alpha as zeta^z lambda^e prod pi_i^(a_i) with exponents reduced mod 3.
/// Throws std::domain_error when some prime factor is not 1 mod lambda^3.
inline FieldSpec spec_from_alpha(const Eisenstein& alpha) {
    if (alpha.is_zero() || is_unit(alpha)) throw std::domain_error("spec_from_alpha: alpha must be a non-unit");
    Factorization<std::int64_t> f = factor(alpha);
    FieldSpec s;
    int zeta = f.unit.zeta_exponent();
    for (const auto& pp : f.factors) {
        int e = pp.exponent % 3;
        if (pp.prime == Eisenstein::lambda()) {
            s.lambda_exp = e;
            continue;
        }
        if (e == 0) continue;
        auto p3 = primary3_assoc(pp.prime);
        if (!p3) throw std::domain_error("spec_from_alpha: prime factor " + pp.prime.str() + " is not 1 mod lambda^3 up to units");
        // pp.prime = u * p3 and p3 is primary2 as well, so the two coincide
        if (*p3 != pp.prime) throw std::logic_error("spec_from_alpha: canonical prime is not primary3");
        s.primes.push_back(*p3);
        s.exponents.push_back(e);
    }
    s.zeta_exp = ((zeta % 3) + 3) % 3;
    if (s.primes.empty()) throw std::domain_error("spec_from_alpha: alpha has no prime factor 1 mod lambda^3");
    s.validate();
    return s;
}

/// alpha = f g^2 with f collecting exponent-1 factors and g exponent-2 factors.
inline std::pair<Eisenstein, Eisenstein> oracle_order(const FieldSpec& spec) {
    Eisenstein f = Eisenstein::zeta().pow(static_cast<unsigned>(spec.zeta_exp));
    Eisenstein g = Eisenstein::one();
    if (spec.lambda_exp == 1) f *= Eisenstein::lambda();
    if (spec.lambda_exp == 2) g *= Eisenstein::lambda();
    for (std::size_t i = 0; i < spec.size(); ++i) (spec.exponents[i] == 1 ? f : g) *= spec.primes[i];
    return {f, g};
}

// ---------------------------------------------------------------------------
// Classification

struct FieldRecord {
    Eisenstein alpha;
    FieldSpec spec;
    BigInt disc_norm;
    std::size_t redei_rank = 0;
    std::size_t corank = 0;
    Verdict verdict = Verdict::unknown;
    std::optional<UnitWitness> witness;
    std::optional<std::size_t> cl_dim;

    friend bool operator==(const FieldRecord&, const FieldRecord&) = default;
};

using ClData = std::map<std::pair<std::int64_t, std::int64_t>, std::size_t>;

/// Positive criterion, then the unit oracle (oracle_bound 0 skips it), then the
/// negative criterion on externally supplied class-group data. Fields with
/// lambda | alpha never receive a Redei-based verdict.
inline FieldRecord classify(const FieldSpec& spec, std::int64_t oracle_bound, std::optional<std::size_t> cl_dim,
                            unsigned workers = 1) {
    FieldRecord r;
    r.spec = spec;
    r.alpha = spec.alpha();
    r.disc_norm = disc_norm(spec);
    r.cl_dim = cl_dim;
    RedeiMatrix m = build_redei(spec);
    r.redei_rank = redei_rank(m);
    r.corank = redei_corank(m);
    const bool redei_applies = spec.field_class() != FieldClass::lambda_divides;
    if (redei_applies && positive_criterion(m)) {
        r.verdict = Verdict::solvable_redei;
        return r;
    }
    if (oracle_bound > 0) {
        try {
            auto [f, g] = oracle_order(spec);
            UnitSearchOutcome o = search_unit_norm_zeta3(f, g, oracle_bound, workers);
            if (o.found()) {
                r.witness = o.witness;
                r.verdict = Verdict::solvable_oracle;
                return r;
            }
        } catch (const std::overflow_error&) {
            // coefficient growth beyond 128 bits: treated as an exhausted search
        }
    }
    if (redei_applies && cl_dim && negative_criterion(r.corank, *cl_dim)) r.verdict = Verdict::insoluble_external;
    return r;
}

// ---------------------------------------------------------------------------
// Serialization

inline ordered_json pair_json(const Eisenstein& x) { return ordered_json::array({x.a(), x.b()}); }

inline Eisenstein pair_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [a,b]");
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

inline ordered_json witness_json(const UnitWitness& w) {
    ordered_json j;
    j["u"] = pair_json(w.coords.u);
    j["v"] = pair_json(w.coords.v);
    j["w"] = pair_json(w.coords.w);
    j["g"] = pair_json(w.g);
    j["lambda_power"] = w.lambda_power;
    return j;
}

inline UnitWitness witness_from_json(const ordered_json& j) {
    UnitWitness w;
    w.coords = {pair_from_json(j.at("u")), pair_from_json(j.at("v")), pair_from_json(j.at("w"))};
    w.g = j.contains("g") ? pair_from_json(j.at("g")) : Eisenstein::one();
    w.lambda_power = j.value("lambda_power", 0);
    return w;
}

inline ordered_json record_json(const FieldRecord& r) {
    ordered_json j;
    j["alpha_a"] = r.alpha.a();
    j["alpha_b"] = r.alpha.b();
    ordered_json primes = ordered_json::array();
    for (const auto& p : r.spec.primes) primes.push_back(pair_json(p));
    j["primes"] = primes;
    j["exponents"] = r.spec.exponents;
    j["zeta_exp"] = r.spec.zeta_exp;
    j["lambda_exp"] = r.spec.lambda_exp;
    j["disc_norm"] = r.disc_norm.str();
    j["redei_rank"] = r.redei_rank;
    j["corank"] = r.corank;
    j["verdict"] = to_string(r.verdict);
    j["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
    j["cl_dim"] = r.cl_dim ? ordered_json(*r.cl_dim) : ordered_json(nullptr);
    return j;
}

inline FieldRecord record_from_json(const ordered_json& j) {
    FieldRecord r;
    r.alpha = {j.at("alpha_a").get<std::int64_t>(), j.at("alpha_b").get<std::int64_t>()};
    for (const auto& p : j.at("primes")) r.spec.primes.push_back(pair_from_json(p));
    r.spec.exponents = j.at("exponents").get<std::vector<int>>();
    r.spec.zeta_exp = j.at("zeta_exp").get<int>();
    r.spec.lambda_exp = j.at("lambda_exp").get<int>();
    r.disc_norm = BigInt(j.at("disc_norm").get<std::string>());
    r.redei_rank = j.at("redei_rank").get<std::size_t>();
    r.corank = j.at("corank").get<std::size_t>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
    if (!j.at("cl_dim").is_null()) r.cl_dim = j.at("cl_dim").get<std::size_t>();
    return r;
}

/// JSON-lines of {"alpha_a", "alpha_b", "cl_dim"}; blank lines are skipped.
inline ClData load_cl_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open class-group data file " + path);
    ClData out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto j = ordered_json::parse(line);
            out[{j.at("alpha_a").get<std::int64_t>(), j.at("alpha_b").get<std::int64_t>()}] =
                j.at("cl_dim").get<std::size_t>();
        } catch (const nlohmann::json::exception& e) {
            throw IoError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Census run

struct CensusConfig {
    BigInt X = 361;
    Variant variant = Variant::tame;
    std::int64_t oracle_bound = 0;
    unsigned workers = 1;
    std::optional<std::string> out_path;
    ClData cl_data;
    std::string build_id = ZETA3PELL_BUILD_ID;
};

struct Fraction {
    BigInt num = 0;
    BigInt den = 1;

    BigRational value() const { return den == 0 ? BigRational(0) : BigRational(num, den); }
};

struct CensusStats {
    std::uint64_t total = 0;
    std::map<std::size_t, std::uint64_t> by_corank;
    std::map<std::string, std::uint64_t> by_class;
    std::map<std::size_t, std::uint64_t> tame_by_corank;
    std::uint64_t solvable_redei = 0;
    std::uint64_t solvable_oracle = 0;
    std::uint64_t insoluble_count = 0;
    std::uint64_t unknown_count = 0;

    std::uint64_t solvable_lower() const { return solvable_redei + solvable_oracle; }
    Fraction lower_fraction() const { return {solvable_lower(), total}; }
    Fraction upper_fraction() const { return {BigInt(total) - insoluble_count, total}; }
    Fraction tame_corank_fraction(std::size_t m) const {
        auto it = tame_by_corank.find(m);
        return {it == tame_by_corank.end() ? 0 : it->second, by_class.count("tame") ? by_class.at("tame") : 0};
    }
    Fraction class_fraction(const std::string& c) const {
        auto it = by_class.find(c);
        return {it == by_class.end() ? 0 : it->second, total};
    }

    void add(const FieldRecord& r) {
        ++total;
        ++by_corank[r.corank];
        const std::string c = to_string(r.spec.field_class());
        ++by_class[c];
        if (c == "tame") ++tame_by_corank[r.corank];
        switch (r.verdict) {
        case Verdict::solvable_redei: ++solvable_redei; break;
        case Verdict::solvable_oracle: ++solvable_oracle; break;
        case Verdict::insoluble_external: ++insoluble_count; break;
        case Verdict::unknown: ++unknown_count; break;
        }
    }
};

struct CensusResult {
    std::vector<FieldRecord> records;
    CensusStats stats;
};

inline ordered_json census_header(const CensusConfig& c) {
    ordered_json h;
    h["schema_version"] = 1;
    h["X"] = c.X.str();
    h["variant"] = to_string(c.variant);
    h["oracle_bound"] = c.oracle_bound;
    h["build_id"] = c.build_id;
    return h;
}

namespace detail {

// Writes slot i only after slots 0..i-1, so the file is an append-only prefix
// of the final ordered output at every moment.
class OrderedWriter {
public:
    OrderedWriter(std::ofstream* out, std::size_t n) : out_(out), done_(n, false), lines_(n) {}

    void commit(std::size_t i, std::string line) {
        std::lock_guard lock(mu_);
        lines_[i] = std::move(line);
        done_[i] = true;
        if (!out_) return;
        while (next_ < done_.size() && done_[next_]) {
            *out_ << lines_[next_] << '\n';
            lines_[next_].clear();
            ++next_;
        }
        out_->flush();
        if (!*out_) failed_ = true;
    }

    bool failed() const { return failed_; }

private:
    std::ofstream* out_;
    std::mutex mu_;
    std::vector<bool> done_;
    std::vector<std::string> lines_;
    std::size_t next_ = 0;
    bool failed_ = false;
};

} // namespace detail

inline CensusResult run_census(const CensusConfig& config) {
    const std::vector<FieldEntry> fields = enumerate_fields(config.X, config.variant);

    std::optional<std::ofstream> file;
    if (config.out_path) {
        file.emplace(*config.out_path, std::ios::out | std::ios::trunc);
        if (!*file) throw IoError("cannot open records file " + *config.out_path);
        *file << census_header(config).dump() << '\n';
        file->flush();
        if (!*file) throw IoError("write failed on " + *config.out_path);
    }
    detail::OrderedWriter writer(file ? &*file : nullptr, fields.size());

    std::vector<FieldRecord> records(fields.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < fields.size();) {
            try {
                const FieldSpec& spec = fields[i].spec;
                const Eisenstein alpha = spec.alpha();
                std::optional<std::size_t> cl;
                if (auto it = config.cl_data.find({alpha.a(), alpha.b()}); it != config.cl_data.end()) cl = it->second;
                records[i] = classify(spec, config.oracle_bound, cl);
                writer.commit(i, record_json(records[i]).dump());
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                next = fields.size();
            }
        }
    };
    const unsigned workers = std::max(1u, config.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    if (writer.failed()) throw IoError("write failed on " + *config.out_path);

    CensusResult result;
    for (const auto& r : records) result.stats.add(r);
    result.records = std::move(records);
    return result;
}

inline ordered_json fraction_json(const Fraction& f, unsigned digits = 6) {
    ordered_json j;
    j["num"] = f.num.str();
    j["den"] = f.den.str();
    j["decimal"] = f.den == 0 ? std::string("nan") : to_decimal(f.value(), digits);
    return j;
}

inline ordered_json census_summary(const CensusConfig& c, const CensusStats& s) {
    const BigRational b = beta(40).value;
    ordered_json j = census_header(c);
    j["total"] = s.total;
    ordered_json classes;
    for (const char* k : {"tame", "zeta", "lambda"}) classes[k] = s.by_class.count(k) ? s.by_class.at(k) : 0;
    j["by_class"] = classes;
    ordered_json coranks;
    for (auto [k, v] : s.by_corank) coranks[std::to_string(k)] = v;
    j["by_corank"] = coranks;
    j["solvable_redei"] = s.solvable_redei;
    j["solvable_oracle"] = s.solvable_oracle;
    j["solvable_lower"] = s.solvable_lower();
    j["insoluble"] = s.insoluble_count;
    j["unknown"] = s.unknown_count;
    ordered_json bracket;
    bracket["lower"] = fraction_json(s.lower_fraction());
    bracket["upper"] = fraction_json(s.upper_fraction());
    j["bracket"] = bracket;
    ordered_json cmp = ordered_json::array();
    for (std::size_t m = 0; m <= 4; ++m) {
        ordered_json e;
        e["m"] = m;
        e["fraction"] = fraction_json(s.tame_corank_fraction(m));
        e["beta_m"] = to_decimal(beta_m(b, static_cast<unsigned>(m)), 6);
        cmp.push_back(e);
    }
    j["tame_corank_vs_beta"] = cmp;
    if (c.variant == Variant::lambda_all) {
        ordered_json d;
        d["tame"] = fraction_json(s.class_fraction("tame"));
        d["zeta"] = fraction_json(s.class_fraction("zeta"));
        d["lambda"] = fraction_json(s.class_fraction("lambda"));
        d["reference"] = {{"tame", "27/31"}, {"zeta", "2/31"}, {"lambda", "2/31"}};
        d["note"] = "diagnostic only; with squared discriminants the limiting shares are 1 : 2/sqrt(27) : 2/3 of the tame count";
        j["class_proportions"] = d;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Two-prime experiment

struct TwoPrimeReport {
    std::uint64_t prime_bound = 0;
    std::int64_t oracle_bound = 0;
    std::size_t primes = 0;
    std::uint64_t pairs = 0;
    std::uint64_t full_rank = 0;
    std::uint64_t remainder = 0;
    std::uint64_t oracle_found = 0;

    Fraction full_rank_fraction() const { return {full_rank, pairs}; }
    /// Share of all pairs solved only by the oracle; a lower estimate.
    Fraction oracle_extra_fraction() const { return {oracle_found, pairs}; }
    Fraction oracle_within_remainder() const { return {oracle_found, remainder}; }
};

/// Over all unordered pairs {pi_1, pi_2} of admissible primes with norm <=
/// prime_bound, alpha = pi_1 pi_2: how often the Redei matrix has full rank
/// (log (pi_1/pi_2)_3 != 0), and how often the oracle finds a unit of norm
/// zeta3 for the rest.
inline TwoPrimeReport two_prime_experiment(std::uint64_t prime_bound, std::int64_t oracle_bound, unsigned workers = 1) {
    if (prime_bound < 37) throw std::domain_error("two_prime_experiment: prime_bound must be >= 37");
    const std::vector<Eisenstein> primes = enumerate_admissible_primes(prime_bound);
    const std::size_t n = primes.size();
    std::vector<std::array<std::uint64_t, 3>> per_row(n, {0, 0, 0});
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                auto& row = per_row[i];
                for (std::size_t j = i + 1; j < n; ++j) {
                    ++row[0];
                    if (detail::symbol_log(primes[i], primes[j]) != 0) {
                        ++row[1];
                        continue;
                    }
                    if (oracle_bound > 0) {
                        try {
                            if (search_unit_norm_zeta3(primes[i] * primes[j], Eisenstein::one(), oracle_bound).found())
                                ++row[2];
                        } catch (const std::overflow_error&) {
                        }
                    }
                }
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                next = n;
            }
        }
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    TwoPrimeReport r;
    r.prime_bound = prime_bound;
    r.oracle_bound = oracle_bound;
    r.primes = n;
    for (const auto& row : per_row) {
        r.pairs += row[0];
        r.full_rank += row[1];
        r.oracle_found += row[2];
    }
    r.remainder = r.pairs - r.full_rank;
    return r;
}

} // namespace zeta3pell
