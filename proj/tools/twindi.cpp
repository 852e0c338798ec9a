// twindi: sieves, censuses and counting estimates for prime pairs 2m +/- d.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "twindi/census.hpp"
#include "twindi/errata.hpp"
#include "twindi/estimate.hpp"
#include "twindi/pair_sieve.hpp"

using json = nlohmann::ordered_json;
using namespace twindi;

namespace {

std::string fmt_real(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

json rat_json(const Rat& r) {
    return json{{"exact", r.str()}, {"approx", r.to_double()}};
}

struct Output {
    std::string path; // empty = stdout
    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw domain_error("cannot open output file " + path);
            f << body;
        }
    }
};

void emit_json(const Output& out, const std::string& command, json params,
               json results, i64 d) {
    json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["results"] = std::move(results);
    doc["errata_notes"] = errata_notes(d);
    out.write(doc.dump(2) + "\n");
}

void emit_ranks(const Output& out, const std::string& command,
                const std::vector<i64>& ranks, const std::string& format, i64 d,
                json params) {
    if (format == "csv") {
        std::string body = "m\n";
        for (i64 m : ranks) body += std::to_string(m) + "\n";
        out.write(body);
    } else {
        emit_json(out, command, std::move(params), json{{"twin_ranks", ranks}}, d);
    }
}

i64 env_budget(i64 fallback) {
    if (const char* v = std::getenv("TWINDI_BUDGET")) {
        char* end = nullptr;
        long long parsed = std::strtoll(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
    }
    return fallback;
}

json audit_json(const AuditReport& rep, bool with_terms) {
    json r;
    r["l_bar"] = rep.l_bar;
    r["m_next"] = rep.m_next;
    r["prime_limit"] = rep.prime_limit;
    r["r_oracle"] = rep.r_oracle;
    r["lhs"] = rat_json(rep.lhs);
    r["r0"] = rep.r0;
    r["ie_sum"] = rep.ie_sum;
    r["rhs"] = rep.rhs;
    r["discrepancy"] = rat_json(rep.discrepancy);
    r["exceptional_correction"] = rep.exceptional_correction;
    if (with_terms) {
        json terms = json::array();
        for (const auto& t : rep.term_log)
            terms.push_back(json{{"n", t.n},
                                 {"mu", t.mu},
                                 {"nu", t.nu},
                                 {"bracket", t.bracket},
                                 {"signed_term", t.signed_term}});
        r["term_log"] = std::move(terms);
    }
    return r;
}

int run_verify(const std::string& suite, i64 d_value, i64 limit, i64 p_j) {
    int violations = 0;
    auto d = HalfDistance::of(d_value);
    if (suite == "sieve-vs-oracle") {
        auto sieved = sieve_twin_ranks(SieveRun::make(d, limit));
        auto oracle = oracle_twin_ranks(d, limit);
        if (sieved != oracle) {
            size_t n = std::max(sieved.size(), oracle.size());
            for (size_t i = 0; i < n; ++i) {
                i64 a = i < sieved.size() ? sieved[i] : -1;
                i64 b = i < oracle.size() ? oracle[i] : -1;
                if (a != b) {
                    ++violations;
                    std::cerr << "violation: d=" << d_value << " index " << i
                              << " sieve=" << a << " oracle=" << b << "\n";
                    break;
                }
            }
        }
    } else if (suite == "census-enumeration") {
        auto rep = census(p_j, d);
        auto sets = enumerate_supergroup(p_j, d, env_budget(kDefaultBudget));
        if (static_cast<u128>(sets.nonrank_count) != rep.s ||
            static_cast<u128>(sets.remnant_count) != rep.r0) {
            ++violations;
            std::cerr << "violation: d=" << d_value << " p_j=" << p_j
                      << " enumerated (" << sets.nonrank_count << ","
                      << sets.remnant_count << ") vs census (S="
                      << to_string_u128(rep.s) << ", R0=" << to_string_u128(rep.r0)
                      << ")\n";
        }
    } else if (suite == "crt-counts") {
        std::vector<i64> pool = {5, 7, 11, 13};
        for (int mask = 1; mask < 16; ++mask) {
            std::vector<i64> subset;
            for (int b = 0; b < 4; ++b)
                if (mask & (1 << b)) subset.push_back(pool[static_cast<size_t>(b)]);
            bool eligible = true;
            for (i64 p : subset) eligible = eligible && d.coprime(p);
            if (!eligible) continue;
            auto prog = common_progression(subset, d);
            if (prog.residues.size() != (size_t{1} << subset.size())) {
                ++violations;
                std::cerr << "violation: d=" << d_value << " |S|=" << subset.size()
                          << " count=" << prog.residues.size() << "\n";
            }
            for (i64 r = 0; r < prog.modulus; ++r) {
                bool in_all = true;
                for (i64 p : subset)
                    in_all = in_all && single_progression(p, d).contains(r);
                if (in_all != prog.contains(r)) {
                    ++violations;
                    std::cerr << "violation: d=" << d_value << " residue " << r
                              << " CRT/intersection mismatch\n";
                    break;
                }
            }
        }
    } else if (suite == "toy-identities") {
        std::vector<std::vector<i64>> sets = {
            {13, 17}, {7}, {5, 7, 11}, {11, 13, 17, 19}, {5, 7, 11, 13, 17, 19, 23}};
        for (const auto& primes : sets) {
            Rat product(1);
            for (i64 p : primes) product = product * Rat(p - 2, p);
            if (signed_expansion(primes) != product) {
                ++violations;
                std::cerr << "violation: toy identity failed for set of "
                          << primes.size() << " primes\n";
            }
        }
    } else {
        throw domain_error("unknown verify suite: " + suite);
    }
    std::cout << (violations == 0 ? "ok" : "FAILED") << ": " << suite << " ("
              << violations << " violations)\n";
    return violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twin pair sieve laboratory for prime pairs 2m +/- d"};
    app.require_subcommand(1);

    i64 d_value = 3, limit = 100, p_j = 11, x = 1000, m_query = 1;
    std::string format = "json", out_path, suite;
    i64 segment_size = kDefaultSegment;
    i64 budget = env_budget(kDefaultBudget);
    int threads = 0;
    bool with_terms = false;

    auto add_common = [&](CLI::App* cmd, bool needs_d = true) {
        if (needs_d) cmd->add_option("--d", d_value, "odd half-distance D >= 3");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    auto* sieve_cmd = app.add_subcommand("sieve", "segmented pair sieve up to --limit");
    add_common(sieve_cmd);
    sieve_cmd->add_option("--limit", limit, "largest m")->required();
    sieve_cmd->add_option("--segment-size", segment_size, "sieve segment length");
    sieve_cmd->add_option("--threads", threads, "worker threads (0 = machine)");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force twin ranks up to --limit");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--limit", limit, "largest m")->required();

    auto* classify_cmd = app.add_subcommand("classify", "classify a single m");
    add_common(classify_cmd);
    classify_cmd->add_option("--m", m_query, "the rank candidate")->required();

    auto* census_cmd = app.add_subcommand("census", "exact counts over one period");
    add_common(census_cmd);
    census_cmd->add_option("--pj", p_j, "largest census prime")->required();
    census_cmd->add_option("--budget", budget, "enumeration budget");

    auto* audit_cmd = app.add_subcommand("audit", "inclusion-exclusion audit");
    add_common(audit_cmd);
    audit_cmd->add_option("--pj", p_j, "census prime")->required();
    audit_cmd->add_option("--budget", budget, "enumeration budget");
    audit_cmd->add_flag("--terms", with_terms, "include the full term log");

    auto* estimate_cmd = app.add_subcommand("estimate", "main and error terms");
    add_common(estimate_cmd);
    estimate_cmd->add_option("--pj", p_j, "census prime")->required();
    estimate_cmd->add_option("--budget", budget, "enumeration budget");

    auto* coeff_cmd = app.add_subcommand("coeff", "asymptotic coefficient C(D)");
    add_common(coeff_cmd);

    auto* hl_cmd = app.add_subcommand("hl", "oracle count vs integrated density");
    add_common(hl_cmd);
    hl_cmd->add_option("--x", x, "upper bound on 2m + D")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("suite", suite,
                           "sieve-vs-oracle | census-enumeration | crt-counts | "
                           "toy-identities")
        ->required();
    verify_cmd->add_option("--d", d_value, "odd half-distance D >= 3");
    verify_cmd->add_option("--limit", limit, "sieve limit");
    verify_cmd->add_option("--pj", p_j, "census prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    Output out{out_path};
    try {
        auto d = HalfDistance::of(d_value);
        json params;
        params["d"] = d_value;

        if (*sieve_cmd) {
            params["limit"] = limit;
            auto ranks = sieve_twin_ranks(SieveRun::make(d, limit, segment_size), threads);
            emit_ranks(out, "sieve", ranks, format, d_value, params);
        } else if (*oracle_cmd) {
            params["limit"] = limit;
            emit_ranks(out, "oracle", oracle_twin_ranks(d, limit), format, d_value, params);
        } else if (*classify_cmd) {
            params["m"] = m_query;
            auto c = classify(m_query, d);
            json r{{"m", c.m}, {"verdict", verdict_name(c.verdict)}};
            if (c.verdict == Verdict::TrivialNonRank) r["divisor"] = c.witness;
            if (c.verdict == Verdict::ProgressionNonRank) r["parent_prime"] = c.witness;
            emit_json(out, "classify", params, r, d_value);
        } else if (*census_cmd) {
            params["pj"] = p_j;
            auto rep = census(p_j, d);
            json r;
            r["eligible_primes"] = rep.eligible;
            r["L_bar"] = to_string_u128(rep.l_bar);
            r["S"] = to_string_u128(rep.s);
            r["R0"] = to_string_u128(rep.r0);
            r["Q"] = rat_json(rep.big_q);
            r["x"] = rat_json(rep.x);
            json g, q;
            for (size_t i = 0; i < rep.eligible.size(); ++i) {
                g[std::to_string(rep.eligible[i])] = to_string_u128(rep.g[i]);
                q[std::to_string(rep.eligible[i])] = rat_json(rep.q[i]);
            }
            r["G"] = std::move(g);
            r["q"] = std::move(q);
            if (rep.l_bar <= static_cast<u128>(budget)) {
                auto sets = enumerate_supergroup(p_j, d, budget);
                r["enumerated_nonranks"] = sets.nonrank_count;
                r["enumerated_remnants"] = sets.remnant_count;
                r["coprime_remnants"] = sets.coprime_remnant_count;
                r["exceptional_points"] = exceptional_points(p_j, d, budget);
            }
            emit_json(out, "census", params, r, d_value);
        } else if (*audit_cmd) {
            params["pj"] = p_j;
            auto rep = audit_theorem52(p_j, d, budget);
            if (format == "csv") {
                std::string body = "n,mu,nu,bracket,signed_term\n";
                for (const auto& t : rep.term_log)
                    body += std::to_string(t.n) + "," + std::to_string(t.mu) + "," +
                            std::to_string(t.nu) + "," + std::to_string(t.bracket) +
                            "," + std::to_string(t.signed_term) + "\n";
                out.write(body);
            } else {
                emit_json(out, "audit", params, audit_json(rep, with_terms), d_value);
            }
        } else if (*estimate_cmd) {
            params["pj"] = p_j;
            auto main_rep = main_term(p_j, d);
            auto err_rep = error_term(p_j, d, budget);
            json r;
            r["r_m"] = fmt_real(main_rep.r_m);
            r["asymptotic_r_m"] = fmt_real(main_rep.asymptotic_r_m);
            r["c_d"] = fmt_real(main_rep.c_d);
            r["r_oracle"] = err_rep.r_oracle;
            r["r_e"] = fmt_real(err_rep.r_e);
            r["frac_first_order"] = fmt_real(err_rep.frac_first);
            r["frac_second_order"] = fmt_real(err_rep.frac_second);
            emit_json(out, "estimate", params, r, d_value);
        } else if (*coeff_cmd) {
            json r{{"C", fmt_real(coefficient_C(d))}};
            if (format == "csv") {
                out.write("C\n" + fmt_real(coefficient_C(d)) + "\n");
            } else {
                emit_json(out, "coeff", params, r, d_value);
            }
        } else if (*hl_cmd) {
            params["x"] = x;
            auto rep = hl_comparison(d, x);
            json r;
            r["oracle_pairs"] = rep.oracle_pairs;
            r["estimated"] = fmt_real(rep.estimated);
            r["ratio"] = fmt_real(rep.ratio);
            r["in_band"] = rep.in_band;
            if (!rep.in_band) r["flag"] = "ratio outside [0.9, 1.1]";
            emit_json(out, "hl", params, r, d_value);
        } else if (*verify_cmd) {
            return run_verify(suite, d_value, limit, p_j);
        }
    } catch (const regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
