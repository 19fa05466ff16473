#include "orbzeta/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "orbzeta/global_formula.hpp"
#include "orbzeta/kloosterman.hpp"
#include "orbzeta/oracles.hpp"
#include "orbzeta/order_zeta.hpp"
#include "orbzeta/verify.hpp"
#include "orbzeta/zagier.hpp"

namespace orbzeta {

namespace {

using json = nlohmann::json;

struct UsageError : DomainError {
    using DomainError::DomainError;
};

Complex parse_complex(std::string text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw UsageError("empty complex number");
    auto num = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw UsageError("bad complex number: " + text);
        return v;
    };
    try {
        if (s.back() != 'i') return {num(s), 0.0};
        s.pop_back();
        std::size_t cut = std::string::npos;
        for (std::size_t i = s.size(); i-- > 1;)
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                cut = i;
                break;
            }
        if (cut == std::string::npos) return {0.0, num(s)};
        return {num(s.substr(0, cut)), num(s.substr(cut))};
    } catch (const std::logic_error&) {
        throw UsageError("bad complex number: " + text);
    }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        std::string t;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

class Emitter {
public:
    Emitter(std::ostream& out, bool table) : out_(out), table_(table) {}

    void emit(const json& j) {
        if (!table_) {
            out_ << j.dump() << '\n';
            return;
        }
        std::size_t width = 0;
        for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string v = it->is_string() ? it->get<std::string>() : it->dump();
            out_ << std::left << std::setw(int(width) + 2) << it.key() << v << '\n';
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
    bool table_;
};

json prime_json(const LocalPrime& q) {
    json j{{"p", integer_json(q.p())}, {"e", q.e()}, {"f", q.f()}};
    if (q.kind() == LocalPrime::Kind::Split) j["index"] = q.index();
    return j;
}

json s_pairs(const IdealData& S) {
    json arr = json::array();
    for (const auto& [q, e] : S.factors) arr.push_back(json::array({integer_json(q.p()), e}));
    return arr;
}

// Runs fn(i) for i < n on `threads` workers; results land in slot i so the
// output order never depends on scheduling.
template <class F>
std::vector<CheckOutcome> run_parallel(std::size_t n, int threads, F fn) {
    std::vector<CheckOutcome> results(n);
    std::vector<std::string> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = fn(i);
            } catch (const std::exception& e) {
                results[i].ok = false;
                results[i].detail = {{"error", e.what()}};
            }
        }
    };
    threads = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

struct SuiteOptions {
    std::string field = "Q";
    std::size_t count = 0;  // 0 = the check's default
    std::uint64_t seed = 1;
    long bound = 1000000;
    long norm_bound = 10000;
    int threads = 1;
    std::vector<std::string> deltas;
    bool verbose = false;
};

const std::vector<std::string> kChecks = {"fe",          "arthur",      "congruence", "oracle-local",
                                          "oracle-global", "oracle-tree", "zagier-fe"};

// Returns the number of failures.
long run_suite(const std::string& check, const SuiteOptions& opt, Emitter& emit) {
    BaseField field = BaseField::parse(opt.field);
    auto corpus = [&](std::size_t dflt) {
        std::vector<AlgebraicInt> ds;
        for (const auto& s : opt.deltas) ds.push_back(field.parse_element(s));
        if (ds.empty()) ds = random_deltas(field, opt.count ? opt.count : dflt, opt.seed, opt.bound);
        return ds;
    };

    std::vector<CheckOutcome> results;
    if (check == "fe" || check == "arthur") {
        auto ds = corpus(field.is_rational() ? 500 : 100);
        if (check == "arthur" && field.is_rational() && opt.deltas.empty())
            for (const Integer& d : elliptic_sweep_deltas()) ds.emplace_back(d);
        results = run_parallel(ds.size(), opt.threads, [&](std::size_t i) {
            return check == "fe" ? check_functional_equation(field, ds[i]) : check_arthur(field, ds[i]);
        });
    } else if (check == "congruence") {
        auto ds = corpus(50);
        auto ideals = enumerate_ideals(field, opt.norm_bound);
        results = run_parallel(ds.size() + 1, opt.threads, [&](std::size_t i) {
            return i < ds.size() ? check_congruence(field, ds[i], ideals) : check_no_solution(field);
        });
    } else if (check == "oracle-local") {
        std::vector<std::tuple<SplitType, int, long>> cells;
        for (SplitType t : {SplitType::Split, SplitType::Inert, SplitType::Ramified})
            for (int n = 0; n <= 2; ++n)
                for (long p : {2L, 3L}) cells.emplace_back(t, n, p);
        results = run_parallel(cells.size(), opt.threads, [&](std::size_t i) {
            auto [t, n, p] = cells[i];
            return check_local_oracle(t, n, p, 4);
        });
    } else if (check == "oracle-global") {
        std::vector<long> ds;
        for (const auto& s : opt.deltas) ds.push_back(std::stol(s));
        if (ds.empty()) ds = {5, 45, 48, -4, -12};
        results = run_parallel(ds.size(), opt.threads, [&](std::size_t i) { return check_global_oracle(ds[i], 200); });
    } else if (check == "oracle-tree") {
        auto cases = tree_corpus();
        results = run_parallel(cases.size(), opt.threads, [&](std::size_t i) { return check_tree(cases[i]); });
    } else if (check == "zagier-fe") {
        std::vector<Integer> ds;
        for (const auto& s : opt.deltas) ds.emplace_back(s);
        if (ds.empty())
            for (long d : {5, 8, 12, 13, 45, -3, -4, -7, 173}) ds.emplace_back(d);
        results = run_parallel(ds.size(), opt.threads, [&](std::size_t i) { return check_zagier_fe(ds[i]); });
    } else {
        throw UsageError("unknown check '" + check + "'");
    }

    long failures = 0;
    for (const auto& r : results) {
        failures += !r.ok;
        if (!r.ok || opt.verbose) {
            json line = r.detail;
            line["check"] = check;
            line["ok"] = r.ok;
            emit.emit(line);
        }
    }
    emit.emit({{"check", check}, {"field", opt.field}, {"cases", results.size()}, {"failures", failures}});
    return failures;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) throw UsageError("bad config line: " + line);
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbital integrals, order zeta functions and Zagier zeta functions of quadratic orders"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::string field_spec = "Q", delta_spec;
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", field_spec, "Q or Q(sqrt:m)");
        sub->add_option("--delta", delta_spec, "a or a+b*w")->required();
    };

    auto* classify = app.add_subcommand("classify", "splitting type and depth at every prime dividing delta");
    add_field(classify);
    auto* sgamma = app.add_subcommand("sgamma", "the ideal S_delta");
    add_field(sgamma);
    auto* orbital = app.add_subcommand("orbital", "O(s, delta) as an exponential polynomial");
    add_field(orbital);
    std::string at_s;
    orbital->add_option("--at-s", at_s, "also evaluate at s (integer: exact, otherwise complex)");

    auto* zag = app.add_subcommand("zagier", "Zagier L-function and its completion over Q");
    std::string zdelta, zs = "0.5";
    zag->add_option("--delta", zdelta)->required();
    zag->add_option("--s", zs, "a+bi");

    auto* kl = app.add_subcommand("kloosterman", "the sum K_{a,d}");
    long ka = 1, kd = 1, kp = 2;
    int kk = 0;
    std::string ksign = "minus", kvariant = "with-cc";
    kl->add_option("--a", ka)->required();
    kl->add_option("--d", kd)->required();
    kl->add_option("--p", kp)->required();
    kl->add_option("--k", kk)->required();
    kl->add_option("--sign", ksign, "delta sign: plus (m^2+4p^k) or minus (m^2-4p^k)")
        ->check(CLI::IsMember({"plus", "minus"}));
    kl->add_option("--variant", kvariant)->check(CLI::IsMember({"with-cc", "without-cc"}));

    auto* e2 = app.add_subcommand("euler2", "Euler factor at 2 of the Kloosterman double series");
    int ek = 0, eN = 8;
    std::string es = "1", evariant = "without-cc", esign = "minus";
    e2->add_option("--k", ek)->required();
    e2->add_option("--s", es);
    e2->add_option("--variant", evariant)->check(CLI::IsMember({"with-cc", "without-cc"}));
    e2->add_option("--N", eN, "truncation d <= 2^N");
    e2->add_option("--sign", esign)->check(CLI::IsMember({"plus", "minus"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
    oracle->require_subcommand(1);
    auto* otree = oracle->add_subcommand("tree", "lattice count in the tree of PGL(2, Q_p)");
    std::string ogamma;
    long op = 2;
    int ormax = 40;
    otree->add_option("--gamma", ogamma, "a,b,c,d")->required();
    otree->add_option("--p", op)->required();
    otree->add_option("--rmax", ormax);
    auto* oideals = oracle->add_subcommand("ideals", "ideal counts of Z[gamma]");
    long odelta = 0, oN = 50;
    oideals->add_option("--delta", odelta)->required();
    oideals->add_option("--N", oN);

    SuiteOptions sopt;
    std::string vcheck, vdeltas;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("check", vcheck)->required()->check(CLI::IsMember(kChecks));
    verify->add_option("--field", sopt.field);
    verify->add_option("--count", sopt.count);
    verify->add_option("--seed", sopt.seed);
    verify->add_option("--bound", sopt.bound);
    verify->add_option("--norm-bound", sopt.norm_bound);
    verify->add_option("--threads", sopt.threads);
    verify->add_option("--deltas", vdeltas, "comma-separated list overriding the random corpus");
    verify->add_flag("--verbose", sopt.verbose, "emit every case");

    auto* sweep = app.add_subcommand("sweep", "run checks from a key=value CONFIG file");
    std::string config;
    sweep->add_option("config", config)->required();

    std::vector<std::string> argv_store{"orbzeta"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    Emitter emit(out, format == "table");
    auto field = [&] { return BaseField::parse(field_spec); };

    if (*classify) {
        BaseField K = field();
        AlgebraicInt d = K.parse_element(delta_spec);
        DeltaData data = analyze_delta(K, d);
        json primes = json::array();
        for (const auto& [q, c] : data.local) {
            json j = prime_json(q);
            j["type"] = to_string(c.type);
            j["n"] = c.depth;
            j["chi"] = chi_value(c.type);
            primes.push_back(j);
        }
        emit.emit({{"field", K.spec()},
                   {"delta", d.to_string()},
                   {"primes", primes},
                   {"S", s_pairs(data.s_delta)},
                   {"norm", integer_json(data.s_delta.norm())}});
        return 0;
    }
    if (*sgamma) {
        BaseField K = field();
        IdealData S = s_delta(K, K.parse_element(delta_spec));
        json j{{"S", s_pairs(S)}, {"norm", integer_json(S.norm())}};
        if (!K.is_rational()) j["ideal"] = to_json(S);
        emit.emit(j);
        return 0;
    }
    if (*orbital) {
        BaseField K = field();
        AlgebraicInt d = K.parse_element(delta_spec);
        auto series = global_series(K, d);
        json j{{"field", K.spec()},
               {"delta", d.to_string()},
               {"S", s_pairs(series.s_delta)},
               {"product", to_json(series.product)},
               {"value", to_string(langlands_value(series))}};
        if (!at_s.empty()) {
            long si = 0;
            std::size_t used = 0;
            bool integral = false;
            try {
                si = std::stol(at_s, &used);
                integral = used == at_s.size();
            } catch (const std::logic_error&) {
            }
            if (integral) j["at_s"] = {{"s", at_s}, {"value", to_string(series.product.eval_exact(si))}};
            else j["at_s"] = {{"s", at_s}, {"value", complex_json(series.product.eval(parse_complex(at_s)))}};
        }
        emit.emit(j);
        return 0;
    }
    if (*zag) {
        Integer d;
        if (d.set_str(zdelta, 10) != 0) throw UsageError("bad delta: " + zdelta);
        Complex s = parse_complex(zs);
        auto z = CompletedZagier::make(d);
        Complex lam = z.lambda(s), lam_r = z.lambda(1.0 - s);
        emit.emit({{"delta", d.get_str()},
                   {"s", complex_json(s)},
                   {"D", integer_json(z.fundamental)},
                   {"L", complex_json(z.L(s))},
                   {"L_direct", complex_json(zagier_L_direct(s, d))},
                   {"Lambda", complex_json(lam)},
                   {"Lambda_reflected", complex_json(lam_r)},
                   {"residual", std::abs(lam - lam_r) / (1 + std::abs(lam))}});
        return 0;
    }
    if (*kl) {
        KloostermanCell cell{ka, kd, kp, kk, ksign == "plus" ? DeltaSign::Plus : DeltaSign::Minus,
                             kvariant == "with-cc" ? CongruenceVariant::WithCC : CongruenceVariant::WithoutCC};
        emit.emit({{"a", ka}, {"d", kd}, {"p", kp}, {"k", kk}, {"sign", ksign}, {"variant", kvariant},
                   {"value", kloosterman(cell)}});
        return 0;
    }
    if (*e2) {
        Complex s = parse_complex(es);
        auto r = euler_factor_at_2(ek, s, evariant == "with-cc" ? CongruenceVariant::WithCC : CongruenceVariant::WithoutCC,
                                   eN, esign == "plus" ? DeltaSign::Plus : DeltaSign::Minus);
        Rational closed = make_rational(2 * (ipow(2, ek + 3) - 1), ipow(2, ek + 3));
        emit.emit({{"k", ek},
                   {"s", complex_json(s)},
                   {"variant", evariant},
                   {"sign", esign},
                   {"N", eN},
                   {"value", complex_json(r.value)},
                   {"tail_bound", r.tail_bound},
                   {"reference", to_string(closed)},
                   {"distance", std::abs(r.value - closed.get_d())}});
        return 0;
    }
    if (*otree) {
        auto parts = split_list(ogamma);
        if (parts.size() != 4) throw UsageError("--gamma needs four comma-separated integers");
        IntMat2 g{};
        for (int i = 0; i < 4; ++i) g[i] = std::stol(parts[i]);
        auto r = tree_orbital_oracle(g, op, ormax);
        json j{{"gamma", g},
               {"p", op},
               {"kind", r.kind == TreeCase::Elliptic ? "elliptic" : "split"},
               {"ramified", r.ramified},
               {"counts", r.level_counts},
               {"conclusive", r.conclusive}};
        if (r.conclusive) j["value"] = to_string(r.value);
        emit.emit(j);
        return 0;
    }
    if (*oideals) {
        auto c = global_ideal_count_oracle(odelta, oN);
        emit.emit({{"delta", odelta}, {"N", oN}, {"counts", std::vector<long>(c.begin() + 1, c.end())}});
        return 0;
    }
    if (*verify) {
        sopt.deltas = split_list(vdeltas);
        return run_suite(vcheck, sopt, emit) ? 1 : 0;
    }
    if (*sweep) {
        auto kv = read_config(config);
        SuiteOptions o;
        std::vector<std::string> checks{"fe"};
        std::string output;
        for (const auto& [k, v] : kv) {
            if (k == "field") o.field = v;
            else if (k == "deltas") o.deltas = split_list(v);
            else if (k == "count") o.count = std::stoul(v);
            else if (k == "seed") o.seed = std::stoull(v);
            else if (k == "bound") o.bound = std::stol(v);
            else if (k == "norm_bound") o.norm_bound = std::stol(v);
            else if (k == "threads") o.threads = std::stoi(v);
            else if (k == "checks") checks = split_list(v);
            else if (k == "output") output = v;
            else if (k == "verbose") o.verbose = v == "1" || v == "true";
            else throw UsageError("unknown config key '" + k + "'");
        }
        for (const auto& c : checks)
            if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end())
                throw UsageError("unknown check '" + c + "'");
        std::ofstream file;
        std::ostream* sink = &out;
        if (!output.empty()) {
            std::filesystem::path path(output);
            if (const char* dir = std::getenv("ORBZETA_OUTPUT_DIR"); dir && path.is_relative()) path = dir / path;
            file.open(path);
            if (!file) throw UsageError("cannot write " + path.string());
            sink = &file;
        }
        Emitter file_emit(*sink, format == "table");
        long failures = 0;
        for (const auto& c : checks) failures += run_suite(c, o, file_emit);
        return failures ? 1 : 0;
    }
    return 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: bad number: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: number out of range: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace orbzeta
