// spinmem command-line front end: emits performance curves, ROC families,
// damaged-network comparisons and retrieval statistics as CSV/JSON, and runs
// the cross-verification suite. Batch only; plotting is left to external
// tooling.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinmem/amu.hpp"
#include "spinmem/catalog.hpp"
#include "spinmem/decode.hpp"
#include "spinmem/enumerate.hpp"
#include "spinmem/mask.hpp"
#include "spinmem/perf.hpp"

using json = nlohmann::ordered_json;
using namespace spinmem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Writes either CSV (with the run config as a '# config:' header comment)
/// or a JSON document with the config embedded, to --out or stdout.
struct OutputSink {
    std::string path;    // empty = stdout
    std::string format;  // "csv" | "json"

    void write_csv(const json& config, const std::string& header,
                   const std::vector<std::string>& rows) const {
        std::ostringstream os;
        os << "# config: " << config.dump() << "\n" << header << "\n";
        for (const auto& r : rows) os << r << "\n";
        deliver(os.str());
    }

    void write_json(json doc) const { deliver(doc.dump(2) + "\n"); }

    void deliver(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
        out << text;
    }
};

codec::SpinPattern resolve_x0(const std::string& text, int n) {
    if (text.empty()) return codec::SpinPattern::all_plus(static_cast<std::size_t>(n));
    auto p = codec::SpinPattern::parse(text);
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("--x0 length does not match --n");
    return p;
}

/// Explicit spec from --damage, plus optional random draws resolved here so
/// the echoed config always carries the explicit sets.
nn::DamageSpec resolve_damage(const std::string& damage_text, int random_kill,
                              int random_cut, int n, std::uint64_t seed) {
    auto spec = nn::DamageSpec::parse(damage_text);
    if (random_kill > 0) {
        if (random_kill > n) throw std::invalid_argument("--random-kill exceeds N");
        NoiseSource noise(seed, 7001);
        auto mask = codec::sample_mask(static_cast<std::size_t>(n),
                                       static_cast<std::size_t>(random_kill), noise);
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask.marked(i)) spec.killed_entrance.insert(i);
    }
    if (random_cut > 0) {
        if (random_cut > n * n) throw std::invalid_argument("--random-cut exceeds N*N");
        NoiseSource noise(seed, 7002);
        while (static_cast<int>(spec.disrupted_links.size()) < random_cut) {
            const auto i = static_cast<std::size_t>(noise.below(n));
            const auto j = static_cast<std::size_t>(noise.below(n));
            spec.disrupted_links.insert({i, j});
        }
    }
    return spec;
}

json curve_config_json(const std::string& cmd, int n, const std::vector<int>& thetas,
                       const std::string& method, long long trials, std::uint64_t seed,
                       const std::string& x0, const std::string& damage) {
    json cfg;
    cfg["command"] = cmd;
    cfg["n"] = n;
    cfg["theta"] = thetas;
    cfg["method"] = method;
    cfg["trials"] = trials;
    cfg["seed"] = seed;
    cfg["x0"] = x0;
    if (!damage.empty()) cfg["damage"] = damage;
    return cfg;
}

int run_curve(int n, std::vector<int> thetas, const std::string& method_name,
              long long trials, std::uint64_t seed, const std::string& x0_text,
              const std::string& damage_text, const OutputSink& sink) {
    const auto method = perf::parse_method(method_name);
    const auto x0 = resolve_x0(x0_text, n);
    if (thetas.empty()) thetas = {0};

    auto spec = nn::DamageSpec::parse(damage_text);
    json cfg = curve_config_json("curve", n, thetas, method_name, trials, seed,
                                 x0.str(), spec.empty() ? "" : spec.str());

    std::vector<std::string> rows;
    json jpoints = json::array();
    for (int theta : thetas) {
        perf::ClassifyConfig ccfg{theta, 1.0, nn::DecodeRule::nn,
                                  spec.empty() ? std::nullopt : std::optional(spec)};
        auto curve = perf::performance_curve(x0, ccfg, method, trials, seed);
        for (const auto& pt : curve.points) {
            std::ostringstream row;
            row << pt.m << ',' << fmt_double(pt.d.value()) << ',' << fmt_double(pt.q.value())
                << ',' << theta << ',' << fmt_double(pt.p) << ",,"
                << perf::method_name(method) << ',' << trials << ',' << seed;
            rows.push_back(row.str());
            json jp;
            jp["m"] = pt.m;
            jp["d"] = pt.d.str();
            jp["q"] = pt.q.str();
            jp["theta"] = theta;
            jp["p"] = pt.p;
            if (pt.has_exact) jp["p_exact"] = pt.p_rat.str();
            if (method == perf::Method::monte_carlo) jp["std_err"] = pt.std_err;
            jpoints.push_back(jp);
        }
    }

    if (sink.format == "json") {
        json doc;
        doc["config"] = cfg;
        doc["points"] = jpoints;
        sink.write_json(doc);
    } else {
        sink.write_csv(cfg, "m,d,q,theta,P,F,method,trials,seed", rows);
    }
    return kExitOk;
}

int run_roc(int n, std::vector<int> ms, const std::string& method_name, long long trials,
            std::uint64_t seed, const std::string& x0_text, const OutputSink& sink) {
    const auto method = perf::parse_method(method_name);
    const auto x0 = resolve_x0(x0_text, n);
    if (ms.empty()) ms = {0};

    json cfg;
    cfg["command"] = "roc";
    cfg["n"] = n;
    cfg["m"] = ms;
    cfg["method"] = method_name;
    cfg["trials"] = trials;
    cfg["seed"] = seed;
    cfg["x0"] = x0.str();

    std::vector<std::string> rows;
    json jcurves = json::array();
    for (int m : ms) {
        perf::ClassifyConfig ccfg{0, 1.0, nn::DecodeRule::nn, std::nullopt};
        auto curve = perf::roc(x0, ccfg, m, method, trials, seed);
        json jc;
        jc["m"] = m;
        json jp = json::array();
        for (const auto& pt : curve.points) {
            std::ostringstream row;
            row << m << ',' << fmt_double(static_cast<double>(m) / n) << ','
                << fmt_double(1.0 - static_cast<double>(m) / n) << ',' << pt.theta << ','
                << fmt_double(pt.p) << ',' << fmt_double(pt.f) << ','
                << perf::method_name(method) << ',' << trials << ',' << seed;
            rows.push_back(row.str());
            json e;
            e["theta"] = pt.theta;
            e["f"] = pt.f;
            e["p"] = pt.p;
            if (pt.has_exact) {
                e["f_exact"] = pt.f_rat.str();
                e["p_exact"] = pt.p_rat.str();
            }
            jp.push_back(e);
        }
        jc["points"] = jp;
        jcurves.push_back(jc);
    }

    if (sink.format == "json") {
        json doc;
        doc["config"] = cfg;
        doc["curves"] = jcurves;
        sink.write_json(doc);
    } else {
        sink.write_csv(cfg, "m,d,q,theta,P,F,method,trials,seed", rows);
    }
    return kExitOk;
}

int run_damage(int n, int theta, const std::string& damage_text, int random_kill,
               int random_cut, std::uint64_t seed, const std::string& x0_text,
               const OutputSink& sink) {
    const auto x0 = resolve_x0(x0_text, n);
    const auto spec = resolve_damage(damage_text, random_kill, random_cut, n, seed);
    if (spec.empty())
        throw std::invalid_argument("damage: give --damage or --random-kill/--random-cut");

    json cfg;
    cfg["command"] = "damage";
    cfg["n"] = n;
    cfg["theta"] = theta;
    cfg["damage"] = spec.str();  // resolved explicit sets, reproducible
    cfg["seed"] = seed;
    cfg["x0"] = x0.str();

    perf::ClassifyConfig intact{theta, 1.0, nn::DecodeRule::nn, std::nullopt};
    perf::ClassifyConfig damaged{theta, 1.0, nn::DecodeRule::nn, spec};
    auto ci = perf::performance_curve(x0, intact, perf::Method::exact);
    auto cd = perf::performance_curve(x0, damaged, perf::Method::exact);

    const std::vector<Rational> cues = {Rational{0}, Rational{1, 3}, Rational{1}};
    auto si = perf::summarize(x0, intact, cues, perf::Method::exact);
    auto sd = perf::summarize(x0, damaged, cues, perf::Method::exact);

    std::vector<std::string> rows;
    for (int m = 0; m <= n; ++m) {
        std::ostringstream row;
        row << "curve," << m << ',' << fmt_double(ci.points[m].d.value()) << ','
            << fmt_double(ci.points[m].q.value()) << ',' << fmt_double(ci.points[m].p) << ','
            << fmt_double(cd.points[m].p);
        rows.push_back(row.str());
    }
    auto summary_row = [&](const std::string& name, double qv, double pi, double pd) {
        std::ostringstream row;
        row << name << ",," << fmt_double(1.0 - qv) << ',' << fmt_double(qv) << ','
            << fmt_double(pi) << ',' << fmt_double(pd);
        rows.push_back(row.str());
    };
    summary_row("free-recall", 0.0, si.alpha, sd.alpha);
    summary_row("cued-recall", si.cued[1].q.value(), si.cued[1].p, sd.cued[1].p);
    summary_row("recognition", 1.0, si.recognition, sd.recognition);

    if (sink.format == "json") {
        json doc;
        doc["config"] = cfg;
        json jp = json::array();
        for (int m = 0; m <= n; ++m) {
            json e;
            e["m"] = m;
            e["d"] = ci.points[m].d.str();
            e["p_intact"] = ci.points[m].p_rat.str();
            e["p_damaged"] = cd.points[m].p_rat.str();
            jp.push_back(e);
        }
        doc["curve"] = jp;
        doc["summary"] = {{"free_recall", {{"intact", si.alpha}, {"damaged", sd.alpha}}},
                          {"cued_recall", {{"q", si.cued[1].q.str()},
                                           {"intact", si.cued[1].p},
                                           {"damaged", sd.cued[1].p}}},
                          {"recognition", {{"intact", si.recognition},
                                           {"damaged", sd.recognition}}}};
        sink.write_json(doc);
    } else {
        sink.write_csv(cfg, "row,m,d,q,P_intact,P_damaged", rows);
    }
    return kExitOk;
}

int run_amu(int n, int theta, double eta, const std::string& q_text, double t0, double freq,
            int max_cycles, long long runs, std::uint64_t seed, const std::string& x0_text,
            const OutputSink& sink) {
    const auto x0 = resolve_x0(x0_text, n);

    // q as "a/b" or decimal multiple of 1/N
    Rational q{1};
    {
        auto slash = q_text.find('/');
        if (slash != std::string::npos) {
            q = Rational(std::stoll(q_text.substr(0, slash)),
                         std::stoll(q_text.substr(slash + 1)));
        } else {
            const double qv = std::stod(q_text);
            const double md = (1.0 - qv) * n;
            const auto m = static_cast<long long>(md + 0.5);
            if (std::abs(md - static_cast<double>(m)) > 1e-9)
                throw std::invalid_argument("--q must be a multiple of 1/N");
            q = Rational{n - m, n};
        }
    }
    const Rational m_exact = (Rational{1} - q) * Rational{n};
    if (m_exact.den() != 1 || m_exact.num() < 0 || m_exact.num() > n)
        throw std::invalid_argument("--q must be a multiple of 1/N in [0,1]");
    const int m = static_cast<int>(m_exact.num());

    json cfg;
    cfg["command"] = "amu";
    cfg["n"] = n;
    cfg["theta"] = theta;
    cfg["eta"] = eta;
    cfg["q"] = q.str();
    cfg["t0"] = t0;
    cfg["freq"] = freq;
    cfg["max_external_cycles"] = max_cycles;
    cfg["runs"] = runs;
    cfg["seed"] = seed;
    cfg["x0"] = x0.str();

    auto unit = amu::AmuUnit::make(x0, eta);
    amu::AmuConfig acfg;
    acfg.theta = theta;
    acfg.t0 = t0;
    acfg.freq = freq;
    acfg.max_external_cycles = max_cycles;
    auto always = [](int, double) { return true; };
    auto stats = amu::retrieval_statistics(unit, amu::Cue{m, std::nullopt}, acfg, always,
                                           runs, NoiseSource(seed));

    const double mean_attempts =
        static_cast<double>(stats.total_attempts) / static_cast<double>(stats.runs);

    std::vector<std::string> rows;
    rows.push_back("success_rate,," + fmt_double(stats.success_rate));
    rows.push_back("per_attempt_rate,," + fmt_double(stats.per_attempt_rate));
    rows.push_back("mean_attempts,," + fmt_double(mean_attempts));
    rows.push_back("mean_elapsed,," + fmt_double((mean_attempts - 1.0) / freq));
    for (const auto& [attempts, count] : stats.attempts_histogram)
        rows.push_back("histogram," + std::to_string(attempts) + "," + std::to_string(count));

    if (sink.format == "json") {
        json doc;
        doc["config"] = cfg;
        doc["success_rate"] = stats.success_rate;
        doc["per_attempt_rate"] = stats.per_attempt_rate;
        doc["mean_attempts"] = mean_attempts;
        doc["mean_elapsed"] = (mean_attempts - 1.0) / freq;
        json hist = json::object();
        for (const auto& [attempts, count] : stats.attempts_histogram)
            hist[std::to_string(attempts)] = count;
        doc["attempts_histogram"] = hist;
        sink.write_json(doc);
    } else {
        sink.write_csv(cfg, "row,attempts,value", rows);
    }
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

/// Local analytic evaluation with an optional deliberate fault, so the suite
/// can demonstrate its own sensitivity (SPINMEM_VERIFY_FAULT=kmax).
Rational analytic_for_verify(int m, int n, int theta, bool fault) {
    if (!fault) return perf::p_analytic(m, n, theta);
    const int r = n - theta;
    const int kmax0 = (r % 2 == 0) ? r / 2 - 1 : (r - 1) / 2;
    const int kmax = std::min(m, kmax0 + 1);  // corrupted cap
    std::int64_t count = 0;
    for (int k = 0; k <= kmax; ++k)
        count += static_cast<std::int64_t>(codec::binomial(m, k));
    return {count, static_cast<std::int64_t>(1) << m};
}

int run_verify(std::vector<int> ns) {
    if (ns.empty()) ns = {9};
    const bool fault = [] {
        const char* v = std::getenv("SPINMEM_VERIFY_FAULT");
        return v && std::string(v) == "kmax";
    }();

    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        all_ok = all_ok && ok;
    };

    for (int n : ns) {
        const auto x0 = codec::SpinPattern::all_plus(static_cast<std::size_t>(n));
        const auto grid = perf::theta_grid(n);

        bool eq_ok = true;
        for (int theta : grid) {
            perf::ClassifyConfig cfg{theta, 1.0, nn::DecodeRule::nn, std::nullopt};
            for (int m = 0; m <= n && eq_ok; ++m)
                eq_ok = analytic_for_verify(m, n, theta, fault) == perf::p_exact(x0, cfg, m);
            if (!eq_ok) break;
        }
        report("analytic equals exhaustive enumeration (N=" + std::to_string(n) + ")", eq_ok);

        // all 2^N inputs: decoder agreement and the Q = N - 2D identity
        bool rules_ok = true;
        bool identity_ok = true;
        const auto w = nn::SynapseMatrix::learn(x0, 1.0);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            std::vector<std::int8_t> c(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) c[i] = (bits >> i) & 1 ? +1 : -1;
            codec::SpinPattern x_in(std::move(c));
            const auto qv = nn::convolution(x0, x_in);
            const auto dv = nn::hamming_distance(x0, x_in);
            identity_ok = identity_ok && qv == n - 2 * dv;
            for (int theta : grid) {
                nn::NeuronConfig ncfg{static_cast<double>(theta), 0.0};
                const bool a = nn::classify(w, ncfg, x_in, nn::DecodeRule::nn);
                const bool b = nn::classify(w, ncfg, x_in, nn::DecodeRule::convolutional);
                const bool h = nn::classify(w, ncfg, x_in, nn::DecodeRule::hamming);
                rules_ok = rules_ok && a == b && b == h;
            }
        }
        report("nn/convolutional/hamming agree on all inputs (N=" + std::to_string(n) + ")",
               rules_ok);
        report("Q = N - 2D identity (N=" + std::to_string(n) + ")", identity_ok);

        std::uint64_t total = 0;
        std::uint64_t expected = 1;
        for (int m = 0; m <= n; ++m)
            total += (std::uint64_t{1} << m) * codec::binomial(n, m);
        for (int i = 0; i < n; ++i) expected *= 3;
        report("complete-set count sums to 3^N (N=" + std::to_string(n) + ")",
               total == expected);

        perf::ClassifyConfig cfg0{0, 1.0, nn::DecodeRule::nn, std::nullopt};
        auto chance = perf::roc(x0, cfg0, n, perf::Method::analytic);
        bool diag_ok = true;
        for (const auto& pt : chance.points) diag_ok = diag_ok && pt.f_rat == pt.p_rat;
        report("ROC at m = N lies on the chance diagonal (N=" + std::to_string(n) + ")",
               diag_ok);
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

std::string default_catalog(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SPINMEM_CATALOG")) return env;
    return "spinmem-catalog.txt";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary spin-pattern detection and assembly-memory toolkit"};
    app.require_subcommand(1);

    // shared option storage
    int n = 9, theta = 0, max_cycles = 8, random_kill = 0, random_cut = 0;
    double eta = 1.0, t0 = 1.0, freq = 1.0;
    long long trials = 10000, runs = 1000;
    std::uint64_t seed = 1;
    std::string method = "analytic", out_path, format = "csv", x0_text, damage_text;
    std::string q_text = "1", catalog_path, trace_id;
    std::vector<int> thetas, ms, verify_ns;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Output file (default stdout)");
        cmd->add_option("--format", format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    auto* curve = app.add_subcommand("curve", "P_theta(d) for m = 0..N");
    curve->add_option("--n", n, "Pattern dimension N")->capture_default_str();
    curve->add_option("--theta", thetas, "Threshold(s); default 0");
    curve->add_option("--method", method, "analytic | exact | mc")->capture_default_str();
    curve->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
    curve->add_option("--seed", seed, "Master seed")->capture_default_str();
    curve->add_option("--x0", x0_text, "Reference pattern, e.g. '+-++-++--' (default all +)");
    curve->add_option("--damage", damage_text, "Structural damage, e.g. 'kill:3;cut:(1,2)'");
    add_output(curve);

    auto* roc_cmd = app.add_subcommand("roc", "ROC curves, one per m");
    roc_cmd->add_option("--n", n, "Pattern dimension N")->capture_default_str();
    roc_cmd->add_option("--m", ms, "Damage count(s); default 0");
    roc_cmd->add_option("--method", method, "analytic | exact | mc")->capture_default_str();
    roc_cmd->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
    roc_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    roc_cmd->add_option("--x0", x0_text, "Reference pattern (default all +)");
    add_output(roc_cmd);

    auto* damage = app.add_subcommand("damage", "Intact vs damaged network comparison");
    damage->add_option("--n", n, "Pattern dimension N")->capture_default_str();
    damage->add_option("--theta", theta, "Threshold")->capture_default_str();
    damage->add_option("--damage", damage_text, "Explicit damage spec");
    damage->add_option("--random-kill", random_kill, "Draw this many killed neurons");
    damage->add_option("--random-cut", random_cut, "Draw this many disrupted links");
    damage->add_option("--seed", seed, "Master seed")->capture_default_str();
    damage->add_option("--x0", x0_text, "Reference pattern (default all +)");
    add_output(damage);

    auto* amu_cmd = app.add_subcommand("amu", "Retrieval statistics for one memory unit");
    amu_cmd->add_option("--n", n, "Pattern dimension N")->capture_default_str();
    amu_cmd->add_option("--theta", theta, "Threshold")->capture_default_str();
    amu_cmd->add_option("--eta", eta, "Learning parameter")->capture_default_str();
    amu_cmd->add_option("--q", q_text, "Cue index, e.g. '1/3' or 0")->capture_default_str();
    amu_cmd->add_option("--t0", t0, "Decay period, seconds")->capture_default_str();
    amu_cmd->add_option("--freq", freq, "Attempt frequency, 1/s")->capture_default_str();
    amu_cmd->add_option("--max-cycles", max_cycles, "External cycle cap")->capture_default_str();
    amu_cmd->add_option("--runs", runs, "Independent retrieval runs")->capture_default_str();
    amu_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    amu_cmd->add_option("--x0", x0_text, "Reference pattern (default all +)");
    add_output(amu_cmd);

    auto* verify = app.add_subcommand("verify", "Cross-verification suite");
    verify->add_option("--n", verify_ns, "Dimension(s) to verify; default 9");

    auto* store = app.add_subcommand("store", "Store a trace in the catalog");
    store->add_option("--catalog", catalog_path, "Catalog file ($SPINMEM_CATALOG)");
    store->add_option("--id", trace_id, "Trace id")->required();
    store->add_option("--x0", x0_text, "Reference pattern")->required();
    store->add_option("--eta", eta, "Learning parameter")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Check whether a trace exists");
    validate->add_option("--catalog", catalog_path, "Catalog file ($SPINMEM_CATALOG)");
    validate->add_option("--id", trace_id, "Trace id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputSink sink{out_path, format};
        if (curve->parsed())
            return run_curve(n, thetas, method, trials, seed, x0_text, damage_text, sink);
        if (roc_cmd->parsed())
            return run_roc(n, ms, method, trials, seed, x0_text, sink);
        if (damage->parsed())
            return run_damage(n, theta, damage_text, random_kill, random_cut, seed, x0_text,
                              sink);
        if (amu_cmd->parsed())
            return run_amu(n, theta, eta, q_text, t0, freq, max_cycles, runs, seed, x0_text,
                          sink);
        if (verify->parsed()) return run_verify(verify_ns);
        if (store->parsed()) {
            auto cat = amu::TraceCatalog::open(default_catalog(catalog_path));
            cat.store(trace_id, codec::SpinPattern::parse(x0_text), eta);
            std::cout << "stored " << trace_id << " in " << cat.path() << "\n";
            return kExitOk;
        }
        if (validate->parsed()) {
            auto cat = amu::TraceCatalog::open(default_catalog(catalog_path));
            std::cout << (cat.validate(trace_id) ? "true" : "false") << "\n";
            return kExitOk;
        }
    } catch (const codec::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
