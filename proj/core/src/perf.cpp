#include "spinmem/perf.hpp"

#include <cmath>

#include "spinmem/mask.hpp"

namespace spinmem::perf {

int theta_grid_min(int n) { return n % 2 ? -(n + 1) : -(n + 2); }
int theta_grid_max(int n) { return n % 2 ? n - 1 : n - 2; }

std::vector<int> theta_grid(int n) {
    if (n < 1) throw std::invalid_argument("theta_grid: N must be >= 1");
    std::vector<int> grid;
    for (int t = theta_grid_min(n); t <= theta_grid_max(n); t += 2) grid.push_back(t);
    return grid;
}

Method parse_method(const std::string& name) {
    if (name == "analytic") return Method::analytic;
    if (name == "exact") return Method::exact;
    if (name == "mc" || name == "monte-carlo") return Method::monte_carlo;
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::analytic: return "analytic";
        case Method::exact: return "exact";
        case Method::monte_carlo: return "monte-carlo";
    }
    throw std::logic_error("method_name: bad enum");
}

Rational p_analytic(int m, int n, int theta) {
    if (n < 1) throw std::invalid_argument("p_analytic: N must be >= 1");
    if (m < 0 || m > n) throw std::invalid_argument("p_analytic: m must be in 0..N");
    if (theta < theta_grid_min(n) || theta > theta_grid_max(n))
        throw std::invalid_argument("p_analytic: theta outside the canonical grid range");

    // Success means fewer than (N - theta)/2 of the m randomized components
    // flipped; kmax0 is the largest admissible flip count.
    const int r = n - theta;
    const int kmax0 = (r % 2 == 0) ? r / 2 - 1 : (r - 1) / 2;
    const int kmax = std::min(m, kmax0);

    std::int64_t count = 0;
    for (int k = 0; k <= kmax; ++k)
        count += static_cast<std::int64_t>(codec::binomial(m, k));
    return {count, static_cast<std::int64_t>(1) << m};
}

namespace {

nn::SynapseMatrix build_matrix(const codec::SpinPattern& x0, const ClassifyConfig& cfg) {
    auto w = nn::SynapseMatrix::learn(x0, cfg.eta);
    if (cfg.damage && !cfg.damage->empty()) w = w.damaged(*cfg.damage);
    return w;
}

}  // namespace

Rational p_exact(const codec::SpinPattern& x0, const ClassifyConfig& cfg, int m) {
    const auto w = build_matrix(x0, cfg);
    const nn::NeuronConfig ncfg{static_cast<double>(cfg.theta), 0.0};
    std::int64_t hits = 0;
    std::int64_t total = 0;
    codec::enumerate_damaged(x0, static_cast<std::size_t>(m),
                             [&](const codec::SpinPattern& x_in) {
                                 ++total;
                                 if (nn::classify(w, ncfg, x_in, cfg.rule)) ++hits;
                             });
    return {hits, total};
}

MonteCarloEstimate p_monte_carlo(const codec::SpinPattern& x0, const ClassifyConfig& cfg,
                                 int m, long long trials, NoiseSource noise) {
    if (trials < 1) throw std::invalid_argument("p_monte_carlo: trials must be >= 1");
    if (m < 0 || static_cast<std::size_t>(m) > x0.size())
        throw std::invalid_argument("p_monte_carlo: m must be in 0..N");
    const auto w = build_matrix(x0, cfg);
    const nn::NeuronConfig ncfg{static_cast<double>(cfg.theta), 0.0};
    auto masks = noise.substream(1);
    auto signs = noise.substream(2);
    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        const auto mask = codec::sample_mask(x0.size(), static_cast<std::size_t>(m), masks);
        const auto x_in = codec::apply_damage(x0, mask, signs);
        if (nn::classify(w, ncfg, x_in, cfg.rule)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials)), trials};
}

PerformanceCurve performance_curve(const codec::SpinPattern& x0, const ClassifyConfig& cfg,
                                   Method method, long long trials, std::uint64_t seed) {
    const int n = static_cast<int>(x0.size());
    if (method == Method::analytic && cfg.damage && !cfg.damage->empty())
        throw std::invalid_argument(
            "performance_curve: no analytic formula for damaged networks; use exact or mc");

    PerformanceCurve curve{n, cfg.theta, method, 0, 0, {}};
    for (int m = 0; m <= n; ++m) {
        CurvePoint pt;
        pt.m = m;
        pt.d = Rational{m, n};
        pt.q = Rational{1} - pt.d;
        switch (method) {
            case Method::analytic: {
                pt.p_rat = p_analytic(m, n, cfg.theta);
                pt.p = pt.p_rat.value();
                pt.has_exact = true;
                break;
            }
            case Method::exact: {
                pt.p_rat = p_exact(x0, cfg, m);
                pt.p = pt.p_rat.value();
                pt.has_exact = true;
                break;
            }
            case Method::monte_carlo: {
                // disjoint substream per m so points are independent
                auto est = p_monte_carlo(x0, cfg, m, trials,
                                         NoiseSource(seed).substream(100 + m));
                pt.p = est.p;
                pt.std_err = est.std_err;
                curve.trials = trials;
                curve.seed = seed;
                break;
            }
        }
        curve.points.push_back(pt);
    }
    return curve;
}

RocCurve roc(const codec::SpinPattern& x0, const ClassifyConfig& cfg, int m,
             Method method, long long trials, std::uint64_t seed) {
    const int n = static_cast<int>(x0.size());
    if (m < 0 || m > n) throw std::invalid_argument("roc: m must be in 0..N");

    RocCurve curve{n, m, method, method == Method::monte_carlo ? trials : 0,
                   method == Method::monte_carlo ? seed : 0, {}};
    auto grid = theta_grid(n);
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        const int theta = *it;
        ClassifyConfig point_cfg = cfg;
        point_cfg.theta = theta;
        RocPoint pt;
        pt.theta = theta;
        switch (method) {
            case Method::analytic:
                pt.f_rat = p_analytic(n, n, theta);
                pt.p_rat = p_analytic(m, n, theta);
                pt.has_exact = true;
                break;
            case Method::exact:
                pt.f_rat = p_exact(x0, point_cfg, n);
                pt.p_rat = p_exact(x0, point_cfg, m);
                pt.has_exact = true;
                break;
            case Method::monte_carlo: {
                auto base = NoiseSource(seed).substream(200 + static_cast<std::uint64_t>(
                                                                  theta - theta_grid_min(n)));
                pt.f = p_monte_carlo(x0, point_cfg, n, trials, base.substream(0)).p;
                pt.p = p_monte_carlo(x0, point_cfg, m, trials, base.substream(1)).p;
                break;
            }
        }
        if (pt.has_exact) {
            pt.f = pt.f_rat.value();
            pt.p = pt.p_rat.value();
        }
        curve.points.push_back(pt);
    }
    return curve;
}

MemoryPerformanceSummary summarize(const codec::SpinPattern& x0, const ClassifyConfig& cfg,
                                   const std::vector<Rational>& cues, Method method,
                                   long long trials, std::uint64_t seed) {
    const int n = static_cast<int>(x0.size());
    auto curve = performance_curve(x0, cfg, method, trials, seed);

    MemoryPerformanceSummary s;
    s.has_exact = method != Method::monte_carlo;
    s.alpha = curve.points[n].p;           // q = 0, pure noise
    s.recognition = curve.points[0].p;     // q = 1, undamaged cue
    if (s.has_exact) {
        s.alpha_rat = curve.points[n].p_rat;
        s.recognition_rat = curve.points[0].p_rat;
    }
    for (const auto& q : cues) {
        const Rational d = Rational{1} - q;
        const Rational m_exact = d * Rational{n};
        if (m_exact.den() != 1 || m_exact.num() < 0 || m_exact.num() > n)
            throw std::invalid_argument("summarize: q must be a multiple of 1/N in [0,1]");
        const int m = static_cast<int>(m_exact.num());
        CuedEntry e;
        e.q = q;
        e.m = m;
        e.p = curve.points[m].p;
        e.beta = 1.0 - e.p;
        e.has_exact = s.has_exact;
        if (e.has_exact) e.p_rat = curve.points[m].p_rat;
        s.cued.push_back(e);
    }
    return s;
}

}  // namespace spinmem::perf
