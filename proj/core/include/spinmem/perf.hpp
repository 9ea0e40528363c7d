#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinmem/decode.hpp"
#include "spinmem/enumerate.hpp"
#include "spinmem/noise.hpp"
#include "spinmem/pattern.hpp"
#include "spinmem/rational.hpp"
#include "spinmem/synapse.hpp"

namespace spinmem::perf {

/// Canonical threshold grid: even integers from -(N+1) to N-1 for odd N,
/// -(N+2) to N-2 for even N. Ascending.
std::vector<int> theta_grid(int n);
int theta_grid_min(int n);
int theta_grid_max(int n);

enum class Method { analytic, exact, monte_carlo };
Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Everything needed to run one classification: threshold, learning
/// parameter, decode rule, and optional structural damage.
struct ClassifyConfig {
    int theta = 0;
    double eta = 1.0;
    nn::DecodeRule rule = nn::DecodeRule::nn;
    std::optional<nn::DamageSpec> damage;
};

/// Closed-form probability that an input with m randomized components is
/// decoded back to the reference, for an intact perfectly learned network:
/// sum_{k=0}^{kmax} C(m,k) / 2^m, where kmax caps the number of sign
/// mismatches the threshold tolerates. Exact rational. Integer theta must
/// lie within the canonical grid range; out-of-range values are rejected,
/// not clamped.
Rational p_analytic(int m, int n, int theta);

/// n_theta(d)/n(d) over the complete set of 2^m * C(N,m) damaged inputs.
/// Accepts any rule and any structural damage; subject to the enumeration
/// guard.
Rational p_exact(const codec::SpinPattern& x0, const ClassifyConfig& cfg, int m);

struct MonteCarloEstimate {
    double p;
    double std_err;  // sqrt(p(1-p)/trials)
    long long trials;
};

MonteCarloEstimate p_monte_carlo(const codec::SpinPattern& x0, const ClassifyConfig& cfg,
                                 int m, long long trials, NoiseSource noise);

struct CurvePoint {
    int m;
    Rational d;
    Rational q;
    double p;
    bool has_exact = false;
    Rational p_rat;       // valid when has_exact
    double std_err = 0.0; // nonzero only for monte-carlo
};

struct PerformanceCurve {
    int n;
    int theta;
    Method method;
    long long trials = 0;   // monte-carlo only
    std::uint64_t seed = 0; // monte-carlo only
    std::vector<CurvePoint> points;  // one per m in 0..N
};

/// P_theta(d) sampled at every m in 0..N.
PerformanceCurve performance_curve(const codec::SpinPattern& x0, const ClassifyConfig& cfg,
                                   Method method, long long trials = 0,
                                   std::uint64_t seed = 0);

struct RocPoint {
    int theta;
    double f;  // false alarm, P at m = N
    double p;  // hit, P at the curve's m
    bool has_exact = false;
    Rational f_rat;
    Rational p_rat;
};

struct RocCurve {
    int n;
    int m;
    Method method;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<RocPoint> points;  // theta descending, so F ascends
};

/// ROC curve for damage count m: each grid theta contributes the point
/// (F = P(theta, m=N), P = P(theta, m)). The m = N curve lies on P = F.
RocCurve roc(const codec::SpinPattern& x0, const ClassifyConfig& cfg, int m,
             Method method, long long trials = 0, std::uint64_t seed = 0);

struct CuedEntry {
    Rational q;
    int m;
    double p;       // cued recall probability, also test power M
    double beta;    // 1 - p, Type-2 error rate
    bool has_exact = false;
    Rational p_rat;
};

/// Hypothesis-test view: alpha is both the false-alarm probability and the
/// free-recall probability (q = 0); recognition is P at q = 1; each cued
/// entry carries beta = 1 - P and power M = P.
struct MemoryPerformanceSummary {
    double alpha;
    double recognition;
    std::vector<CuedEntry> cued;
    bool has_exact = false;
    Rational alpha_rat;
    Rational recognition_rat;
};

/// Every q must be a multiple of 1/N.
MemoryPerformanceSummary summarize(const codec::SpinPattern& x0, const ClassifyConfig& cfg,
                                   const std::vector<Rational>& cues, Method method,
                                   long long trials = 0, std::uint64_t seed = 0);

}  // namespace spinmem::perf
