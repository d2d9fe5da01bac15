#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ocl8/grid.hpp"
#include "ocl8/report.hpp"

namespace ocl8 {

/// Per-scenario knobs. Unset optionals fall back to the scenario defaults.
struct ScenarioConfig {
    std::optional<int> d;
    std::optional<int> n;
    std::optional<double> len;
    std::optional<double> p;
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 0;
    std::vector<double> t_ladder;
    /// Threshold overrides keyed by check name.
    std::map<std::string, double> tol;
};

/// Mean-zero random field with independent Gaussian spectral coefficients on
/// the modes 0 < |k|_inf <= band, normalized to unit L^2 norm.
Field random_band_limited(const GridSpec& spec, FieldKind kind, int band, std::uint64_t seed);

Report run_algebra_suite(const ScenarioConfig& cfg = {});
Report run_splitting(const ScenarioConfig& cfg = {});
Report run_counterexample(const ScenarioConfig& cfg = {});
Report run_schwartz_riesz(const ScenarioConfig& cfg = {});
Report run_subharmonicity(const ScenarioConfig& cfg = {});
Report run_stein_weiss(const ScenarioConfig& cfg = {});
Report run_boundary_convergence(const ScenarioConfig& cfg = {});
Report run_cauchy_reproduction(const ScenarioConfig& cfg = {});

/// All public scenario names, in run order.
std::vector<std::string> scenario_names();

/// Run one scenario by name. Also accepts the hidden "fixture-fail" scenario
/// whose single check always fails (exit-path and golden-file fixture).
Report run_scenario(const std::string& name, const ScenarioConfig& cfg);

Suite run_scenarios(const std::vector<std::string>& names, const ScenarioConfig& cfg);

}  // namespace ocl8
