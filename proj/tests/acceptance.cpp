// End-to-end acceptance gate. Runs every scenario at its default sizing,
// groups the individual checks into eleven named criteria, prints one
// pass/fail line per criterion and exits nonzero when any of them fails.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ocl8/experiments.hpp"
#include "ocl8/report.hpp"

using namespace ocl8;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::vector<std::string> failures;

    void feed(const Report& rep, const Check& c) {
        if (!c.pass) {
            pass = false;
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%s/%s measured=%.6g threshold=%.6g",
                          rep.scenario.c_str(), c.name.c_str(), c.measured, c.threshold);
            failures.push_back(buf);
        }
    }

    void feed_bool(const std::string& what, bool ok) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main() {
    std::vector<Criterion> crit(12);  // 1-based
    crit[1].label = "exact algebra and Clifford relations";
    crit[2].label = "Riesz transform identities";
    crit[3].label = "Hilbert involutions and Hardy idempotents";
    crit[4].label = "boundary-value splitting";
    crit[5].label = "component-inversion counterexample";
    crit[6].label = "Schwartz-class Riesz kernel constant";
    crit[7].label = "subharmonicity critical exponent";
    crit[8].label = "conjugate-harmonic system residuals";
    crit[9].label = "Cauchy integral reproduction";
    crit[10].label = "Hardy boundary-limit convergence";
    crit[11].label = "bitwise report reproducibility";

    ScenarioConfig cfg;
    cfg.seed = 1;

    Stopwatch total;

    Stopwatch t1;
    Report algebra = run_algebra_suite(cfg);
    for (const Check& c : algebra.checks) crit[1].feed(algebra, c);
    crit[1].feed_bool("algebra runtime under 60 s", t1.seconds() < 60.0);

    Stopwatch t2;
    Report splitting = run_splitting(cfg);
    for (const Check& c : splitting.checks) {
        if (starts_with(c.name, "riesz-"))
            crit[2].feed(splitting, c);
        else if (starts_with(c.name, "hilbert-") || starts_with(c.name, "hardy-"))
            crit[3].feed(splitting, c);
        else
            crit[4].feed(splitting, c);
    }
    crit[2].feed_bool("operator identities runtime under 300 s", t2.seconds() < 300.0);

    Report counterexample = run_counterexample(cfg);
    for (const Check& c : counterexample.checks) crit[5].feed(counterexample, c);

    Report schwartz = run_schwartz_riesz(cfg);
    for (const Check& c : schwartz.checks) crit[6].feed(schwartz, c);

    Report subharm = run_subharmonicity(cfg);
    for (const Check& c : subharm.checks) crit[7].feed(subharm, c);

    Report sw = run_stein_weiss(cfg);
    for (const Check& c : sw.checks) crit[8].feed(sw, c);

    Report cauchy = run_cauchy_reproduction(cfg);
    for (const Check& c : cauchy.checks) crit[9].feed(cauchy, c);

    Report boundary = run_boundary_convergence(cfg);
    for (const Check& c : boundary.checks) crit[10].feed(boundary, c);

    // criterion 11: two fresh runs of one scenario must serialize identically
    {
        ScenarioConfig rcfg;
        rcfg.seed = 7;
        rcfg.n = 32;
        Suite a = run_scenarios({"stein-weiss"}, rcfg);
        Suite b = run_scenarios({"stein-weiss"}, rcfg);
        crit[11].feed_bool("masked JSON byte-identical across runs",
                           to_json(a, true) == to_json(b, true));
        for (const Report& r : a.reports)
            for (const Check& c : r.checks) crit[11].feed(r, c);
    }

    bool all = true;
    for (int i = 1; i <= 11; ++i) {
        std::printf("[%s] criterion %d: %s\n", crit[i].pass ? "PASS" : "FAIL", i,
                    crit[i].label.c_str());
        for (const std::string& f : crit[i].failures) std::printf("         %s\n", f.c_str());
        all = all && crit[i].pass;
    }
    std::printf("acceptance %s in %.1f s\n", all ? "PASSED" : "FAILED", total.seconds());
    return all ? 0 : 1;
}
