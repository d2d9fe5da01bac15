#pragma once

#include <map>
#include <string>
#include <vector>

namespace ocl8 {

/// One named check: measured value against a threshold. For exact checks the
/// measured value is the residual (0 when the identity holds) and the
/// threshold is 0.
struct Check {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct Report {
    std::string scenario;
    std::map<std::string, double> params;
    std::vector<Check> checks;

    bool all_pass() const;
    void add(const std::string& name, double measured, double threshold);
    /// For exact boolean checks: residual 0/1 against threshold 0.
    void add_exact(const std::string& name, bool ok);
};

struct Suite {
    std::string name = "ocl8";
    std::string version = "1.0";
    std::vector<Report> reports;

    bool all_pass() const;
};

/// JSON/CSV serialization. `mask_timing` replaces the seconds fields with 0
/// so identical runs are byte-identical.
std::string to_json(const Suite& s, bool mask_timing = false);
std::string to_csv(const Suite& s);

/// Write-temp-rename so output files appear atomically.
void write_file_atomic(const std::string& path, const std::string& content);

/// Wall-clock helper.
class Stopwatch {
public:
    Stopwatch();
    double seconds() const;

private:
    double start_;
};

}  // namespace ocl8
