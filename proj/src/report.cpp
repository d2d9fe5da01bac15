#include "ocl8/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ocl8 {

bool Report::all_pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(const std::string& name, double measured, double threshold) {
    Check c;
    c.name = name;
    c.measured = measured;
    c.threshold = threshold;
    c.pass = measured <= threshold;
    checks.push_back(c);
}

void Report::add_exact(const std::string& name, bool ok) {
    add(name, ok ? 0.0 : 1.0, 0.0);
}

bool Suite::all_pass() const {
    for (const Report& r : reports)
        if (!r.all_pass()) return false;
    return true;
}

std::string to_json(const Suite& s, bool mask_timing) {
    nlohmann::ordered_json j;
    j["suite"] = s.name;
    j["version"] = s.version;
    j["scenarios"] = nlohmann::ordered_json::array();
    for (const Report& r : s.reports) {
        nlohmann::ordered_json jr;
        jr["name"] = r.scenario;
        jr["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) jr["params"][k] = v;
        jr["checks"] = nlohmann::ordered_json::array();
        for (const Check& c : r.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["measured"] = c.measured;
            jc["threshold"] = c.threshold;
            jc["pass"] = c.pass;
            jc["seconds"] = mask_timing ? 0.0 : c.seconds;
            jr["checks"].push_back(jc);
        }
        j["scenarios"].push_back(jr);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const Suite& s) {
    std::ostringstream os;
    os.precision(17);
    os << "scenario,check,measured,threshold,pass,seconds\n";
    for (const Report& r : s.reports)
        for (const Check& c : r.checks)
            os << r.scenario << ',' << c.name << ',' << c.measured << ',' << c.threshold << ','
               << (c.pass ? 1 : 0) << ',' << c.seconds << '\n';
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << content;
        if (!os) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for " + path);
}

Stopwatch::Stopwatch() {
    start_ = std::chrono::duration<double>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
}

double Stopwatch::seconds() const {
    double now = std::chrono::duration<double>(
                     std::chrono::steady_clock::now().time_since_epoch())
                     .count();
    return now - start_;
}

}  // namespace ocl8
