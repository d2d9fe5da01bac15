#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ocl8/report.hpp"

using namespace ocl8;

TEST_CASE("check pass logic") {
    Report r;
    r.scenario = "demo";
    r.add("ok", 1e-12, 1e-10);
    r.add("edge", 1e-10, 1e-10);  // measured == threshold passes
    r.add("bad", 2e-10, 1e-10);
    CHECK(r.checks[0].pass);
    CHECK(r.checks[1].pass);
    CHECK_FALSE(r.checks[2].pass);
    CHECK_FALSE(r.all_pass());

    Report e;
    e.add_exact("yes", true);
    e.add_exact("no", false);
    CHECK(e.checks[0].pass);
    CHECK(e.checks[0].measured == 0.0);
    CHECK_FALSE(e.checks[1].pass);
    CHECK(e.checks[1].measured == 1.0);
    CHECK(e.checks[1].threshold == 0.0);

    Suite s;
    s.reports.push_back(e);
    CHECK_FALSE(s.all_pass());
    s.reports.clear();
    Report good;
    good.add("fine", 0.0, 1.0);
    s.reports.push_back(good);
    CHECK(s.all_pass());
}

TEST_CASE("json serialization is stable when timing is masked") {
    Suite s;
    Report r;
    r.scenario = "demo";
    r.params["seed"] = 7.0;
    r.params["n"] = 16.0;
    r.add("residual", 1.5e-11, 1e-10);
    r.checks.back().seconds = 0.123;
    s.reports.push_back(r);

    std::string a = to_json(s, true);
    s.reports[0].checks[0].seconds = 0.456;  // timing differs between runs
    std::string b = to_json(s, true);
    CHECK(a == b);
    std::string c = to_json(s, false);
    CHECK(a != c);

    CHECK(a.find("\"suite\"") != std::string::npos);
    CHECK(a.find("\"demo\"") != std::string::npos);
    CHECK(a.find("\"residual\"") != std::string::npos);
    CHECK(a.find("\"seconds\": 0.0") != std::string::npos);
    CHECK(a.back() == '\n');
}

TEST_CASE("csv has a header and one line per check") {
    Suite s;
    Report r;
    r.scenario = "demo";
    r.add("a", 0.0, 1.0);
    r.add("b", 2.0, 1.0);
    s.reports.push_back(r);
    std::string csv = to_csv(s);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "scenario,check,measured,threshold,pass,seconds");
    std::getline(is, line);
    CHECK(line.rfind("demo,a,", 0) == 0);
    std::getline(is, line);
    CHECK(line.rfind("demo,b,", 0) == 0);
    CHECK(line.find(",0,") != std::string::npos);  // pass flag 0 for the failure
}

TEST_CASE("atomic write leaves no temp file behind") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ocl8_report_test";
    fs::create_directories(dir);
    fs::path target = dir / "out.txt";
    write_file_atomic(target.string(), "hello\n");
    std::ifstream is(target);
    std::string got((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(got == "hello\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    fs::remove_all(dir);

    CHECK_THROWS_AS(write_file_atomic("/nonexistent-dir/x.txt", "x"), std::runtime_error);
}

TEST_CASE("stopwatch is nonnegative and monotone") {
    Stopwatch sw;
    double a = sw.seconds();
    double b = sw.seconds();
    CHECK(a >= 0.0);
    CHECK(b >= a);
}
