#pragma once

#include <map>
#include <string>
#include <vector>

#include "blax/monodromy.hpp"

namespace blax {

// Numeric parameters for the monodromy-level checks.
struct NumericSection {
    int lattice = 2000;
    double length = 1.0;
    unsigned seed = 0;
    std::vector<double> lambda_grid = {8, 12, 16, 24};
    KSeries K;           // asymptotic boundary matrix k + f/lambda
    bool has_K = false;  // when absent, K defaults to (k from the scenario, 0)
};

// Declarative description of one verification run.  r and s are either the
// builtin "pcm" pair or explicit N^2 x N^2 matrices of expression strings in
// (lambda, mu); k is an N x N matrix of expression strings (constant for the
// boundary checks).
struct Scenario {
    LieBasisSpec algebra;
    bool builtin_pcm = false;
    SpectralTensor r, s;  // populated; for builtin these are the PCM pair
    AntiAutomorphism sigma;
    MatrixRF k;
    NumericSection numeric;
    std::vector<std::string> checks;  // requested; empty means the full chain
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

struct CheckRecord {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped" | "error"
    std::string residual;
    std::map<std::string, std::string> params;
    double millis = 0.0;
};

struct Report {
    std::vector<CheckRecord> records;

    bool all_pass() const;  // no "fail"/"error" records
    std::string text() const;
    // One JSON record per check (name, status, residual, params); timings are
    // excluded so identical scenario + seed gives byte-identical output.
    std::string machine() const;
};

// Known check names, in dependency order:
//   cybe -> constraints -> closure -> traces -> lax -> pcm-closure
//        -> charges -> crosscheck -> linear-limit
// A failed stage short-circuits the later requested stages to "skipped".
// Checks beyond cybe/constraints need the builtin pcm Lax data and report
// "error" for custom (r, s) scenarios.  Unknown names raise MalformedInput.
Report run(const Scenario& sc, std::vector<std::string> checks = {},
           int trace_order = 2);

}  // namespace blax
