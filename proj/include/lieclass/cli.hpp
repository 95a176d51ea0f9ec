#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieclass/errors.hpp"
#include "lieclass/report.hpp"

namespace lieclass {

struct RunConfig {
    std::string input_path;
    std::string output_path; // empty = stdout
    std::string format = "json";
    bool verify = false;
    bool normalize_lambda = false;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    std::vector<double> epsilons = {0.05, -0.05, 0.1, -0.1};
    double flow_h = 1e-3; // RK4 step for verification trajectories on [0, 1]
};

/// One system document: {"A": 2x2, "B": 2x2, "f"?: 2-vector, "d"?: int}.
/// Entries are rational strings "p/q" or {"rat","ext","d"} objects. Throws
/// MalformedInput / ConflictingDiscriminant.
SystemSpec parse_input(const ojson& doc);

/// Full pipeline: homogenize -> canonicalize -> classify -> pull back
/// generators -> verify (symbolic always; numeric flows when cfg.verify).
ClassificationReport run_report(const SystemSpec& spec, const RunConfig& cfg);

/// File/batch driver used by the executable; returns the process exit code
/// (0 = classified and all requested verifications passed).
int run_main(const RunConfig& cfg);

/// Exit code for an error kind; verification failures return 11.
int exit_code_for(ErrorKind kind);
constexpr int kExitVerificationFailed = 11;

} // namespace lieclass
