#pragma once

#include "superhom/replicate.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superhom::cli {

/// Bad command line, algebra name or module expression. Exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string> kCommands = {"resolve", "complexity", "ext", "support", "tilting",
                                                   "projective", "koszul-check", "cartan", "orbits", "replicate"};

struct JobSpec {
    std::string command;
    std::string algebra;
    std::string module_expr = "trivial";
    std::string target;       // ext: second argument
    int n_max = 8;            // --steps
    int d_max = 3;            // --degree
    std::string side = "both";
    std::string dims = "2|2";  // koszul-check
    int s = 4;
    std::string weights;  // cartan: "0,0|0;1,0|0"
    int window = 3;       // cartan: gl(1|1) principal block (a|-a), |a| <= window
    std::uint64_t seed = 1;
    std::string output = "table";
    std::string out_path;
    std::string only;
    bool timings = true;
};

/// Parses argv (without the program name). `--help` throws CLI::CallForHelp
/// through parse errors; use run_cli for the full exit-code mapping.
JobSpec parse_job(const std::vector<std::string>& args);
std::string help_text();

/// `trivial | kac:W | dualkac:W | simple:W | proj:W | ind:W | dual(E) | tau(E) | pi(E) | tensor(E,E)`.
SuperModule parse_module_expr(const AlgebraPtr& g, std::string_view text);
/// "2,0|-1" for gl(2|1); "3" for q(1).
std::vector<int> parse_weight(const LieSuperalgebra& g, std::string_view text);
AlgebraPtr parse_algebra(std::string_view text);

struct Report {
    Json job;
    Json result;
    Json certificates;
    bool mismatch = false;
    std::vector<std::string> failures;
    std::string table;
    Json to_json() const;
};

Report run_job(const JobSpec& spec);
std::string render(const Report& r, const JobSpec& spec);

/// Exit codes: 0 success, 1 mismatch or computation error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "(1,0|0)" -> "(1,0 | 0)".
std::string spaced_weight(std::string s);

}  // namespace superhom::cli
