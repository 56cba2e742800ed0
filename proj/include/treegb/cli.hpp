// Command implementations behind the CLI binary. Each command writes its
// report to the given streams and returns a process exit status, so tests
// can drive them in-process.
#pragma once

#include <iosfwd>
#include <string>

#include "treegb/polynomial.hpp"

namespace treegb {

// Exit statuses shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     // verification mismatch / internal error
inline constexpr int kExitParse = 2;       // bad input text or bad configuration
inline constexpr int kExitIncomplete = 3;  // completion gave up below the bound

struct RunConfig {
    int m = 3;
    Parity parity = Parity::even;
    std::string preset;          // preset name, or empty
    std::string relations;       // file path or inline text, or empty
    int arity_bound = 9;
    int n_max = 9;
    std::string format = "text";  // "text" | "json"
    bool list_monomials = false;
    int jobs = 1;
    long max_additions = 10000;
    bool allow_large = false;  // lifts the arity <= 17 guard
};

int cmd_gb(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dims(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_reduce(const RunConfig& config, const std::string& poly_text,
               std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace treegb
