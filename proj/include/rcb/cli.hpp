#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rcb::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, invalid_input = 2, resource_cap = 3 };

struct CommandConfig {
    std::string command;  // blocks, invariant, same-block, tableaux, convert, verify
    std::optional<int> m;
    int d = 1;
    std::optional<int> n;
    std::optional<std::string> kappa;
    std::vector<std::string> c;
    bool generic = false;
    std::optional<int> zeta_order;
    std::optional<std::string> lambda;
    std::optional<std::string> mu;
    std::optional<std::string> suite;
    std::optional<int> r;
    std::optional<int> k;
    bool json = false;
    int threads = 0;
    std::optional<std::string> out_path;
};

/// Validates and executes one command. Results go to `out` (or the --out
/// file), diagnostics to `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11, then calls run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcb::cli
