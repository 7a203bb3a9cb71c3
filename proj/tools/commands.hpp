#pragma once

#include "cli_io.hpp"

#include <optional>
#include <string>

namespace barker::cli {

// Each command returns its exit code: 0 success/true, 1 false/invalid.
// Usage problems are thrown and mapped to 2 by main.

int cmd_autocorr(RunContext& ctx, const std::string& input);
int cmd_check(RunContext& ctx, const std::string& input);
int cmd_canon(RunContext& ctx, const std::string& input);
int cmd_power_sums(RunContext& ctx, const std::string& input, std::optional<int> count);

struct SearchArgs {
    std::string mode = "auto";  // auto, exhaustive, pruned
    std::string rules = "all";
    bool raw = false;
    std::optional<int> ceiling;
    int shard_width = -1;
};

int cmd_search(RunContext& ctx, int n, const SearchArgs& args);
int cmd_scan(RunContext& ctx, int lo, int hi, const SearchArgs& args);
int cmd_psl(RunContext& ctx, int n, std::optional<int> ceiling);

struct CertificateArgs {
    std::optional<long long> n;
    std::optional<long long> hi;
    std::string verify_path;
    std::string dir;
    int indent = 2;
};

int cmd_certificate(RunContext& ctx, const CertificateArgs& args);

}  // namespace barker::cli
