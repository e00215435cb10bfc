#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace propb::cli {

enum class Command { Gen, Count, Bound, Witness, Solve, VerifySmall };
enum class OutputFormat { Edges, Dimacs };

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kSize = 3,
    kAssertion = 4,
};

struct RunConfig {
    Command command = Command::Count;
    std::uint64_t k = 0;
    std::optional<std::uint64_t> l; // choose_l(k) when absent
    OutputFormat format = OutputFormat::Edges;
    bool dedup = false;
    std::uint64_t edge_cap = 0; // 0 = environment or default
    std::optional<std::uint64_t> seed;
    std::optional<std::string> coloring_path;
    std::optional<std::string> cnf_path;
    std::uint64_t node_budget = 50'000'000;
    unsigned threads = 1;
};

/// Environment variable holding the default edge cap.
inline constexpr const char* kEdgeCapEnv = "PROPB_EDGE_CAP";

std::uint64_t effective_edge_cap(const RunConfig& cfg);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace propb::cli
