#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chromalab::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // violations found, or embedding not found
inline constexpr int kExitUsage = 2;     // bad flags or unreadable input
inline constexpr int kExitBudget = 3;    // chromatic search ran out of nodes
inline constexpr int kExitInternal = 4;

struct BoundsRow {
    double d = 0.0;
    std::optional<std::int64_t> lower;
    std::string lower_kind;
    std::optional<std::int64_t> upper;
    std::string upper_kind;
    std::string note;
};

enum class BoundsFamily { EuclidInterval, Hyperbolic };

/// Rows for d = d_min, d_min + step, ... up to d_max. Throws
/// std::invalid_argument on an empty or malformed range.
std::vector<BoundsRow> bounds_table(BoundsFamily family, double d_min, double d_max, double step);

/// CSV with columns d,lower,lower_kind,upper,upper_kind,note.
void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows);

/// Static line plot of lower and upper against d.
void write_bounds_svg(std::ostream& out, BoundsFamily family, const std::vector<BoundsRow>& rows);

/// Entry point of the command-line tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chromalab::cli
