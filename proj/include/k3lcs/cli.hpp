#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "k3lcs/lattice.hpp"

namespace k3lcs::cli {

enum class Format { Json, Text };

struct Options {
    std::string command;
    FrameKind frame = FrameKind::E8E8;
    Format format = Format::Json;
    int box_bound = 2;
    int c_norm_bound = 4;
    std::uint64_t seed = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

bool is_command(const std::string& name);

/// Processes one JSON record per input line and writes one output line per record, in input order.
/// Failed records produce an {"error": ...} line. Returns 2 if any record failed validation, else 1 if
/// any failed at runtime, else 0. `selftest` ignores the input.
int run(const Options& options, std::istream& in, std::ostream& out);

}  // namespace k3lcs::cli
