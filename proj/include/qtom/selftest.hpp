#pragma once

#include <filesystem>
#include <iosfwd>

namespace qtom {

/// Runs every acceptance criterion, printing one pass/fail line per
/// criterion. Returns the number of failed criteria.
int run_acceptance(std::ostream& os);

/// Writes the deterministic artifact set (state, char, Wigner, tomogram,
/// reconstruction) used by the byte-stability check.
void write_selftest_artifacts(const std::filesystem::path& dir);

}  // namespace qtom
