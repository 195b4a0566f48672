#pragma once

#include <cstdint>
#include <iosfwd>

// Runs the acceptance criteria. Criterion lines go to `out` without timings so the
// report is reproducible; timings go to `timing`. Returns the number of failures.
int run_selftest(std::uint64_t seed, bool json, std::ostream& out, std::ostream& timing);
