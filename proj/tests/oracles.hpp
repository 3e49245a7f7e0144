#pragma once

// Independent reference implementations used only by tests. They stay on the
// plain two-term recurrence (forward above the seeds, backward below) so they
// share no code path with the fast-doubling implementation they check.

#include <cstdint>
#include <map>

#include "fibdual/bigint.hpp"
#include "fibdual/sequences.hpp"

namespace fibdual::oracle {

// S(lo..hi) for the selected sequence, keyed by index.
inline std::map<std::int64_t, BigInt> naive_table(SeqKind kind, std::int64_t lo,
                                                  std::int64_t hi) {
  std::map<std::int64_t, BigInt> table;
  table[0] = kind == SeqKind::Fibonacci ? BigInt(0) : BigInt(2);
  table[1] = BigInt(1);
  for (std::int64_t n = 2; n <= hi; ++n) table[n] = table[n - 1] + table[n - 2];
  for (std::int64_t n = -1; n >= lo; --n) table[n] = table[n + 2] - table[n + 1];
  return table;
}

}  // namespace fibdual::oracle
