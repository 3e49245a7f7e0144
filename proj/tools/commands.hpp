#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fibdual::cli {

// Exit codes shared by all subcommands: 0 success, 1 usage error,
// 2 expectation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitExpectation = 2;

struct TableArgs {
  std::string kind = "fib";        // fib | lucas
  std::string object = "number";   // number | dual | quat | dualquat
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::string format = "csv";      // csv | json
};

struct CheckArgs {
  std::string identity = "all";    // catalog id or "all"
  std::optional<std::int64_t> n_from, n_to;
  std::optional<std::int64_t> m_from, m_to;
  std::optional<std::int64_t> p_from, p_to;
  std::string format = "json";     // json | text
  bool expect_verified = false;
  bool no_timestamp = false;
};

struct BinetArgs {
  std::string kind = "fib";        // fib | lucas
  std::int64_t n = 0;
  bool compare = false;
  std::string format = "text";     // text | json
};

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_binet(const BinetArgs& args, std::ostream& out, std::ostream& err);

}  // namespace fibdual::cli
