#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibdual/bigint.hpp"
#include "fibdual/dual.hpp"
#include "fibdual/dual_quaternion.hpp"
#include "fibdual/errors.hpp"
#include "fibdual/quaternion.hpp"

namespace fibdual {

// Which index variables an identity takes: n alone, a pair (n, m), or an
// index n with a summation bound p.
enum class Arity { OneIndex, TwoIndex, Parametrized };

struct IndexTuple {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

// Common value space of an identity's two sides. Integer identities evaluate
// to BigInt, dual-number ones to Dual, quaternion ones to Quaternion, and the
// dual-quaternion theorems to DualQuaternion.
using Value =
    std::variant<BigInt, Dual<BigInt>, Quaternion<BigInt>, DualQuaternion<BigInt>>;

Value value_sub(const Value& a, const Value& b);
std::string value_str(const Value& v);

// Inclusive index range.
struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct IndexRanges {
  IndexRange n;
  std::optional<IndexRange> m;
  std::optional<IndexRange> p;

  friend bool operator==(const IndexRanges&, const IndexRanges&) = default;
};

// Per-variable lower bounds; a missing bound means the identity is declared
// for every integer value of that variable.
struct IdentityDomain {
  std::optional<std::int64_t> n_min;
  std::optional<std::int64_t> m_min;
  std::optional<std::int64_t> p_min;
};

using Evaluator = std::function<Value(const IndexTuple&)>;

// One executable identity: both sides evaluate, with definition-level
// arithmetic only, into the same value space. For dual-quaternion identities
// a second pair of evaluators computes the same sides through the
// quaternion-over-dual-numbers representation; the checker compares the two
// paths to guard itself.
struct IdentityRecord {
  std::string id;
  std::string description;
  Arity arity = Arity::OneIndex;
  IdentityDomain domain;
  std::string paper_ref;
  std::string note;  // reading/interpretation remarks, shown in text reports
  Evaluator lhs;
  Evaluator rhs;
  Evaluator lhs_alt;  // transported representation; empty for scalar spaces
  Evaluator rhs_alt;
};

enum class CheckStatus { Verified, Refuted };

std::string_view to_string(CheckStatus status);

struct Counterexample {
  IndexTuple at;
  Value lhs;
  Value rhs;
  Value delta;  // lhs - rhs

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
  std::string id;
  IndexRanges range;  // the ranges actually scanned
  CheckStatus status = CheckStatus::Verified;
  std::optional<Counterexample> counterexample;  // smallest failing tuple
  std::uint64_t instances_checked = 0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct Evaluation {
  Value lhs;
  Value rhs;
  bool equal = false;
};

enum class Execution { Serial, Parallel };

struct CheckOptions {
  Execution execution = Execution::Serial;
  // Re-evaluate dual-quaternion identities through the transported
  // representation at every index and require agreement.
  bool cross_check = true;
};

// The full identity catalog, in canonical report order.
const std::vector<IdentityRecord>& catalog();

// Null when the id is unknown.
const IdentityRecord* find_identity(std::string_view id);

// n in [domain start, 32] (start -32 when the domain is unbounded);
// m, p in [0, 10].
IndexRanges default_ranges(const IdentityRecord& rec);

// Evaluates both sides at one index tuple. Throws DomainViolation when the
// tuple violates the identity's domain.
Evaluation evaluate(const IdentityRecord& rec, const IndexTuple& idx);
Evaluation evaluate(std::string_view id, const IndexTuple& idx);

// Scans every tuple in the ranges (intersected with the identity's domain)
// in lexicographic order, possibly in parallel; the report is identical
// either way. Throws EmptyRange when the intersection is empty.
CheckReport check_range(const IdentityRecord& rec, IndexRanges ranges,
                        const CheckOptions& options = {});
CheckReport check_range(std::string_view id, IndexRanges ranges,
                        const CheckOptions& options = {});

}  // namespace fibdual
