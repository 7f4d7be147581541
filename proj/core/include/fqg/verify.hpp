#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqg/groupspec.hpp"
#include "fqg/idempotents.hpp"
#include "fqg/wedderburn.hpp"

namespace fqg {

struct VerifyOptions {
  bool include_noncentral = true;
  bool interpolation_fallback = false;
  /// Seed for the randomized associativity spot check (|G| > 32).
  uint64_t seed = 1;
  size_t associativity_samples = 2000;
};

/// One named invariant. Informational checks are reported but never fail an
/// instance.
struct Check {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

struct NonCentralStats {
  size_t pairs = 0;
  size_t formula_available = 0;
  size_t formula_ok = 0;
  size_t conditions_ok = 0;
  size_t norm_ok = 0;
  size_t interpolation_ok = 0;
  size_t maps_to_e11 = 0;
  size_t oracle_reproduces = 0;
  size_t unavailable = 0;
};

struct InstanceReport {
  GroupKind kind = GroupKind::Split;
  uint64_t n = 0;
  int64_t s = 0;
  uint64_t q = 0;
  std::string group;
  /// Set when the pipeline threw; the instance then fails.
  std::string error;
  size_t components = 0;
  size_t center_dimension = 0;
  uint64_t dimension = 0;
  NonCentralStats noncentral;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

/// Every invariant the oracle can check for one presentation. Throws only on
/// invalid input (see GroupPresentation::make).
InstanceReport verify_instance(const GroupPresentation& g, const VerifyOptions& opts = {});

struct BatteryFilter {
  std::optional<GroupKind> kind;
  uint64_t max_n = 24;
  std::vector<uint64_t> qs{3, 5, 7, 9, 11, 13};
  /// Keep only q with q % 4 == value.
  std::optional<unsigned> q_mod4;
  /// Drop the abelian presentations s = 1.
  bool nonabelian_only = false;
};

struct BatteryKey {
  GroupKind kind;
  uint64_t n;
  int64_t s;
  uint64_t q;
};

/// Every valid (kind, n, s, q) allowed by the filter, with s running over the
/// residues 1..N with s^2 = 1 mod N, in (q, kind, n, s) order.
std::vector<BatteryKey> battery_instances(const BatteryFilter& filter);

/// Runs verify_instance concurrently; results keep the order of the keys.
std::vector<InstanceReport> run_battery(const std::vector<BatteryKey>& keys, const VerifyOptions& opts,
                                        unsigned threads = 0);

/// Violations of the lifting-the-exponent identities for 2 <= a <= max_a,
/// 1 <= k <= max_k and the given primes, under their hypotheses: for odd p
/// with p | a - 1, v_p(a^k - 1) = v_p(a - 1) + v_p(k); for p = 2 and odd a,
/// v_2(a^k - 1) = v_2(a - 1) when k is odd and v_2(a^2 - 1) + v_2(k) - 1 when
/// k is even. Returns the number of cases checked and failing descriptions.
struct LteResult {
  size_t checked = 0;
  std::vector<std::string> failures;
};
LteResult lte_check(uint64_t max_a, uint64_t max_k, const std::vector<uint64_t>& primes);

}  // namespace fqg
