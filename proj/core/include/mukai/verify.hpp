#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mukai {

inline constexpr uint64_t kDefaultSeed = 17;

struct VerifyOptions {
  std::string suite = "all";
  uint64_t seed = kDefaultSeed;
  /// Test-only hook: perturbs every corpus Todd class so that the suites
  /// sensitive to td fail with a witness. Never exposed by the CLI.
  bool corrupt_todd = false;
};

struct CheckRecord {
  std::string name;
  std::string statement;
  bool pass = false;
  long instances = 0;
  std::string witness;  // JSON text, empty unless the check failed
  double millis = 0.0;
};

struct VerificationReport {
  std::string engine_version;
  uint64_t seed = 0;
  std::string suite;
  std::vector<CheckRecord> checks;  // sorted by name, names unique

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// The seven suite names plus "all".
const std::vector<std::string>& verification_suites();
bool is_valid_suite(const std::string& name);

/// Runs the requested suites over the built-in corpus and kernel catalog.
VerificationReport run_verification(const VerifyOptions& opts);

/// Canonical JSON bytes: keys sorted, checks ordered by name, no timing
/// data, rationals as "p/q" strings. Byte-identical for a fixed
/// (seed, suite, version).
std::string report_json(const VerificationReport& report);

}  // namespace mukai
