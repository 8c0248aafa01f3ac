#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace shfc {

struct VerificationInstance {
  nlohmann::json inputs;
  std::string expected;
  nlohmann::json observed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationInstance> instances;

  bool all_pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
  void append(VerificationReport other);
};

/// Default characteristic of every suite except key-theorem.
inline constexpr std::uint32_t kDefaultSuiteCharacteristic = 32003;

/// lambda(E x F) <= lambda(E) + lambda(F) on seeded locally free pairs.
VerificationReport verify_subadditivity(int n, int num_pairs, std::uint64_t seed,
                                        std::uint32_t characteristic = kDefaultSuiteCharacteristic);
/// reg(E x F) <= reg E + reg F, and h^i(E x F) = 0 for i > lambda(E(-reg F)),
/// on the same pairs as verify_subadditivity.
VerificationReport verify_regularity_tensor(int n, int num_pairs, std::uint64_t seed,
                                            std::uint32_t characteristic = kDefaultSuiteCharacteristic);
/// h^i(E^(p^N) x F) = 0 for i > lambda(E(-n)), with N least such that
/// p^N >= max(reg F, 1). Pairs with p^N above the cap (9 on P^2, 25 on P^1)
/// are redrawn.
VerificationReport verify_key_theorem(std::uint32_t p, int n, int num_pairs, std::uint64_t seed);
/// h^i(Omega^j(d)) = 0 for i > 0, 0 <= j <= n, 1 <= d <= n + 3.
VerificationReport verify_bott_vanishing(int n, std::uint32_t characteristic = kDefaultSuiteCharacteristic);
/// Beilinson rows above lambda(E) vanish and the Euler identity holds for
/// d in [-2, 2].
VerificationReport verify_beilinson(int n, int count, std::uint64_t seed,
                                    std::uint32_t characteristic = kDefaultSuiteCharacteristic);
/// Engine cohomology of random sums of O(a), |a| <= 4, against the closed
/// form for all i and |d| <= n + 4.
VerificationReport verify_oracle(int n, int count, std::uint64_t seed,
                                 std::uint32_t characteristic = kDefaultSuiteCharacteristic);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> characteristic;
  std::optional<int> dim;
  std::optional<int> count;
};

std::vector<std::string> suite_names();
/// Runs a suite by CLI name over its default dimensions and characteristics
/// unless overridden. Throws DomainError for unknown names or bad options.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Worker count: SHFC_THREADS if set to a positive integer, else the
/// hardware concurrency.
unsigned worker_count();
/// Calls fn(0..count-1) on up to worker_count() threads. Exceptions are
/// rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace shfc
