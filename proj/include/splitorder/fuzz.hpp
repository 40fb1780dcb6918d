#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitorder/exponent_matrix.hpp"
#include "splitorder/random.hpp"

namespace splitorder {

struct FuzzConfig {
  std::size_t min_n = 2;
  std::size_t max_n = 4;
  Exponent min_entry = -3;
  Exponent max_entry = 5;
  std::size_t trials = 10'000;
  std::uint64_t seed = 0x5eed;
  unsigned long prime = 2;
  std::size_t closure_trials = 16;  // sharp products per order in the ring-closure check

  /// Throws Error(Parse) when a field is out of range.
  void validate() const;
};

struct FuzzFailure {
  std::string check;
  std::size_t trial;
  std::string detail;
  std::optional<ExponentMatrix> counterexample;  // after shrinking, for checks driven by one matrix
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::map<std::string, std::size_t> checks_run;
  std::vector<FuzzFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Random exponent matrix: raw entries, the hull of raw entries, or an
/// intersection of random vertices (mode chosen by `kind` mod 3).
ExponentMatrix sample_exponent_matrix(std::size_t n, Exponent lo, Exponent hi, Rng& rng, std::size_t kind);

/// Runs every module invariant on `config.trials` random inputs plus the
/// exhaustive n = 2 sweep. Trial t draws from Rng(seed).derive(t), so any
/// failure replays from (seed, t) alone and the result does not depend on
/// evaluation order.
FuzzSummary run_fuzz(const FuzzConfig& config);

/// Greedy shrink: moves entries one step towards zero while `fails` keeps
/// returning true.
template <typename Pred>
ExponentMatrix shrink_counterexample(ExponentMatrix nu, Pred fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      for (std::size_t j = 0; j < nu.size(); ++j) {
        if (i == j || nu(i, j) == 0) continue;
        auto rows = nu.rows();
        rows[i][j] += nu(i, j) > 0 ? -1 : 1;
        ExponentMatrix candidate(rows);
        if (fails(candidate)) {
          nu = std::move(candidate);
          progress = true;
        }
      }
    }
  }
  return nu;
}

}  // namespace splitorder
