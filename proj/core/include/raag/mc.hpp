#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace raag {

struct TrialReport {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double freq_connected = 0.0;
  double freq_no_sil = 0.0;
  double freq_no_equiv_pair = 0.0;
  double freq_single_equiv_pair = 0.0;
  std::size_t out_yes = 0;
  std::size_t out_no = 0;
  std::size_t out_unknown = 0;
  double mean_order_pairs = 0.0;  // ordered pairs v <= w per graph
};

/// Seed of trial `trial` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// Worker count: RAAG_OUT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t default_thread_count();

/// `threads` = 0 uses default_thread_count(). Result does not depend on it.
TrialReport run_trials(std::size_t n, double p, std::size_t samples, std::uint64_t seed, std::size_t threads = 0);

/// Reports for every (n, p), n-major.
std::vector<TrialReport> sweep(const std::vector<std::size_t>& ns, const std::vector<double>& ps, std::size_t samples,
                               std::uint64_t seed, std::size_t threads = 0);

std::string csv_header();
std::string csv_row(const TrialReport& r);

}  // namespace raag
