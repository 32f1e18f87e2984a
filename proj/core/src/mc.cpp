#include "raag/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "raag/decide.hpp"
#include "raag/errors.hpp"
#include "raag/gen.hpp"
#include "raag/order.hpp"
#include "raag/sil.hpp"

namespace raag {

namespace {

struct TrialOutcome {
  bool connected = false;
  bool no_sil = false;
  std::size_t equivalent_pairs = 0;
  Status out = Status::kUnknown;
  std::size_t order_pairs = 0;
};

TrialOutcome run_one(std::size_t n, double p, std::uint64_t seed) {
  const SimplicialGraph g = gnp({n, p, seed});
  TrialOutcome o;
  o.connected = is_connected(g);
  o.no_sil = !has_sil_pair(g);
  const auto pairs = order_pairs(g);
  o.order_pairs = pairs.size();
  for (const auto& op : pairs)
    if (op.lower < op.upper && leq(g, op.upper, op.lower)) ++o.equivalent_pairs;
  o.out = decide(g).verdict.out_status;
  return o;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return hash_combine(seed, trial); }

std::size_t default_thread_count() {
  if (const char* env = std::getenv("RAAG_OUT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

TrialReport run_trials(std::size_t n, double p, std::size_t samples, std::uint64_t seed, std::size_t threads) {
  if (samples < 1) throw InputError("run_trials needs at least one sample");
  if (threads == 0) threads = default_thread_count();
  threads = std::min(threads, samples);

  std::vector<TrialOutcome> outcomes(samples);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (std::size_t t = next++; t < samples && !failed; t = next++) {
      try {
        outcomes[t] = run_one(n, p, trial_seed(seed, t));
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  TrialReport r;
  r.n = n;
  r.p = p;
  r.samples = samples;
  r.seed = seed;
  std::size_t connected = 0, no_sil = 0, no_equiv = 0, single_equiv = 0, order_total = 0;
  for (const auto& o : outcomes) {
    connected += o.connected;
    no_sil += o.no_sil;
    no_equiv += o.equivalent_pairs == 0;
    single_equiv += o.equivalent_pairs == 1;
    order_total += o.order_pairs;
    if (o.out == Status::kYes)
      ++r.out_yes;
    else if (o.out == Status::kNo)
      ++r.out_no;
    else
      ++r.out_unknown;
  }
  const auto s = static_cast<double>(samples);
  r.freq_connected = static_cast<double>(connected) / s;
  r.freq_no_sil = static_cast<double>(no_sil) / s;
  r.freq_no_equiv_pair = static_cast<double>(no_equiv) / s;
  r.freq_single_equiv_pair = static_cast<double>(single_equiv) / s;
  r.mean_order_pairs = static_cast<double>(order_total) / s;
  return r;
}

std::vector<TrialReport> sweep(const std::vector<std::size_t>& ns, const std::vector<double>& ps, std::size_t samples,
                               std::uint64_t seed, std::size_t threads) {
  if (ns.empty() || ps.empty()) throw InputError("sweep needs nonempty n and p lists");
  std::vector<TrialReport> out;
  for (std::size_t n : ns)
    for (double p : ps) out.push_back(run_trials(n, p, samples, seed, threads));
  return out;
}

std::string csv_header() {
  return "n,p,samples,seed,freq_connected,freq_no_sil,freq_no_equiv_pair,freq_single_equiv_pair,out_yes,out_no,"
         "out_unknown,mean_order_pairs";
}

std::string csv_row(const TrialReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.p << ',' << r.samples << ',' << r.seed << ',' << r.freq_connected << ',' << r.freq_no_sil
     << ',' << r.freq_no_equiv_pair << ',' << r.freq_single_equiv_pair << ',' << r.out_yes << ',' << r.out_no << ','
     << r.out_unknown << ',' << r.mean_order_pairs;
  return os.str();
}

}  // namespace raag
