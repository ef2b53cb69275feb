#include "stretchalign/harness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "stretchalign/generate.hpp"

namespace stretchalign {

OptimizeResult oracle_optimize(const SegmentPair& seg) {
  const auto s1 = seg.s1;
  const auto s2 = seg.s2;
  if (s1.empty() || s2.empty()) {
    throw std::invalid_argument("oracle_optimize: empty segment");
  }
  bool have = false;
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  CostValue best_cost;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    for (std::size_t j = 0; j < s2.size(); ++j) {
      if (s1[i] != s2[j]) continue;
      CostValue cost = run_cost(i) + run_cost(j);
      const bool better =
          !have || cost < best_cost ||
          (cost == best_cost && (i > best_i || (i == best_i && j < best_j)));
      if (!better) continue;
      have = true;
      best_i = i;
      best_j = j;
      best_cost = std::move(cost);
    }
  }
  OptimizeResult r;
  if (!have) {
    r.kind = OptimizeResult::Kind::no_match;
    r.gaps_into_s1 = s2.size();
    r.tail_in_s1 = s1.size();
    return r;
  }
  r.kind = OptimizeResult::Kind::matched;
  r.i = best_i;
  r.j = best_j;
  r.gaps_into_s1 = best_j;
  r.gaps_into_s2 = best_i;
  r.cost = std::move(best_cost);
  return r;
}

PairResult compare_pair(std::string id1, std::string id2, const Sequence& a,
                        const Sequence& b, const AlignerConfig& cfg) {
  PairResult result;
  const AlignmentResult aligned = align(a, b, cfg);
  result.collective = collective_metrics(aligned);
  result.seq1 = per_sequence_metrics(aligned, 1);
  result.seq2 = per_sequence_metrics(aligned, 2);
  result.row = make_result_row(std::move(id1), std::move(id2), aligned, result.collective);
  return result;
}

std::vector<PairResult> run_all_pairs(
    const std::vector<std::pair<std::string, Sequence>>& inputs, const AlignerConfig& cfg,
    std::size_t threads) {
  if (inputs.empty()) throw std::invalid_argument("run_all_pairs: no inputs");
  for (const auto& [id, sequence] : inputs) {
    if (sequence.empty()) {
      throw std::invalid_argument("run_all_pairs: empty sequence '" + id + "'");
    }
  }
  const std::size_t n = inputs.size();
  const std::size_t jobs = n * n;
  std::vector<PairResult> out(jobs);

  const auto work = [&](std::size_t t) {
    const std::size_t i = t / n;
    const std::size_t j = t % n;
    out[t] = compare_pair(inputs[i].first, inputs[j].first, inputs[i].second,
                          inputs[j].second, cfg);
  };

  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), jobs);
  if (workers == 1) {
    for (std::size_t t = 0; t < jobs; ++t) work(t);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= jobs) return;
        try {
          work(t);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Table1Row> table1_experiment(std::uint64_t seed) {
  constexpr std::size_t kLength = 5000;
  constexpr Symbol kMarker = 7;
  const Sequence host =
      generate_excluding(DistributionSpec::gauss(2.0, 1.0, kLength, seed), kMarker);
  const AlignerConfig cfg;  // exact costs, pad policy, unlimited window

  std::vector<Table1Row> rows;
  for (const std::size_t ins : {std::size_t{0}, std::size_t{100}, std::size_t{500},
                                std::size_t{1000}, std::size_t{2000}, std::size_t{3000},
                                std::size_t{4000}}) {
    Table1Row row;
    row.insertions = ins;
    row.expected_a = 1.0 + static_cast<double>(ins) / 5000.0;
    row.expected_log2_b = static_cast<double>(ins) - std::log2(10000.0);
    row.expect_zero_cost = ins == 0;
    const Sequence variant =
        ins == 0 ? host : corrupt(host, InsertionSpec{kMarker, ins, 0, kLength});
    row.pair = compare_pair("gauss_2_1", "ins_" + std::to_string(ins), host, variant, cfg);

    if (row.expect_zero_cost) {
      row.pass = row.pair.collective.cost_is_zero && row.pair.collective.a == 1.0;
    } else {
      row.pass = row.pair.collective.a == row.expected_a &&
                 !row.pair.collective.cost_is_zero &&
                 std::abs(row.pair.collective.log2_b - row.expected_log2_b) <= 0.01;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stretchalign
