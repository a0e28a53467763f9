#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "pksearch/kernel_codes.hpp"

// Depth-first kernel search: build rows from phase l-1 down to 0, restricting
// candidates at phase phi to weight exactly D_phi, deduplicating candidates by
// coset syndrome, and optionally by coset weight distribution.

namespace pksearch {

struct SearchConfig {
  Pdp target;
  int max_kernels = 1;
  std::optional<std::chrono::milliseconds> time_budget;
  bool syndrome_prune = true;
  bool distribution_prune = true;
  // keep each phase's distribution set across suffix changes (the prune then
  // acts across incomparable subproblems); default resets per invocation
  bool wd_global = false;
  int direct_min_phase = -1;  // -1: default threshold ceil(l/2)
  int threads = 1;
};

struct SearchStats {
  uint64_t nodes = 0;            // candidate rows iterated
  uint64_t cosets = 0;           // coset distance evaluations
  uint64_t syndrome_prunes = 0;  // candidates skipped via known syndrome
  uint64_t wd_prunes = 0;        // accepted rows skipped via known distribution
  double elapsed_seconds = 0.0;
};

using WdSet = std::unordered_set<WeightDistribution, WeightDistributionHash>;

struct SearchState {
  std::vector<uint64_t> rows;                           // rows[phi..l-1] fixed
  std::vector<std::unordered_set<uint64_t>> syndromes;  // S_phi, per phase
  std::vector<WdSet> coset_dists;                       // W_phi, per phase
  SearchStats stats;
};

struct SearchOutcome {
  std::vector<Kernel> kernels;
  bool exhausted = false;       // search space fully explored
  bool budget_expired = false;  // stopped by the time budget
  SearchStats stats;
};

struct CandidateResult {
  bool accept = false;
  std::optional<WeightDistribution> dist;  // absent when the early abort fired
};

// Accept iff d_H(v, suffix) equals target exactly. Uses the direct route with
// early abort at phases >= the threshold and the dual route below it.
CandidateResult check_candidate(const gf2::BitRow& v, const KernelCode& suffix, int target,
                                int direct_min_phase = -1);

SearchOutcome kernel_search(const SearchConfig& cfg);

}  // namespace pksearch
