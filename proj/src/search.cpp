#include "pksearch/search.hpp"

#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

namespace pksearch {

using gf2::BitMatrix;
using gf2::BitRow;

CandidateResult check_candidate(const BitRow& v, const KernelCode& suffix, int target,
                                int direct_min_phase) {
  const int l = suffix.len;
  const int phase = suffix.phase - 1;
  if (phase < 0) throw std::invalid_argument("check_candidate: suffix already spans phase 0");
  if (direct_min_phase < 0) direct_min_phase = default_direct_min_phase(l);
  CosetResult r = phase >= direct_min_phase ? coset_distance_direct(v, suffix, target)
                                            : coset_distance_dual(v, suffix);
  return {r.distance == target, std::move(r.dist)};
}

namespace {

void validate_config(const SearchConfig& cfg) {
  const int l = cfg.target.size();
  if (l < 2 || l > gf2::max_len)
    throw std::invalid_argument("kernel_search: size must be in [2, 64]");
  for (int v : cfg.target.d)
    if (v < 1 || v > l)
      throw std::invalid_argument("kernel_search: profile entries must be in [1, l]");
  if (cfg.max_kernels < 1)
    throw std::invalid_argument("kernel_search: max_kernels must be positive");
  if (cfg.threads < 1)
    throw std::invalid_argument("kernel_search: threads must be positive");
}

class Searcher {
 public:
  Searcher(const SearchConfig& cfg, int direct_min_phase,
           std::optional<std::chrono::steady_clock::time_point> deadline,
           std::atomic<int>* shared_found)
      : cfg_(cfg),
        l_(cfg.target.size()),
        direct_min_phase_(direct_min_phase),
        deadline_(deadline),
        shared_found_(shared_found) {
    st_.rows.assign(static_cast<size_t>(l_), 0);
    st_.syndromes.resize(static_cast<size_t>(l_));
    st_.coset_dists.resize(static_cast<size_t>(l_));
  }

  // roots the search at `phase` with rows above it already placed
  void seed_row(int phase, uint64_t bits) { st_.rows[static_cast<size_t>(phase)] = bits; }

  bool run(int phase) { return dfs(phase); }

  std::vector<Kernel> take_kernels() { return std::move(found_); }
  const SearchStats& stats() const { return st_.stats; }
  bool budget_expired() const { return budget_expired_; }
  bool capped() const { return capped_; }

 private:
  bool out_of_time() const {
    return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
  }

  bool enough_found() const {
    if (static_cast<int>(found_.size()) >= cfg_.max_kernels) return true;
    return shared_found_ && shared_found_->load(std::memory_order_relaxed) >= cfg_.max_kernels;
  }

  // Returns true when the subtree was fully explored, false to stop the
  // whole search (budget expired or enough kernels collected).
  bool dfs(int phase) {
    if (phase < 0) {
      Kernel k(l_, st_.rows);
      if (!(verify_kernel(k, direct_min_phase_) == cfg_.target))
        throw std::logic_error("kernel_search: result failed verification");
      found_.push_back(std::move(k));
      if (shared_found_) shared_found_->fetch_add(1, std::memory_order_relaxed);
      if (enough_found()) {
        capped_ = true;
        return false;
      }
      return true;
    }

    const KernelCode suffix(l_, phase + 1,
                            std::vector<uint64_t>(st_.rows.begin() + phase + 1, st_.rows.end()));
    const BitMatrix h = parity_check(suffix.generator_matrix());
    auto& syn = st_.syndromes[static_cast<size_t>(phase)];
    syn.clear();
    auto& wds = st_.coset_dists[static_cast<size_t>(phase)];
    if (!cfg_.wd_global) wds.clear();

    const int target = cfg_.target.d[static_cast<size_t>(phase)];
    for (BitRow v : gf2::WeightCombinations(l_, target)) {
      if ((++st_.stats.nodes & 0xfff) == 0) {
        if (out_of_time()) {
          budget_expired_ = true;
          return false;
        }
        if (enough_found()) {
          capped_ = true;
          return false;
        }
      }
      if (cfg_.syndrome_prune) {
        const uint64_t s = gf2::syndrome(v, h).bits;
        if (!syn.insert(s).second) {
          ++st_.stats.syndrome_prunes;
          continue;
        }
      }
      ++st_.stats.cosets;
      CandidateResult r = check_candidate(v, suffix, target, direct_min_phase_);
      if (!r.accept) continue;
      if (cfg_.distribution_prune) {
        if (!wds.insert(std::move(*r.dist)).second) {
          ++st_.stats.wd_prunes;
          continue;
        }
      }
      st_.rows[static_cast<size_t>(phase)] = v.bits;
      if (!dfs(phase - 1)) return false;
    }
    return true;
  }

  const SearchConfig& cfg_;
  int l_;
  int direct_min_phase_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<int>* shared_found_;
  SearchState st_;
  std::vector<Kernel> found_;
  bool budget_expired_ = false;
  bool capped_ = false;
};

SearchOutcome run_single(const SearchConfig& cfg, int direct_min_phase,
                         std::optional<std::chrono::steady_clock::time_point> deadline) {
  Searcher s(cfg, direct_min_phase, deadline, nullptr);
  const bool complete = s.run(cfg.target.size() - 1);
  SearchOutcome out;
  out.kernels = s.take_kernels();
  out.budget_expired = s.budget_expired();
  out.exhausted = complete && !s.budget_expired() && !s.capped();
  out.stats = s.stats();
  return out;
}

// Fans the surviving top-phase candidates out over worker threads; each branch
// runs an independent search below its fixed top row. Results merge in
// candidate order, so the kernel list is ordered even though the amount of
// exploration may differ from the single-threaded walk.
SearchOutcome run_parallel(const SearchConfig& cfg, int direct_min_phase,
                           std::optional<std::chrono::steady_clock::time_point> deadline) {
  const int l = cfg.target.size();
  const int top = l - 1;
  SearchOutcome out;

  // phase l-1: the suffix is the zero code, every candidate is at distance
  // exactly its weight; apply the phase's prunes once up front
  const KernelCode zero = KernelCode::zero(l);
  const BitMatrix h = parity_check(zero.generator_matrix());
  std::unordered_set<uint64_t> syn;
  WdSet wds;
  std::vector<uint64_t> branches;
  for (BitRow v : gf2::WeightCombinations(l, cfg.target.d[static_cast<size_t>(top)])) {
    ++out.stats.nodes;
    if (cfg.syndrome_prune && !syn.insert(gf2::syndrome(v, h).bits).second) {
      ++out.stats.syndrome_prunes;
      continue;
    }
    ++out.stats.cosets;
    CandidateResult r =
        check_candidate(v, zero, cfg.target.d[static_cast<size_t>(top)], direct_min_phase);
    if (!r.accept) continue;
    if (cfg.distribution_prune && !wds.insert(std::move(*r.dist)).second) {
      ++out.stats.wd_prunes;
      continue;
    }
    branches.push_back(v.bits);
  }

  std::vector<std::unique_ptr<Searcher>> searchers(branches.size());
  std::vector<char> complete(branches.size(), 0);
  std::atomic<size_t> next{0};
  std::atomic<int> shared_found{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= branches.size()) return;
      auto s = std::make_unique<Searcher>(cfg, direct_min_phase, deadline, &shared_found);
      s->seed_row(top, branches[i]);
      complete[i] = s->run(top - 1) ? 1 : 0;
      searchers[i] = std::move(s);
    }
  };
  std::vector<std::thread> pool;
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(cfg.threads), branches.size());
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all_complete = true;
  for (size_t i = 0; i < branches.size(); ++i) {
    auto& s = searchers[i];
    if (!s) continue;
    for (Kernel& k : s->take_kernels())
      if (static_cast<int>(out.kernels.size()) < cfg.max_kernels)
        out.kernels.push_back(std::move(k));
    out.stats.nodes += s->stats().nodes;
    out.stats.cosets += s->stats().cosets;
    out.stats.syndrome_prunes += s->stats().syndrome_prunes;
    out.stats.wd_prunes += s->stats().wd_prunes;
    out.budget_expired = out.budget_expired || s->budget_expired();
    all_complete = all_complete && complete[i] && !s->capped();
  }
  out.exhausted = all_complete && !out.budget_expired;
  return out;
}

}  // namespace

SearchOutcome kernel_search(const SearchConfig& cfg) {
  validate_config(cfg);
  const int l = cfg.target.size();
  const int direct_min_phase =
      cfg.direct_min_phase < 0 ? default_direct_min_phase(l) : cfg.direct_min_phase;

  std::optional<std::chrono::steady_clock::time_point> deadline;
  const auto start = std::chrono::steady_clock::now();
  if (cfg.time_budget) deadline = start + *cfg.time_budget;

  SearchOutcome out = cfg.threads > 1 ? run_parallel(cfg, direct_min_phase, deadline)
                                      : run_single(cfg, direct_min_phase, deadline);
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace pksearch
