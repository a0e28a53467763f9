#include "pksearch/pdp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pksearch {

namespace {

int parse_int_field(const std::string& tok, const char* what) {
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("distance table: bad ") + what + " field '" + tok + "'");
  }
  while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\r')) ++pos;
  if (pos != tok.size())
    throw std::runtime_error(std::string("distance table: bad ") + what + " field '" + tok + "'");
  return v;
}

}  // namespace

DistanceTable DistanceTable::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("distance table: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_csv_text(buf.str(), path);
}

DistanceTable DistanceTable::from_csv_text(const std::string& text, std::string provenance) {
  DistanceTable t;
  t.provenance = std::move(provenance);
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line.find("n") != std::string::npos && line.find("d") != std::string::npos &&
          line.find_first_of("0123456789") == std::string::npos)
        continue;  // "n,k,d" header line
    }
    std::istringstream row(line);
    std::string ns, ks, ds;
    if (!std::getline(row, ns, ',') || !std::getline(row, ks, ',') || !std::getline(row, ds))
      throw std::runtime_error("distance table: expected n,k,d row, got '" + line + "'");
    const int n = parse_int_field(ns, "n");
    const int k = parse_int_field(ks, "k");
    const int d = parse_int_field(ds, "d");
    if (n < 1 || k < 1 || k > n || d < 1 || d > n)
      throw std::runtime_error("distance table: out-of-range row '" + line + "'");
    t.entries[{n, k}] = d;
  }
  return t;
}

int griesmer_bound(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("griesmer_bound: need 1 <= k <= n");
  int best = 1;
  for (int d = 1; d <= n; ++d) {
    long long sum = 0;
    for (int i = 0; i < k && sum <= n; ++i)
      sum += (d + (1LL << i) - 1) >> i;
    if (sum <= n) best = d;
  }
  return best;
}

DistanceTable DistanceTable::griesmer(int max_n) {
  DistanceTable t;
  t.provenance = "griesmer";
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) t.entries[{n, k}] = griesmer_bound(n, k);
  return t;
}

int DistanceTable::lookup(int n, int k) const {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("DistanceTable::lookup: need 1 <= k <= n");
  auto it = entries.find({n, k});
  return it != entries.end() ? it->second : n - k + 1;
}

std::string DistanceTable::to_csv() const {
  std::string out = "n,k,d\n";
  for (const auto& [nk, d] : entries) {
    out += std::to_string(nk.first) + "," + std::to_string(nk.second) + "," +
           std::to_string(d) + "\n";
  }
  return out;
}

bool check_lemma4(const Pdp& d) {
  const int l = d.size();
  if (l < 2 || d.d[1] != 2) return true;
  for (int i = 1; i < l; ++i)
    if (d.d[static_cast<size_t>(i)] & 1) return false;
  return true;
}

unsigned __int128 lemma5_suffix_sum(const Pdp& d, int i) {
  const int l = d.size();
  unsigned __int128 sum = 0;
  for (int j = i; j < l; ++j)
    sum += (static_cast<unsigned __int128>(1) << (l - j)) *
           static_cast<unsigned>(d.d[static_cast<size_t>(j)]);
  return sum;
}

bool check_lemma5(const Pdp& d) {
  const int l = d.size();
  unsigned __int128 sum = 0;
  for (int i = l - 1; i >= 0; --i) {
    sum += (static_cast<unsigned __int128>(1) << (l - i)) *
           static_cast<unsigned>(d.d[static_cast<size_t>(i)]);
    if (sum > (static_cast<unsigned __int128>(1) << (l - i)) * static_cast<unsigned>(l))
      return false;
  }
  return true;
}

namespace {

struct PdpEnumerator {
  const PdpQuery& q;
  const std::function<bool(const Pdp&)>& sink;
  int l;
  std::vector<int> bound;          // per-phase table bound
  std::vector<double> opt_suffix;  // sum of ln(bound[j]) for j >= index
  std::vector<int> cur;
  std::vector<unsigned __int128> prefix_weighted;  // sum_{i<=depth} 2^(l-i) D_i
  double log_needed;  // rate > e_min  <=>  sum ln D_i > log_needed
  bool stopped = false;

  explicit PdpEnumerator(const PdpQuery& query, const std::function<bool(const Pdp&)>& s)
      : q(query), sink(s), l(query.size) {
    bound.resize(static_cast<size_t>(l));
    for (int phi = 0; phi < l; ++phi)
      bound[static_cast<size_t>(phi)] = std::min(q.table.lookup(l, l - phi), l);
    opt_suffix.assign(static_cast<size_t>(l) + 1, 0.0);
    for (int phi = l - 1; phi >= 0; --phi)
      opt_suffix[static_cast<size_t>(phi)] =
          opt_suffix[static_cast<size_t>(phi) + 1] +
          std::log(static_cast<double>(bound[static_cast<size_t>(phi)]));
    cur.assign(static_cast<size_t>(l), 0);
    prefix_weighted.assign(static_cast<size_t>(l), 0);
    log_needed = q.e_min * static_cast<double>(l) * std::log(static_cast<double>(l));
  }

  // sound partial suffix-sum check: fill the remaining entries with the
  // current (minimal possible) value and test every start index
  bool lemma5_feasible(int depth, unsigned __int128 fill_tail) const {
    for (int i = 0; i <= depth; ++i) {
      const unsigned __int128 head =
          prefix_weighted[static_cast<size_t>(depth)] -
          (i > 0 ? prefix_weighted[static_cast<size_t>(i) - 1] : 0);
      if (head + fill_tail >
          (static_cast<unsigned __int128>(1) << (l - i)) * static_cast<unsigned>(l))
        return false;
    }
    return true;
  }

  void rec(int depth, double log_sum) {
    if (stopped) return;
    if (depth == l) {
      Pdp p{cur};
      if (rate_of_polarization(p) > q.e_min && (!q.enforce_lemma5 || check_lemma5(p))) {
        if (!sink(p)) stopped = true;
      }
      return;
    }
    const int lo = depth == 0 ? 1 : cur[static_cast<size_t>(depth) - 1];
    const int hi = bound[static_cast<size_t>(depth)];
    const bool even_only = q.enforce_lemma4 && depth >= 2 && cur[1] == 2;
    for (int v = lo; v <= hi && !stopped; ++v) {
      if (even_only && (v & 1)) continue;
      const double ls = log_sum + std::log(static_cast<double>(v));
      // optimistic completion with the per-phase bounds cannot reach e_min
      if (ls + opt_suffix[static_cast<size_t>(depth) + 1] <= log_needed - 1e-12) continue;
      cur[static_cast<size_t>(depth)] = v;
      prefix_weighted[static_cast<size_t>(depth)] =
          (depth > 0 ? prefix_weighted[static_cast<size_t>(depth) - 1] : 0) +
          (static_cast<unsigned __int128>(1) << (l - depth)) * static_cast<unsigned>(v);
      if (q.enforce_lemma5) {
        // remaining entries are >= v, so filling with v is the minimal tail
        const unsigned __int128 fill_tail =
            ((static_cast<unsigned __int128>(1) << (l - depth)) - 2) * static_cast<unsigned>(v);
        if (!lemma5_feasible(depth, fill_tail)) continue;
      }
      rec(depth + 1, ls);
    }
  }
};

}  // namespace

void enumerate_pdps(const PdpQuery& q, const std::function<bool(const Pdp&)>& sink) {
  if (q.size < 2) throw std::invalid_argument("enumerate_pdps: size must be >= 2");
  if (q.e_min < 0.0 || q.e_min >= 1.0)
    throw std::invalid_argument("enumerate_pdps: e_min must be in [0, 1)");
  PdpEnumerator e(q, sink);
  e.rec(0, 0.0);
}

std::vector<Pdp> collect_pdps(const PdpQuery& q, size_t limit) {
  std::vector<Pdp> out;
  enumerate_pdps(q, [&](const Pdp& p) {
    out.push_back(p);
    return out.size() < limit;
  });
  return out;
}

PermutationSpec PermutationSpec::explicit_orders(std::vector<std::vector<int>> o) {
  PermutationSpec s;
  s.all = false;
  s.orders = std::move(o);
  return s;
}

void permute_pdp(const Pdp& d, const PermutationSpec& spec,
                 const std::function<bool(const Pdp&)>& sink) {
  if (!sink(d)) return;  // identity first
  const size_t l = d.d.size();
  if (spec.all) {
    std::vector<int> s = d.d;
    std::sort(s.begin(), s.end());
    do {
      if (s != d.d && !sink(Pdp{s})) return;
    } while (std::next_permutation(s.begin(), s.end()));
    return;
  }
  std::set<std::vector<int>> seen{d.d};
  for (const auto& order : spec.orders) {
    if (order.size() != l)
      throw std::invalid_argument("permute_pdp: order length mismatch");
    std::vector<char> hit(l, 0);
    std::vector<int> p(l);
    for (size_t i = 0; i < l; ++i) {
      const int idx = order[i];
      if (idx < 0 || static_cast<size_t>(idx) >= l || hit[static_cast<size_t>(idx)])
        throw std::invalid_argument("permute_pdp: order is not a permutation");
      hit[static_cast<size_t>(idx)] = 1;
      p[i] = d.d[static_cast<size_t>(idx)];
    }
    if (seen.insert(p).second && !sink(Pdp{p})) return;
  }
}

std::vector<Pdp> collect_permutations(const Pdp& d, const PermutationSpec& spec, size_t limit) {
  std::vector<Pdp> out;
  permute_pdp(d, spec, [&](const Pdp& p) {
    out.push_back(p);
    return out.size() < limit;
  });
  return out;
}

}  // namespace pksearch
