#include "tits/rootkit.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include "json.hpp"
#include <set>

#include "tits/intlinalg.hpp"

namespace tits {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Cocenter

CocenterGroup::CocenterGroup(IntVec invariant_factors, IntMatrix projection)
    : factors_(std::move(invariant_factors)), projection_(std::move(projection)) {}

std::size_t CocenterGroup::order() const {
  std::size_t n = 1;
  for (auto f : factors_) n *= static_cast<std::size_t>(f);
  return n;
}

IntVec CocenterGroup::project(const Weight& w) const { return project(w.coords); }

IntVec CocenterGroup::project(const IntVec& omega) const {
  IntVec out(factors_.size(), 0);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < omega.size(); ++j) s += projection_[k][j] * omega[j];
    out[k] = floor_mod(s, factors_[k]);
  }
  return out;
}

IntVec CocenterGroup::reduce(IntVec residues) const {
  for (std::size_t k = 0; k < factors_.size(); ++k) residues[k] = floor_mod(residues[k], factors_[k]);
  return residues;
}

std::int64_t CocenterGroup::element_order(const IntVec& residues) const {
  std::int64_t ord = 1;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::int64_t r = floor_mod(residues[k], factors_[k]);
    ord = lcm64(ord, factors_[k] / gcd64(r, factors_[k]));
  }
  return ord;
}

IntVec CocenterGroup::negate(const IntVec& residues) const {
  IntVec out(residues.size());
  for (std::size_t k = 0; k < residues.size(); ++k) out[k] = floor_mod(-residues[k], factors_[k]);
  return out;
}

bool CocenterGroup::is_zero(const IntVec& residues) const {
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (floor_mod(residues[k], factors_[k]) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cartan data

namespace {

using Edge = std::pair<int, int>;

std::vector<Edge> template_edges(Kind kind, int n) {
  std::vector<Edge> e;
  switch (kind) {
    case Kind::A:
    case Kind::B:
    case Kind::C:
    case Kind::F:
    case Kind::G:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Kind::D:
      for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      break;
    case Kind::E:
      e.emplace_back(1, 3);
      e.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

}  // namespace

IntVec root_lengths(Kind kind, int n) {
  require_valid_type(kind, n);
  IntVec len(static_cast<std::size_t>(n), 1);
  switch (kind) {
    case Kind::B:
      std::fill(len.begin(), len.end(), 2);
      len[n - 1] = 1;
      break;
    case Kind::C: len[n - 1] = 2; break;
    case Kind::F: len = {2, 2, 1, 1}; break;
    case Kind::G: len = {1, 3}; break;
    default: break;
  }
  return len;
}

IntMatrix cartan_matrix(Kind kind, int n) {
  require_valid_type(kind, n);
  const IntVec len = root_lengths(kind, n);
  IntMatrix a(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [u, v] : template_edges(kind, n)) {
    const int i = u - 1, j = v - 1;
    // a[i][j] = <alpha_i^vee, alpha_j>
    a[i][j] = len[i] >= len[j] ? -1 : -(len[j] / len[i]);
    a[j][i] = len[j] >= len[i] ? -1 : -(len[i] / len[j]);
  }
  return a;
}

Weight alpha_in_omega(Kind kind, int rank, int i) {
  require_valid_type(kind, rank);
  if (i < 1 || i > rank) throw std::out_of_range("simple root index out of range");
  const IntMatrix a = cartan_matrix(kind, rank);
  Weight w;
  w.coords.resize(static_cast<std::size_t>(rank));
  for (int j = 0; j < rank; ++j) w.coords[j] = a[j][i - 1];
  return w;
}

IntVec reflect_root(const IntMatrix& cartan, const IntVec& root, int i) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < root.size(); ++j) pairing += root[j] * cartan[i - 1][j];
  IntVec out = root;
  out[i - 1] -= pairing;
  return out;
}

IntVec reflect_weight(const IntMatrix& cartan, const IntVec& weight, int i) {
  IntVec out = weight;
  const std::int64_t c = weight[i - 1];
  for (std::size_t j = 0; j < weight.size(); ++j) out[j] -= c * cartan[j][i - 1];
  return out;
}

namespace {

std::int64_t height(const IntVec& r) {
  std::int64_t h = 0;
  for (auto x : r) h += x;
  return h;
}

std::vector<IntVec> compute_positive_roots(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::set<IntVec> known;
  std::vector<IntVec> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    known.insert(e);
    level.push_back(e);
  }
  std::vector<IntVec> all = level;
  while (!level.empty()) {
    std::set<IntVec> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        // p: how far the alpha_i-string extends below beta
        std::int64_t p = 0;
        IntVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) known.insert(r);
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end(), [](const IntVec& x, const IntVec& y) {
    const auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return all;
}

struct CacheKey {
  Kind kind;
  int rank;
  bool operator<(const CacheKey& o) const {
    return std::tie(kind, rank) < std::tie(o.kind, o.rank);
  }
};

}  // namespace

std::vector<IntVec> positive_roots(Kind kind, int rank) { return root_system(kind, rank).positive_roots; }

const RootSystemData& root_system(Kind kind, int rank) {
  static std::mutex mu;
  static std::map<CacheKey, std::unique_ptr<RootSystemData>> cache;
  require_valid_type(kind, rank);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{kind, rank}];
  if (!slot) {
    auto rs = std::make_unique<RootSystemData>();
    rs->type = {kind, rank};
    rs->cartan = cartan_matrix(kind, rank);
    rs->root_lengths = root_lengths(kind, rank);
    rs->positive_roots = compute_positive_roots(rs->cartan);
    rs->highest_root = rs->positive_roots.back();
    slot = std::move(rs);
  }
  return *slot;
}

std::vector<int> longest_element_word(Kind kind, int rank) {
  const IntMatrix& a = root_system(kind, rank).cartan;
  IntVec v(static_cast<std::size_t>(rank), 1);
  std::vector<int> word;
  for (;;) {
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x > 0; });
    if (it == v.end()) break;
    const int i = static_cast<int>(it - v.begin()) + 1;
    v = reflect_weight(a, v, i);
    word.push_back(i);
  }
  return word;
}

std::vector<int> opposition_involution(Kind kind, int rank) {
  const IntMatrix& a = root_system(kind, rank).cartan;
  const auto word = longest_element_word(kind, rank);
  std::vector<int> sigma(static_cast<std::size_t>(rank) + 1, 0);
  for (int j = 1; j <= rank; ++j) {
    IntVec r(static_cast<std::size_t>(rank), 0);
    r[j - 1] = 1;
    for (int i : word) r = reflect_root(a, r, i);
    // r = w_0(alpha_j) must be the negative of a simple root
    int target = 0;
    for (int k = 0; k < rank; ++k) {
      if (r[k] == -1 && target == 0) {
        target = k + 1;
      } else if (r[k] != 0) {
        target = -1;
        break;
      }
    }
    if (target <= 0) throw std::logic_error("w_0 does not map a simple root to a negative simple root");
    sigma[j] = target;
  }
  return sigma;
}

CocenterGroup cocenter(Kind kind, int rank) {
  const auto snf = smith_normal_form(root_system(kind, rank).cartan);
  IntVec factors;
  IntMatrix rows;
  for (std::size_t k = 0; k < snf.diagonal.size(); ++k) {
    if (snf.diagonal[k] > 1) {
      factors.push_back(snf.diagonal[k]);
      rows.push_back(snf.left[k]);
    }
  }
  return CocenterGroup(std::move(factors), std::move(rows));
}

std::int64_t class_order(const Weight& w, const CocenterGroup& g) { return g.element_order(g.project(w)); }

std::int64_t coroot_pairing(const RootSystemData& rs, const IntVec& weight, const IntVec& root) {
  const std::size_t n = root.size();
  std::int64_t norm = 0;  // 2 (beta, beta)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm += root[i] * root[j] * rs.cartan[i][j] * rs.root_lengths[i];
  std::int64_t num = 0;
  for (std::size_t i = 0; i < n; ++i) num += weight[i] * 2 * root[i] * rs.root_lengths[i];
  return num / norm;
}

namespace {

const std::vector<Weight>& minuscule_weights(Kind kind, int rank) {
  static std::mutex mu;
  static std::map<CacheKey, std::vector<Weight>> cache;
  const RootSystemData& rs = root_system(kind, rank);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({kind, rank});
  if (!fresh) return it->second;
  // Minuscule weights are dominant with every <lambda, alpha_i^vee> in {0, 1},
  // so the enumeration box {0, 1}^rank is exhaustive.
  const std::size_t total = std::size_t{1} << rank;
  for (std::size_t mask = 1; mask < total; ++mask) {
    IntVec w(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < rank; ++i) w[i] = (mask >> i) & 1U;
    const bool minuscule = std::all_of(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const IntVec& r) {
      const auto p = coroot_pairing(rs, w, r);
      return p == 0 || p == 1;
    });
    if (minuscule) it->second.push_back(Weight{w});
  }
  return it->second;
}

}  // namespace

Weight minuscule_representative(const IntVec& residues, Kind kind, int rank) {
  const CocenterGroup g = cocenter(kind, rank);
  if (residues.size() != g.invariant_factors().size())
    throw std::invalid_argument("residue tuple does not match the cocenter");
  if (g.is_zero(residues)) return Weight{IntVec(static_cast<std::size_t>(rank), 0)};
  const IntVec target = g.reduce(residues);
  std::vector<Weight> hits;
  for (const auto& w : minuscule_weights(kind, rank))
    if (g.project(w) == target) hits.push_back(w);
  if (hits.size() != 1)
    throw std::logic_error("cocenter class of " + CartanType{kind, rank}.name() + " has " +
                           std::to_string(hits.size()) + " minuscule representatives");
  return hits.front();
}

std::string root_system_json(Kind kind, int rank) {
  const auto& rs = root_system(kind, rank);
  nlohmann::json j;
  j["kind"] = std::string(1, kind_char(kind));
  j["rank"] = rank;
  j["cartan"] = rs.cartan;
  j["positive_roots"] = rs.positive_roots;
  return j.dump();
}

}  // namespace tits
