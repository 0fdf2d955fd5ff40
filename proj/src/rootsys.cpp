#include "schubert/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Fraction-free Gaussian elimination; returns the leading principal minors.
std::vector<long long> leading_minors(const std::vector<std::vector<long long>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<long long>> a = m;
  std::vector<long long> minors(n, 0);
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    minors[k] = a[k][k];  // Bareiss: pivot after step k is the k+1 minor
    if (a[k][k] == 0) break;
    prev = a[k][k];
  }
  return minors;
}

int expected_positive_count(char label, int rank) {
  switch (label) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: return -1;
  }
}

}  // namespace

struct RootSystem::Memo {
  mutable std::mutex mutex;
  std::unordered_map<std::vector<int>, bool, VecHash> table;
};

RootSystem::~RootSystem() = default;
RootSystem::RootSystem(RootSystem&&) noexcept = default;
RootSystem& RootSystem::operator=(RootSystem&&) noexcept = default;

std::vector<int> derive_symmetrizers(const std::vector<std::vector<int>>& cartan) {
  int n = static_cast<int>(cartan.size());
  // Propagate ratios d_j / d_i = cartan[j][i] / cartan[i][j] over the graph,
  // tracking values as exact fractions with a common integer scale.
  std::vector<long long> num(n, 0), den(n, 0);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = den[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0 || num[j] != 0) continue;
        num[j] = num[i] * cartan[j][i];
        den[j] = den[i] * cartan[i][j];
        if (num[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
        long long g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        stack.push_back(j);
      }
    }
  }
  long long scale = 1;
  for (int i = 0; i < n; ++i) scale = std::lcm(scale, den[i]);
  std::vector<long long> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (scale / den[i]);
  // Normalize each connected component to minimum 1.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i != j && cartan[i][j] != 0 && comp[j] < 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    long long mn = 0;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) mn = mn == 0 ? d[i] : std::min(mn, d[i]);
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) d[i] /= mn;
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(d[i]);
  return out;
}

CartanDatum CartanDatum::of_type(char label, int rank) {
  auto valid = [&]() {
    switch (label) {
      case 'A': return rank >= 1;
      case 'B':
      case 'C': return rank >= 2;
      case 'D': return rank >= 3;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  };
  if (!valid() || rank > 9) {
    throw usage_error("invalid type/rank pair: " + std::string(1, label) +
                      std::to_string(rank));
  }
  CartanDatum d;
  d.type_label = label;
  d.rank = rank;
  d.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) d.cartan[i][i] = 2;
  d.sym.assign(rank, 1);
  auto edge = [&](int i, int j) { d.cartan[i][j] = d.cartan[j][i] = -1; };
  switch (label) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case 'B':
      // chain with short last node: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      d.cartan[rank - 2][rank - 1] = -2;
      d.cartan[rank - 1][rank - 2] = -1;
      for (int i = 0; i + 1 < rank; ++i) d.sym[i] = 2;
      break;
    case 'C':
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      d.cartan[rank - 2][rank - 1] = -1;
      d.cartan[rank - 1][rank - 2] = -2;
      d.sym[rank - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      edge(rank - 3, rank - 1);
      break;
    case 'E':
      // nodes 0-based; branch node is 3, with the off-chain node 1
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      if (rank >= 7) edge(5, 6);
      if (rank >= 8) edge(6, 7);
      break;
    case 'F':
      edge(0, 1);
      d.cartan[1][2] = -2;
      d.cartan[2][1] = -1;
      edge(2, 3);
      d.sym = {2, 2, 1, 1};
      break;
    case 'G':
      d.cartan[0][1] = -1;
      d.cartan[1][0] = -3;
      d.sym = {1, 3};
      break;
  }
  d.validate();
  return d;
}

CartanDatum CartanDatum::from_matrix(std::vector<std::vector<int>> cartan,
                                     char label) {
  CartanDatum d;
  d.type_label = label;
  d.rank = static_cast<int>(cartan.size());
  d.cartan = std::move(cartan);
  d.sym = derive_symmetrizers(d.cartan);
  d.validate();
  return d;
}

void CartanDatum::validate() const {
  if (rank < 1 || rank > 9) throw usage_error("rank out of range (1..9)");
  if (static_cast<int>(cartan.size()) != rank ||
      static_cast<int>(sym.size()) != rank) {
    throw usage_error("Cartan data has wrong dimensions");
  }
  std::vector<std::vector<long long>> gram(rank, std::vector<long long>(rank));
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(cartan[i].size()) != rank)
      throw usage_error("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw usage_error("Cartan diagonal must be 2");
    if (sym[i] <= 0) throw usage_error("symmetrizers must be positive");
    for (int j = 0; j < rank; ++j) {
      if (i != j && cartan[i][j] > 0)
        throw usage_error("off-diagonal Cartan entries must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw usage_error("Cartan zero pattern must be symmetric");
      gram[i][j] = static_cast<long long>(cartan[i][j]) * sym[j];
    }
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram[i][j] != gram[j][i])
        throw usage_error("symmetrized Cartan matrix is not symmetric");
  for (long long minor : leading_minors(gram))
    if (minor <= 0)
      throw usage_error("symmetrized Cartan matrix is not positive definite");
}

bool root_leq(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw usage_error("root_leq: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

Coords join(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw usage_error("join: size mismatch");
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

int height(const Coords& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

RootSystem::RootSystem(CartanDatum datum)
    : datum_(std::move(datum)), memo_(std::make_unique<Memo>()) {
  datum_.validate();
  const int n = datum_.rank;
  std::set<Coords> seen;
  std::vector<Coords> queue;
  for (int i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  // Close the simple roots under simple reflections, keeping positives.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Coords cur = queue[head];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += cur[j] * datum_.cartan[j][i];
      Coords img = cur;
      img[i] -= p;
      bool nonneg = true;
      for (int x : img) nonneg = nonneg && x >= 0;
      if (!nonneg) continue;  // s_i(alpha_i) = -alpha_i
      if (seen.insert(img).second) queue.push_back(img);
    }
    if (queue.size() > 4096) throw usage_error("root system closure diverged");
  }
  std::vector<Coords> coords(seen.begin(), seen.end());
  std::sort(coords.begin(), coords.end(), [](const Coords& a, const Coords& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  int expected = expected_positive_count(datum_.type_label, n);
  if (expected >= 0 && static_cast<int>(coords.size()) != expected)
    throw usage_error("positive root count mismatch");

  min_norm2_ = 0;
  max_norm2_ = 0;
  positive_.reserve(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    Root r;
    r.root_coords = coords[k];
    r.index = static_cast<int>(k);
    r.is_positive = true;
    long long n2 = form(coords[k], coords[k]);
    r.norm2 = static_cast<int>(n2);
    if (n2 <= 0 || n2 % 2 != 0) throw usage_error("invalid root length");
    r.coroot_coords.resize(n);
    for (int j = 0; j < n; ++j) {
      long long num = 2LL * coords[k][j] * datum_.sym[j];
      if (num % n2 != 0) throw usage_error("coroot is not integral");
      r.coroot_coords[j] = static_cast<int>(num / n2);
    }
    min_norm2_ = min_norm2_ == 0 ? r.norm2 : std::min(min_norm2_, r.norm2);
    max_norm2_ = std::max(max_norm2_, r.norm2);
    lookup_[coords[k]] = r.index;
    positive_.push_back(std::move(r));
  }

  // Locate the unique maximal root, if there is one (irreducible systems).
  int max_count = 0;
  for (const Root& r : positive_) {
    bool maximal = true;
    for (const Root& s : positive_) {
      if (s.index != r.index && root_leq(r.root_coords, s.root_coords)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      highest_ = r.index;
      ++max_count;
    }
  }
  if (max_count != 1) highest_ = -1;
}

RootSystem RootSystem::of_type(char label, int rank) {
  return RootSystem(CartanDatum::of_type(label, rank));
}

const Root& RootSystem::highest_root() const {
  if (highest_ < 0)
    throw usage_error("root system has no unique highest root (reducible)");
  return positive_[highest_];
}

std::optional<int> RootSystem::find(const Coords& root_coords) const {
  auto it = lookup_.find(root_coords);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_of(const Coords& root_coords) const {
  auto idx = find(root_coords);
  if (!idx) throw usage_error("vector is not a positive root");
  return *idx;
}

Coords RootSystem::simple(int i) const {
  if (i < 0 || i >= rank()) throw usage_error("simple root index out of range");
  Coords e(rank(), 0);
  e[i] = 1;
  return e;
}

int RootSystem::pair(const Coords& root_vec, const Coords& coroot_vec) const {
  const int n = rank();
  if (static_cast<int>(root_vec.size()) != n ||
      static_cast<int>(coroot_vec.size()) != n)
    throw usage_error("pair: size mismatch");
  int out = 0;
  for (int i = 0; i < n; ++i) {
    if (root_vec[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      out += root_vec[i] * datum_.cartan[i][j] * coroot_vec[j];
  }
  return out;
}

long long RootSystem::form(const Coords& a, const Coords& b) const {
  const int n = rank();
  long long out = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      out += static_cast<long long>(a[i]) * datum_.cartan[i][j] *
             datum_.sym[j] * b[j];
  }
  return out;
}

bool RootSystem::are_separated(const Root& a, const Root& b) const {
  const int n = rank();
  std::vector<char> support(n, 0);
  for (int i = 0; i < n; ++i)
    support[i] = a.root_coords[i] != 0 || b.root_coords[i] != 0;
  // Connectivity of the induced Dynkin subgraph on the union of supports.
  int start = -1, total = 0;
  for (int i = 0; i < n; ++i)
    if (support[i]) {
      if (start < 0) start = i;
      ++total;
    }
  if (total == 0) return false;
  std::vector<char> visited(n, 0);
  std::vector<int> stack{start};
  visited[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j != i && support[j] && !visited[j] && datum_.cartan[i][j] != 0) {
        visited[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached != total;
}

RootSystem RootSystem::dual() const {
  const int n = rank();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = datum_.cartan[j][i];
  return RootSystem(CartanDatum::from_matrix(std::move(t)));
}

bool RootSystem::memo_lookup(const std::vector<int>& key, bool* out) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto it = memo_->table.find(key);
  if (it == memo_->table.end()) return false;
  *out = it->second;
  return true;
}

void RootSystem::memo_store(const std::vector<int>& key, bool value) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->table.emplace(key, value);
}

}  // namespace schubert
