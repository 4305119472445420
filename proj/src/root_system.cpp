#include "schub/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace schub {

std::string to_string(const SimpleType& t) {
  return std::string(1, t.family) + std::to_string(t.rank);
}

namespace {

void check_type(const SimpleType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default:
      throw input_error("unknown diagram family '" + std::string(1, t.family) +
                        "'");
  }
  if (!ok)
    throw input_error("rank " + std::to_string(n) +
                      " out of range for family " + std::string(1, t.family));
}

// Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> and the per-node half
// squared lengths, short roots normalized to 1.
void cartan_data(const SimpleType& t, std::vector<std::vector<int>>& C,
                 std::vector<int>& d) {
  const int n = t.rank;
  C.assign(n, std::vector<int>(n, 0));
  d.assign(n, 1);
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  auto edge = [&](int i, int j) { C[i][j] = C[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      C[n - 2][n - 1] = -2;  // long node into short coroot
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      C[n - 1][n - 2] = -2;
      d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1), edge(1, 2), edge(2, 3);
      C[1][2] = -2;
      d[0] = d[1] = 2;
      break;
    case 'G':
      edge(0, 1);
      C[1][0] = -3;
      d[1] = 3;
      break;
  }
}

}  // namespace

RootSystem RootSystem::build(SimpleType t) {
  check_type(t);
  RootSystem rs;
  rs.type_ = t;
  cartan_data(t, rs.cartan_, rs.dsim_);
  const int n = t.rank;

  // (alpha_i, alpha_j) = d_j * C[i][j] must be symmetric.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.dsim_[j] * rs.cartan_[i][j] != rs.dsim_[i] * rs.cartan_[j][i])
        throw internal_error("asymmetric Cartan data for " + to_string(t));

  // Positive roots as the closure of the simple roots under the simple
  // reflections, restricted to the positive cone.
  std::map<Coeffs, int> seen;
  std::vector<Coeffs> pos;
  for (int i = 0; i < n; ++i) {
    Coeffs a(n, 0);
    a[i] = 1;
    seen.emplace(a, static_cast<int>(pos.size()));
    pos.push_back(a);
  }
  for (std::size_t head = 0; head < pos.size(); ++head) {
    const Coeffs r = pos[head];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += r[j] * rs.cartan_[j][i];
      Coeffs s = r;
      s[i] -= p;
      if (std::all_of(s.begin(), s.end(), [](int c) { return c >= 0; }) &&
          !seen.count(s)) {
        seen.emplace(s, static_cast<int>(pos.size()));
        pos.push_back(s);
      }
    }
  }

  // Canonical order: by height, then lexicographically.
  std::sort(pos.begin(), pos.end(), [](const Coeffs& a, const Coeffs& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });

  rs.m_ = static_cast<int>(pos.size());
  rs.roots_ = pos;
  for (const Coeffs& r : pos) {
    Coeffs neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    rs.roots_.push_back(neg);
  }
  for (int id = 0; id < 2 * rs.m_; ++id) {
    rs.index_.emplace(rs.roots_[id], id);
    rs.heights_.push_back(std::accumulate(rs.roots_[id].begin(),
                                          rs.roots_[id].end(), 0));
    long long norm2 = rs.bilinear(rs.roots_[id], rs.roots_[id]);
    if (norm2 <= 0 || norm2 % 2 != 0)
      throw internal_error("bad root norm in " + to_string(t));
    rs.norm2h_.push_back(static_cast<int>(norm2 / 2));
  }

  rs.sref_.assign(n, std::vector<int>(2 * rs.m_, -1));
  for (int i = 0; i < n; ++i) {
    for (int id = 0; id < 2 * rs.m_; ++id) {
      int p = rs.pair(id, rs.simple_id(i));
      Coeffs s = rs.roots_[id];
      s[i] -= p;
      auto it = rs.index_.find(s);
      if (it == rs.index_.end())
        throw internal_error("reflection left the root set in " +
                             to_string(t));
      rs.sref_[i][id] = it->second;
    }
  }
  return rs;
}

int RootSystem::check_id(int id) const {
  if (id < 0 || id >= 2 * m_)
    throw input_error("root id " + std::to_string(id) + " out of range");
  return id;
}

int RootSystem::check_node(int i) const {
  if (i < 0 || i >= type_.rank)
    throw input_error("node index " + std::to_string(i + 1) +
                      " out of range for " + to_string(type_));
  return i;
}

int RootSystem::id_of(const Coeffs& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::require_root(const Coeffs& c) const {
  if (static_cast<int>(c.size()) != type_.rank)
    throw input_error("coefficient vector has wrong length for " +
                      to_string(type_));
  int id = id_of(c);
  if (id < 0) {
    std::string s;
    for (int v : c) s += (s.empty() ? "" : " ") + std::to_string(v);
    throw input_error("not a root of " + to_string(type_) + ": [" + s + "]");
  }
  return id;
}

int RootSystem::simple_id(int i) const {
  Coeffs a(type_.rank, 0);
  a[check_node(i)] = 1;
  return index_.at(a);
}

int RootSystem::simple_index(int id) const {
  if (std::abs(height(id)) != 1) return -1;
  const Coeffs& c = roots_[id];
  for (int i = 0; i < type_.rank; ++i)
    if (c[i] != 0) return i;
  return -1;
}

long long RootSystem::bilinear(const Coeffs& a, const Coeffs& b) const {
  long long s = 0;
  for (int i = 0; i < type_.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < type_.rank; ++j)
      s += static_cast<long long>(a[i]) * b[j] * dsim_[j] * cartan_[i][j];
  }
  return s;
}

int RootSystem::pair(int beta, int alpha) const {
  check_id(beta), check_id(alpha);
  long long num = bilinear(roots_[beta], roots_[alpha]);
  int dal = norm2h_[alpha];
  if (num % dal != 0)
    throw internal_error("non-integral coroot pairing in " + to_string(type_));
  return static_cast<int>(num / dal);
}

int RootSystem::pair(const Root& beta, const Root& alpha) const {
  return pair(require_root(beta.coeffs), require_root(alpha.coeffs));
}

int RootSystem::reflect(int beta, int alpha) const {
  int p = pair(beta, alpha);
  Coeffs s = roots_[beta];
  const Coeffs& a = roots_[alpha];
  for (int i = 0; i < type_.rank; ++i) s[i] -= p * a[i];
  auto it = index_.find(s);
  if (it == index_.end())
    throw internal_error("reflection left the root set in " +
                         to_string(type_));
  return it->second;
}

Root RootSystem::reflect(const Root& beta, const Root& alpha) const {
  return Root{roots_[reflect(require_root(beta.coeffs),
                             require_root(alpha.coeffs))]};
}

const RootSystem& root_system(SimpleType t) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) {
    it = cache.emplace(t, std::make_unique<RootSystem>(RootSystem::build(t)))
             .first;
  }
  return *it->second;
}

long long positive_root_count(SimpleType t) {
  check_type(t);
  const long long n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

long long weyl_order(SimpleType t) {
  check_type(t);
  const int n = t.rank;
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1LL << n) * fact(n);
    case 'D': return (1LL << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return -1;
}

}  // namespace schub
