#include "schub/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace schub {

namespace {

constexpr long long kEnumerationCutoff = 1000000;

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Elements are determined by their action on the simple roots.
std::vector<int> simple_images(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> key(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) key[i] = w.apply(rs.simple_id(i));
  return key;
}

int find_left_descent(const RootSystem& rs, const WeylElement& winv) {
  // s_i w is shorter than w exactly when w^{-1}(alpha_i) is negative.
  for (int i = 0; i < rs.rank(); ++i)
    if (!rs.is_positive(winv.apply(rs.simple_id(i)))) return i;
  return -1;
}

}  // namespace

WeylElement identity_element(const RootSystem& rs) {
  std::vector<int> perm(rs.root_count());
  std::iota(perm.begin(), perm.end(), 0);
  return WeylElement(std::move(perm));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  rs.check_node(i);
  std::vector<int> perm(rs.root_count());
  for (int id = 0; id < rs.root_count(); ++id) perm[id] = rs.simple_reflect(i, id);
  return WeylElement(std::move(perm));
}

WeylElement reflection(const RootSystem& rs, int root_id) {
  std::vector<int> perm(rs.root_count());
  for (int id = 0; id < rs.root_count(); ++id) perm[id] = rs.reflect(id, root_id);
  return WeylElement(std::move(perm));
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.size() != b.size())
    throw internal_error("composing elements of different root systems");
  std::vector<int> perm(a.size());
  for (int id = 0; id < a.size(); ++id) perm[id] = a.apply(b.apply(id));
  return WeylElement(std::move(perm));
}

WeylElement inverse(const WeylElement& w) {
  std::vector<int> perm(w.size());
  for (int id = 0; id < w.size(); ++id) perm[w.apply(id)] = id;
  return WeylElement(std::move(perm));
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity_element(rs);
  for (int letter : word) {
    rs.check_node(letter);
    w = compose(w, simple_reflection(rs, letter));
  }
  return w;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> inv;
  for (int id = 0; id < rs.positive_count(); ++id)
    if (!rs.is_positive(w.apply(id))) inv.push_back(id);
  return inv;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int len = 0;
  for (int id = 0; id < rs.positive_count(); ++id)
    if (!rs.is_positive(w.apply(id))) ++len;
  return len;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  // Strip right descents: w(alpha_i) < 0 means w = w' s_i with w' shorter.
  std::vector<int> word;
  WeylElement cur = w;
  for (int len = length(rs, cur); len > 0; --len) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (!rs.is_positive(cur.apply(rs.simple_id(i)))) {
        descent = i;
        break;
      }
    if (descent < 0) throw internal_error("no descent on a non-identity element");
    word.push_back(descent);
    cur = compose(cur, simple_reflection(rs, descent));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& v,
                const WeylElement& w) {
  WeylElement cv = v, cw = w;
  while (true) {
    int lw = length(rs, cw);
    if (length(rs, cv) > lw) return false;
    if (lw == 0) return true;
    int i = find_left_descent(rs, inverse(cw));
    if (i < 0) throw internal_error("no descent on a non-identity element");
    WeylElement s = simple_reflection(rs, i);
    cw = compose(s, cw);
    WeylElement sv = compose(s, cv);
    if (length(rs, sv) < length(rs, cv)) cv = sv;
  }
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs) {
  const long long order = weyl_order(rs.type());
  if (order > kEnumerationCutoff)
    throw input_error("group of " + to_string(rs.type()) + " has order " +
                      std::to_string(order) +
                      ", beyond the enumeration cutoff of 10^6");

  std::vector<WeylElement> out;
  out.push_back(identity_element(rs));
  std::unordered_map<std::vector<int>, int, KeyHash> seen;
  seen.emplace(simple_images(rs, out[0]), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const WeylElement w = out[head];
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement next = compose(w, simple_reflection(rs, i));
      auto key = simple_images(rs, next);
      if (!seen.count(key)) {
        seen.emplace(std::move(key), static_cast<int>(out.size()));
        out.push_back(std::move(next));
      }
    }
  }
  if (static_cast<long long>(out.size()) != order)
    throw internal_error("group enumeration of " + to_string(rs.type()) +
                         " found " + std::to_string(out.size()) +
                         " elements, expected " + std::to_string(order));
  std::sort(out.begin(), out.end(),
            [&rs](const WeylElement& a, const WeylElement& b) {
              int la = length(rs, a), lb = length(rs, b);
              return la != lb ? la < lb : a < b;
            });
  return out;
}

bool is_minimal_rep(const RootSystem& rs, const WeylElement& w, int k) {
  rs.check_node(k);
  // w is minimal in w W_P exactly when it inverts no positive root of the
  // Levi part; it is enough to check the simple roots other than k.
  for (int i = 0; i < rs.rank(); ++i)
    if (i != k && !rs.is_positive(w.apply(rs.simple_id(i)))) return false;
  return true;
}

std::vector<WeylElement> minimal_reps(const RootSystem& rs, int k) {
  std::vector<WeylElement> reps;
  for (const WeylElement& w : enumerate_group(rs))
    if (is_minimal_rep(rs, w, k)) reps.push_back(w);
  return reps;  // enumerate_group is already (length, permutation)-sorted
}

WeylElement min_in_left_coset(const RootSystem& rs, const std::vector<int>& I,
                              const WeylElement& w) {
  WeylElement cur = w;
  WeylElement curinv = inverse(w);
  while (true) {
    int descent = -1;
    for (int i : I)
      if (!rs.is_positive(curinv.apply(rs.simple_id(i)))) {
        descent = i;
        break;
      }
    if (descent < 0) return cur;
    WeylElement s = simple_reflection(rs, descent);
    cur = compose(s, cur);
    curinv = compose(curinv, s);
  }
}

std::vector<WeylElement> double_coset_min_reps(const RootSystem& rs,
                                               const std::vector<int>& I,
                                               int k) {
  for (int i : I) rs.check_node(i);
  std::vector<WeylElement> reps = minimal_reps(rs, k);
  std::unordered_map<std::vector<int>, WeylElement, KeyHash> best;
  for (const WeylElement& w : reps) {
    auto key = simple_images(rs, min_in_left_coset(rs, I, w));
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), w);
    } else {
      int lw = length(rs, w), lb = length(rs, it->second);
      if (lw < lb || (lw == lb && w < it->second)) it->second = w;
    }
  }
  std::vector<WeylElement> out;
  out.reserve(best.size());
  for (auto& kv : best) out.push_back(kv.second);
  std::sort(out.begin(), out.end(),
            [&rs](const WeylElement& a, const WeylElement& b) {
              int la = length(rs, a), lb = length(rs, b);
              return la != lb ? la < lb : a < b;
            });
  return out;
}

}  // namespace schub
