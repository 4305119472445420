#include "schub/schubert.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>

namespace schub {

std::string to_string(const MarkedDiagram& d) {
  return to_string(d.type) + ":" + std::to_string(d.k + 1);
}

namespace {

std::vector<int> unipotent_root_ids(const RootSystem& rs, int k) {
  rs.check_node(k);
  std::vector<int> out;
  for (int id = 0; id < rs.positive_count(); ++id)
    if (rs.coeff(id, k) > 0) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------
// Optional on-disk cache of the Bruhat tables (cosets as reduced words plus
// the cover graph), keyed by SCHUB_CACHE_DIR. Binary format "SCHUBBR1":
// magic, family byte, rank/node u32s, then length-prefixed u8 words and
// fixed-width cover records, little-endian as written by this build. A file
// that fails any structural check is ignored and rewritten; the cache can
// only ever skip recomputation, never change results that recompute cleanly.
// ---------------------------------------------------------------------------

constexpr char kCacheMagic[8] = {'S', 'C', 'H', 'U', 'B', 'B', 'R', '1'};

struct RawTables {
  std::vector<std::vector<int>> words;
  std::vector<Cover> covers;
};

std::optional<std::filesystem::path> cache_file(const MarkedDiagram& d) {
  const char* dir = std::getenv("SCHUB_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) /
         (to_string(d.type) + "-" + std::to_string(d.k + 1) + ".bbr1");
}

template <class T>
bool read_pod(std::istream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  return static_cast<bool>(in);
}

template <class T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

std::optional<RawTables> load_tables(const MarkedDiagram& d,
                                     const RootSystem& rs) {
  const auto path = cache_file(d);
  if (!path) return std::nullopt;
  std::ifstream in(*path, std::ios::binary);
  if (!in) return std::nullopt;

  char magic[8];
  in.read(magic, 8);
  if (!in || !std::equal(magic, magic + 8, kCacheMagic)) return std::nullopt;
  char family = 0;
  std::uint32_t rank = 0, node = 0, ncosets = 0, ncovers = 0;
  if (!read_pod(in, family) || !read_pod(in, rank) || !read_pod(in, node) ||
      !read_pod(in, ncosets) || !read_pod(in, ncovers))
    return std::nullopt;
  if (family != d.type.family || rank != std::uint32_t(d.type.rank) ||
      node != std::uint32_t(d.k))
    return std::nullopt;
  if (ncosets == 0 || ncosets > (1u << 26) || ncovers > (1u << 28))
    return std::nullopt;

  RawTables raw;
  raw.words.resize(ncosets);
  for (auto& word : raw.words) {
    std::uint16_t len = 0;
    if (!read_pod(in, len) || len > 4096) return std::nullopt;
    word.resize(len);
    for (auto& letter : word) {
      std::uint8_t l = 0;
      if (!read_pod(in, l) || l >= rank) return std::nullopt;
      letter = l;
    }
  }
  raw.covers.resize(ncovers);
  for (Cover& c : raw.covers) {
    std::uint32_t from = 0, to = 0, root = 0;
    std::int64_t weight = 0;
    if (!read_pod(in, from) || !read_pod(in, to) || !read_pod(in, root) ||
        !read_pod(in, weight))
      return std::nullopt;
    if (from >= ncosets || to >= ncosets ||
        root >= std::uint32_t(rs.positive_count()) || weight <= 0)
      return std::nullopt;
    c = Cover{static_cast<int>(from), static_cast<int>(to),
              static_cast<int>(root), weight};
  }
  return raw;
}

void save_tables(const MarkedDiagram& d,
                 const std::vector<WeylElement>& cosets,
                 const RootSystem& rs, const std::vector<Cover>& covers) {
  const auto path = cache_file(d);
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  if (ec) return;
  std::filesystem::path staging = *path;
  staging += ".tmp";
  {
    std::ofstream out(staging, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(kCacheMagic, 8);
    write_pod(out, d.type.family);
    write_pod(out, std::uint32_t(d.type.rank));
    write_pod(out, std::uint32_t(d.k));
    write_pod(out, std::uint32_t(cosets.size()));
    write_pod(out, std::uint32_t(covers.size()));
    for (const WeylElement& w : cosets) {
      const auto word = reduced_word(rs, w);
      write_pod(out, std::uint16_t(word.size()));
      for (int letter : word) write_pod(out, std::uint8_t(letter));
    }
    for (const Cover& c : covers) {
      write_pod(out, std::uint32_t(c.from));
      write_pod(out, std::uint32_t(c.to));
      write_pod(out, std::uint32_t(c.root));
      write_pod(out, std::int64_t(c.weight));
    }
    if (!out) return;
  }
  std::filesystem::rename(staging, *path, ec);
  if (ec) std::filesystem::remove(staging, ec);
}

}  // namespace

std::shared_ptr<const MarkedContext> MarkedContext::get(
    const MarkedDiagram& d) {
  static std::mutex mu;
  static std::map<MarkedDiagram, std::shared_ptr<const MarkedContext>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }

  const RootSystem& rs = root_system(d.type);
  auto ctx = std::shared_ptr<MarkedContext>(new MarkedContext());
  ctx->d_ = d;
  ctx->rs_ = &rs;
  ctx->upos_ = unipotent_root_ids(rs, d.k);

  // Restore the Bruhat tables from the cache when a structurally valid
  // file exists; otherwise compute them and (if caching is on) write them.
  bool restored = false;
  if (auto raw = load_tables(d, rs)) {
    restored = true;
    ctx->cosets_.reserve(raw->words.size());
    for (const auto& word : raw->words) {
      ctx->cosets_.push_back(from_word(rs, word));
      const WeylElement& w = ctx->cosets_.back();
      const int len = length(rs, w);
      if (len != static_cast<int>(word.size()) ||
          !is_minimal_rep(rs, w, d.k)) {
        restored = false;
        break;
      }
      ctx->lengths_.push_back(len);
      const size_t i = ctx->cosets_.size() - 1;
      if (i > 0) {
        const int prev = ctx->lengths_[i - 1];
        if (prev > len || (prev == len && !(ctx->cosets_[i - 1] < w))) {
          restored = false;  // must be sorted by (length, permutation)
          break;
        }
      }
    }
    if (restored) {
      const int n = static_cast<int>(ctx->cosets_.size());
      ctx->up_.assign(n, {});
      ctx->down_.assign(n, {});
      for (const Cover& c : raw->covers) {
        if (ctx->lengths_[c.to] != ctx->lengths_[c.from] + 1 ||
            rs.coeff(c.root, d.k) <= 0) {
          restored = false;
          break;
        }
        ctx->up_[c.from].push_back(static_cast<int>(ctx->covers_.size()));
        ctx->down_[c.to].push_back(static_cast<int>(ctx->covers_.size()));
        ctx->covers_.push_back(c);
      }
    }
    if (!restored) {
      ctx->cosets_.clear();
      ctx->lengths_.clear();
      ctx->covers_.clear();
      ctx->up_.clear();
      ctx->down_.clear();
    }
  }

  if (!restored) {
    ctx->cosets_ = minimal_reps(rs, d.k);
    const int n = static_cast<int>(ctx->cosets_.size());
    ctx->lengths_.reserve(n);
    for (const WeylElement& w : ctx->cosets_)
      ctx->lengths_.push_back(length(rs, w));

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) {
      std::vector<int> key(rs.rank());
      for (int j = 0; j < rs.rank(); ++j)
        key[j] = ctx->cosets_[i].apply(rs.simple_id(j));
      index.emplace(std::move(key), i);
    }
    auto find = [&rs, &index](const WeylElement& w) {
      std::vector<int> key(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) key[j] = w.apply(rs.simple_id(j));
      auto it = index.find(key);
      return it == index.end() ? -1 : it->second;
    };

    // Cover graph: u -> u s_beta with length going up by one, both minimal.
    // Only roots with positive marked coefficient can move between cosets.
    // The hyperplane coefficient of the step is the marked coordinate of the
    // coroot of beta: coeff_k(beta) * d_k / d_beta, a positive integer.
    ctx->up_.assign(n, {});
    ctx->down_.assign(n, {});
    const int dk = rs.norm2_half(rs.simple_id(d.k));
    for (int ui = 0; ui < n; ++ui) {
      for (int beta : ctx->upos_) {
        WeylElement v = compose(ctx->cosets_[ui], reflection(rs, beta));
        if (length(rs, v) != ctx->lengths_[ui] + 1) continue;
        int vi = find(v);
        if (vi < 0) continue;
        long long num = static_cast<long long>(rs.coeff(beta, d.k)) * dk;
        if (num % rs.norm2_half(beta) != 0)
          throw internal_error("non-integral hyperplane coefficient in " +
                               to_string(d));
        Cover c{ui, vi, beta, num / rs.norm2_half(beta)};
        if (c.weight <= 0)
          throw internal_error("non-positive hyperplane coefficient in " +
                               to_string(d));
        ctx->up_[ui].push_back(static_cast<int>(ctx->covers_.size()));
        ctx->down_[vi].push_back(static_cast<int>(ctx->covers_.size()));
        ctx->covers_.push_back(c);
      }
    }
    save_tables(d, ctx->cosets_, rs, ctx->covers_);
  }

  const int n = static_cast<int>(ctx->cosets_.size());

  // Degrees by dynamic programming over the graded cover graph: the point
  // class has degree 1; each representative accumulates weighted chains.
  ctx->degrees_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (ctx->lengths_[i] == 0) {
      ctx->degrees_[i] = 1;
      continue;
    }
    long long total = 0;
    for (int ci : ctx->down_[i]) {
      const Cover& c = ctx->covers_[ci];
      total += c.weight * ctx->degrees_[c.from];
    }
    if (total <= 0)
      throw internal_error("degree recursion failed in " + to_string(d));
    ctx->degrees_[i] = total;
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(d, ctx);
  return it->second;
}

int MarkedContext::index_of(const WeylElement& w) const {
  // cosets_ is sorted by (length, permutation), so binary search applies.
  auto lo = std::lower_bound(cosets_.begin(), cosets_.end(), w,
                             [this](const WeylElement& a, const WeylElement& b) {
                               int la = length(*rs_, a);
                               int lb = length(*rs_, b);
                               return la != lb ? la < lb : a < b;
                             });
  if (lo != cosets_.end() && *lo == w)
    return static_cast<int>(lo - cosets_.begin());
  return -1;
}

std::vector<int> MarkedContext::lower_interval(int idx) const {
  std::vector<char> seen(cosets_.size(), 0);
  std::vector<int> stack{idx}, out;
  seen[idx] = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (int ci : down_[cur]) {
      int from = covers_[ci].from;
      if (!seen[from]) {
        seen[from] = 1;
        stack.push_back(from);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SchubertVariety make_schubert(const MarkedDiagram& d, const WeylElement& w) {
  auto ctx = MarkedContext::get(d);
  const RootSystem& rs = ctx->rs();
  if (!is_minimal_rep(rs, w, d.k))
    throw input_error("element is not a minimal coset representative for " +
                      to_string(d));
  return SchubertVariety{d, w};
}

SchubertVariety make_schubert(const MarkedDiagram& d,
                              const std::vector<int>& word) {
  const RootSystem& rs = root_system(d.type);
  return make_schubert(d, from_word(rs, word));
}

int dim(const SchubertVariety& sv) {
  return length(root_system(sv.d.type), sv.w);
}

std::vector<int> stabilizer_levi_set(const SchubertVariety& sv) {
  const RootSystem& rs = root_system(sv.d.type);
  WeylElement winv = inverse(sv.w);
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    int image = winv.apply(rs.simple_id(i));
    // alpha_i keeps the variety stable when w^{-1}(alpha_i) lies in the
    // opposite parabolic: negative, or zero on the marked node.
    if (rs.coeff(image, sv.d.k) <= 0) out.push_back(i);
  }
  return out;
}

std::vector<int> tangent_roots(const SchubertVariety& sv) {
  return inversion_set(root_system(sv.d.type), inverse(sv.w));
}

std::vector<int> tangent_curve_roots(const SchubertVariety& sv) {
  const RootSystem& rs = root_system(sv.d.type);
  const auto ctx_ptr = MarkedContext::get(sv.d);
  const MarkedContext& ctx = *ctx_ptr;
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != sv.d.k) levi.push_back(i);
  std::vector<int> out;
  for (int beta : ctx.unipotent_roots()) {
    // Shortest element of reflection * W_levi: reduce the left coset of the
    // inverse (a reflection is its own inverse) and invert back.
    const WeylElement u =
        inverse(min_in_left_coset(rs, levi, reflection(rs, beta)));
    if (bruhat_leq(rs, u, sv.w)) out.push_back(beta);
  }
  return out;
}

std::vector<int> tangent_roots_subdiagram(const MarkedDiagram& d,
                                          const Subdiagram& sd) {
  const RootSystem& rs = root_system(d.type);
  Subdiagram s = make_subdiagram(d, sd.nodes);
  std::vector<char> inside(rs.rank(), 0);
  for (int i : s.nodes) inside[i] = 1;
  std::vector<int> out;
  for (int id = 0; id < rs.positive_count(); ++id) {
    if (rs.coeff(id, d.k) <= 0) continue;
    bool supported = true;
    for (int i = 0; i < rs.rank() && supported; ++i)
      if (rs.coeff(id, i) != 0 && !inside[i]) supported = false;
    if (supported) out.push_back(rs.negate(id));
  }
  return out;
}

std::vector<int> lambda_adjacent(const MarkedDiagram& d, const Subdiagram& sd) {
  const RootSystem& rs = root_system(d.type);
  Subdiagram s = make_subdiagram(d, sd.nodes);
  std::vector<char> inside(rs.rank(), 0);
  for (int i : s.nodes) inside[i] = 1;
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    if (inside[i]) continue;
    for (int j : s.nodes)
      if (rs.adjacent(i, j)) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

SchubertVariety subdiagram_to_weyl(const MarkedDiagram& d,
                                   const Subdiagram& sd) {
  const RootSystem& rs = root_system(d.type);
  std::vector<int> target;
  for (int neg : tangent_roots_subdiagram(d, sd))
    target.push_back(rs.negate(neg));
  std::set<int> want(target.begin(), target.end());

  // Realize the set as an inversion set: peel a simple root contained in it,
  // reflect the remainder, and read the word off from the right.
  std::set<int> cur = want;
  std::vector<int> letters;
  while (!cur.empty()) {
    int node = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (cur.count(rs.simple_id(i))) {
        node = i;
        break;
      }
    if (node < 0)
      throw internal_error("no reflection-group element realizes the cell of " +
                           to_string(d));
    cur.erase(rs.simple_id(node));
    std::set<int> next;
    for (int id : cur) next.insert(rs.simple_reflect(node, id));
    cur = std::move(next);
    letters.push_back(node);
  }
  std::reverse(letters.begin(), letters.end());

  WeylElement w = from_word(rs, letters);
  std::vector<int> inv = inversion_set(rs, w);
  if (std::set<int>(inv.begin(), inv.end()) != want || !is_minimal_rep(rs, w, d.k))
    throw internal_error("subdiagram cell realization failed for " +
                         to_string(d));
  return SchubertVariety{d, w};
}

std::vector<long long> poincare_polynomial(const SchubertVariety& sv) {
  auto ctx = MarkedContext::get(sv.d);
  int idx = ctx->index_of(sv.w);
  if (idx < 0) throw internal_error("representative missing from its context");
  std::vector<long long> coeffs(ctx->length_of(idx) + 1, 0);
  for (int i : ctx->lower_interval(idx)) ++coeffs[ctx->length_of(i)];
  return coeffs;
}

long long degree(const SchubertVariety& sv) {
  auto ctx = MarkedContext::get(sv.d);
  int idx = ctx->index_of(sv.w);
  if (idx < 0) throw internal_error("representative missing from its context");
  return ctx->degree(idx);
}

bool is_linear(const SchubertVariety& sv) { return degree(sv) == 1; }

bool is_maximal_linear(const SchubertVariety& sv) {
  auto ctx = MarkedContext::get(sv.d);
  int idx = ctx->index_of(sv.w);
  if (idx < 0) throw internal_error("representative missing from its context");
  if (ctx->degree(idx) != 1)
    throw input_error("maximality is defined for linear varieties only");
  for (int ci : ctx->covers_up()[idx])
    if (ctx->degree(ctx->covers()[ci].to) == 1) return false;
  return true;
}

bool is_rationally_smooth(const SchubertVariety& sv) {
  std::vector<long long> p = poincare_polynomial(sv);
  for (std::size_t i = 0, j = p.size() - 1; i < j; ++i, --j)
    if (p[i] != p[j]) return false;
  return true;
}

OppositeVariety opposite(const SchubertVariety& sv) {
  auto ctx = MarkedContext::get(sv.d);
  const RootSystem& rs = ctx->rs();
  OppositeVariety t;
  t.d = sv.d;
  t.w = sv.w;
  t.dimension = ctx->space_dim() - length(rs, sv.w);
  WeylElement winv = inverse(sv.w);
  for (int i = 0; i < rs.rank(); ++i) {
    // Mirrored stabilizer: alpha_i keeps the opposite cell closure stable
    // when w^{-1}(alpha_i) lies in the standard parabolic.
    if (rs.coeff(winv.apply(rs.simple_id(i)), sv.d.k) >= 0)
      t.stabilizer_levi.push_back(i);
  }
  return t;
}

Subdiagram make_subdiagram(const MarkedDiagram& d, std::vector<int> nodes) {
  const RootSystem& rs = root_system(d.type);
  if (nodes.empty()) throw input_error("empty subdiagram");
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int i : nodes) rs.check_node(i);
  // The marked node need not belong to the subdiagram: a subdiagram away
  // from it carries the zero-dimensional orbit (the base point).
  // Connectivity over diagram edges.
  std::vector<int> stack{nodes[0]};
  std::set<int> seen{nodes[0]};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int j : nodes)
      if (!seen.count(j) && rs.adjacent(cur, j)) {
        seen.insert(j);
        stack.push_back(j);
      }
  }
  if (static_cast<int>(seen.size()) != static_cast<int>(nodes.size()))
    throw input_error("subdiagram nodes are not connected in " + to_string(d));
  return Subdiagram{std::move(nodes)};
}

std::vector<Subdiagram> connected_subdiagrams(const MarkedDiagram& d) {
  const RootSystem& rs = root_system(d.type);
  const int n = rs.rank();
  std::vector<Subdiagram> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << d.k))) continue;
    if (mask == (1u << n) - 1) continue;  // proper subsets only
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    try {
      out.push_back(make_subdiagram(d, nodes));
    } catch (const input_error&) {
      continue;  // disconnected
    }
  }
  std::sort(out.begin(), out.end(), [](const Subdiagram& a, const Subdiagram& b) {
    return a.nodes.size() != b.nodes.size() ? a.nodes.size() < b.nodes.size()
                                            : a.nodes < b.nodes;
  });
  return out;
}

}  // namespace schub
