#include "genuslab/census.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genuslab {

int GluingCensus::class_index(int g, const CanonicalForm& cf) const {
  if (g < 0 || g >= static_cast<int>(classes.size())) return -1;
  const auto& v = classes[g];
  auto it = std::lower_bound(v.begin(), v.end(), cf);
  if (it == v.end() || !(*it == cf)) return -1;
  return static_cast<int>(it - v.begin());
}

RootedMap gluing_map(int n, const std::vector<Dart>& alpha, Dart root) {
  const std::size_t nd = static_cast<std::size_t>(6) * n;
  if (alpha.size() != nd) throw Error(ErrorCode::NotAPermutation, "alpha has wrong length");
  std::vector<Dart> sigma(nd);
  for (Dart d = 0; d < nd; ++d) sigma[d] = triangle_phi(alpha[d]);
  return RootedMap::build(std::move(sigma), alpha, root);
}

namespace {

constexpr int kMaxDarts = 18;  // n <= 3

// canonical (sigma, alpha) pair packed into bytes; zero padded to a whole
// number of 8-byte words so hashing never reads past the array
struct Key {
  static constexpr int kBytes = ((2 * kMaxDarts + 7) / 8) * 8;
  std::array<std::uint8_t, kBytes> bytes{};
  bool operator==(const Key& o) const { return bytes == o.bytes; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < Key::kBytes; i += 8) {
      std::uint64_t chunk;
      std::memcpy(&chunk, k.bytes.data() + i, 8);
      h ^= chunk;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Accumulator {
  int n = 0, nd = 0, gmax = 0;
  std::uint64_t matchings = 0;
  std::vector<std::uint64_t> connected_by_genus;
  std::vector<std::unordered_set<Key, KeyHash>> sets;

  explicit Accumulator(int n_) : n(n_), nd(6 * n_), gmax((n_ + 1) / 2) {
    connected_by_genus.assign(gmax + 1, 0);
    sets.resize(gmax + 1);
  }

  void merge(Accumulator&& o) {
    matchings += o.matchings;
    for (int g = 0; g <= gmax; ++g) {
      connected_by_genus[g] += o.connected_by_genus[g];
      sets[g].insert(o.sets[g].begin(), o.sets[g].end());
    }
  }
};

struct Worker {
  int n, nd;
  std::array<std::uint8_t, kMaxDarts> alpha{};  // 0xff = unmatched
  Accumulator acc;

  // scratch buffers
  std::array<std::uint8_t, kMaxDarts> sigma{}, label{}, order{}, stack{};

  explicit Worker(int n_) : n(n_), nd(6 * n_), acc(n_) { alpha.fill(0xff); }

  void process_leaf() {
    ++acc.matchings;
    for (int d = 0; d < nd; ++d) sigma[d] = static_cast<std::uint8_t>(triangle_phi(alpha[d]));
    // connectivity over <sigma, alpha>
    label.fill(0);
    int sp = 0, reached = 1;
    stack[sp++] = 0;
    label[0] = 1;
    while (sp > 0) {
      int d = stack[--sp];
      for (int e : {static_cast<int>(sigma[d]), static_cast<int>(alpha[d])}) {
        if (!label[e]) {
          label[e] = 1;
          ++reached;
          stack[sp++] = static_cast<std::uint8_t>(e);
        }
      }
    }
    if (reached != nd) return;
    // genus via sigma orbit count: 2g = 2 - V + n
    label.fill(0);
    int vertices = 0;
    for (int d = 0; d < nd; ++d) {
      if (label[d]) continue;
      ++vertices;
      for (int e = d; !label[e]; e = sigma[e]) label[e] = 1;
    }
    const int g = (2 - vertices + n) / 2;
    ++acc.connected_by_genus[g];
    auto& set = acc.sets[g];
    for (int root = 0; root < nd; ++root) {
      // BFS canonicalization, sigma-successor before alpha-partner
      label.fill(0xff);
      label[root] = 0;
      order[0] = static_cast<std::uint8_t>(root);
      int count = 1;
      for (int head = 0; head < count; ++head) {
        int d = order[head];
        int s = sigma[d];
        if (label[s] == 0xff) {
          label[s] = static_cast<std::uint8_t>(count);
          order[count++] = static_cast<std::uint8_t>(s);
        }
        int a = alpha[d];
        if (label[a] == 0xff) {
          label[a] = static_cast<std::uint8_t>(count);
          order[count++] = static_cast<std::uint8_t>(a);
        }
      }
      Key key;
      for (int d = 0; d < nd; ++d) {
        key.bytes[label[d]] = label[sigma[d]];
        key.bytes[kMaxDarts + label[d]] = label[alpha[d]];
      }
      set.insert(key);
    }
  }

  void recurse() {
    int a = -1;
    for (int d = 0; d < nd; ++d) {
      if (alpha[d] == 0xff) {
        a = d;
        break;
      }
    }
    if (a < 0) {
      process_leaf();
      return;
    }
    for (int b = a + 1; b < nd; ++b) {
      if (alpha[b] != 0xff) continue;
      alpha[a] = static_cast<std::uint8_t>(b);
      alpha[b] = static_cast<std::uint8_t>(a);
      recurse();
      alpha[a] = 0xff;
      alpha[b] = 0xff;
    }
  }
};

CanonicalForm unpack(const Key& k, int nd) {
  CanonicalForm cf;
  cf.sigma.resize(nd);
  cf.alpha.resize(nd);
  for (int d = 0; d < nd; ++d) {
    cf.sigma[d] = k.bytes[d];
    cf.alpha[d] = k.bytes[kMaxDarts + d];
  }
  return cf;
}

GluingCensus finish(Accumulator&& acc) {
  GluingCensus out;
  out.n = acc.n;
  out.matchings_total = acc.matchings;
  out.connected_by_genus = acc.connected_by_genus;
  for (auto c : acc.connected_by_genus) out.connected_total += c;
  out.classes.resize(acc.gmax + 1);
  for (int g = 0; g <= acc.gmax; ++g) {
    auto& v = out.classes[g];
    v.reserve(acc.sets[g].size());
    for (const Key& k : acc.sets[g]) v.push_back(unpack(k, acc.nd));
    std::sort(v.begin(), v.end());
  }
  return out;
}

void check_size(int n) {
  if (n < 1) throw Error(ErrorCode::SizeTooLarge, "n must be >= 1");
  if (n > 3) throw Error(ErrorCode::SizeTooLarge, "census limited to n <= 3");
}

}  // namespace

GluingCensus brute_force_census_serial(int n) {
  check_size(n);
  Worker w(n);
  w.recurse();
  return finish(std::move(w.acc));
}

GluingCensus brute_force_census(int n) {
  check_size(n);
  const int nd = 6 * n;
  // two fixed levels of the pairing tree as parallel tasks:
  // dart 0 pairs with b0, then the lowest remaining dart pairs with b1
  struct Prefix {
    std::uint8_t b0, a1, b1;
  };
  std::vector<Prefix> prefixes;
  for (int b0 = 1; b0 < nd; ++b0) {
    int a1 = (b0 == 1) ? 2 : 1;
    for (int b1 = a1 + 1; b1 < nd; ++b1) {
      if (b1 == b0) continue;
      prefixes.push_back({static_cast<std::uint8_t>(b0), static_cast<std::uint8_t>(a1),
                          static_cast<std::uint8_t>(b1)});
    }
  }

  Accumulator total(n);
#pragma omp parallel
  {
    Worker w(n);
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
      const Prefix& p = prefixes[i];
      w.alpha[0] = p.b0;
      w.alpha[p.b0] = 0;
      w.alpha[p.a1] = p.b1;
      w.alpha[p.b1] = p.a1;
      w.recurse();
      w.alpha[0] = w.alpha[p.b0] = w.alpha[p.a1] = w.alpha[p.b1] = 0xff;
    }
#pragma omp critical
    total.merge(std::move(w.acc));
  }
  return finish(std::move(total));
}

}  // namespace genuslab
