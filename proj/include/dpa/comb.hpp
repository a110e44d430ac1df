#pragma once
#include "dpa/coeff.hpp"
#include "dpa/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

namespace dpa {

// ---------------------------------------------------------------------------
// Composition: finite sequence of non-negative parts (zero parts allowed).
// ---------------------------------------------------------------------------
struct Composition {
  std::vector<long long> parts;

  Composition() = default;
  Composition(std::initializer_list<long long> p) : parts(p) { validate(); }
  explicit Composition(std::vector<long long> p) : parts(std::move(p)) { validate(); }

  long long sum() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
  int len() const { return (int)parts.size(); }
  long long operator[](int i) const { return parts[i]; }

  bool operator==(const Composition &o) const { return parts == o.parts; }
  auto operator<=>(const Composition &o) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < len(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
  }

private:
  void validate() const {
    for (long long p : parts) require(p >= 0, "negative composition part");
  }
};

// r o_i q: splice q into position i (1-based); q must sum to r_i.
inline Composition compose_composition(const Composition &r, int i, const Composition &q) {
  require(1 <= i && i <= r.len(), "index out of range");
  require(q.sum() == r[i - 1], "q does not sum to r_i");
  std::vector<long long> out;
  for (int j = 0; j < i - 1; ++j) out.push_back(r[j]);
  for (long long v : q.parts) out.push_back(v);
  for (int j = i; j < r.len(); ++j) out.push_back(r[j]);
  return Composition(out);
}

// ---------------------------------------------------------------------------
// SetPartition: ordered disjoint blocks (possibly empty) covering [n].
// ---------------------------------------------------------------------------
struct SetPartition {
  long long n = 0;
  std::vector<std::vector<long long>> blocks; // each sorted

  SetPartition() = default;
  SetPartition(long long n_, std::vector<std::vector<long long>> b) : n(n_), blocks(std::move(b)) {
    for (auto &blk : blocks) std::sort(blk.begin(), blk.end());
    std::vector<char> seen(n + 1, 0);
    long long cnt = 0;
    for (auto &blk : blocks)
      for (long long e : blk) {
        require(1 <= e && e <= n, "element out of range");
        require(!seen[e], "blocks not disjoint");
        seen[e] = 1;
        ++cnt;
      }
    require(cnt == n, "blocks do not cover the ground set");
  }

  int num_blocks() const { return (int)blocks.size(); }

  // block index (1-based) of element e
  int owner(long long e) const {
    for (int i = 0; i < num_blocks(); ++i)
      if (std::binary_search(blocks[i].begin(), blocks[i].end(), e)) return i + 1;
    fail("element not found");
  }

  bool operator==(const SetPartition &o) const { return n == o.n && blocks == o.blocks; }
  auto operator<=>(const SetPartition &o) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < num_blocks(); ++i) {
      if (i) os << ',';
      if (blocks[i].empty()) {
        os << "{}";
      } else {
        os << '{';
        for (size_t j = 0; j < blocks[i].size(); ++j) os << (j ? "," : "") << blocks[i][j];
        os << '}';
      }
    }
    os << ')';
    return os.str();
  }
};

// iota(r): consecutive intervals of sizes r_i.
inline SetPartition iota(const Composition &r) {
  std::vector<std::vector<long long>> blocks;
  long long at = 0;
  for (long long ri : r.parts) {
    std::vector<long long> blk;
    for (long long j = 1; j <= ri; ++j) blk.push_back(at + j);
    at += ri;
    blocks.push_back(std::move(blk));
  }
  return SetPartition(at, std::move(blocks));
}

// pr(R): block sizes.
inline Composition pr(const SetPartition &R) {
  std::vector<long long> parts;
  for (auto &b : R.blocks) parts.push_back((long long)b.size());
  return Composition(parts);
}

// Q |> R: block i of the result is the union of R_j over j in Q_i.
inline SetPartition rhd(const SetPartition &Q, const SetPartition &R) {
  require(Q.n == R.num_blocks(), "arity mismatch in |>");
  std::vector<std::vector<long long>> blocks;
  for (auto &qb : Q.blocks) {
    std::vector<long long> blk;
    for (long long j : qb)
      for (long long e : R.blocks[j - 1]) blk.push_back(e);
    blocks.push_back(std::move(blk));
  }
  return SetPartition(R.n, std::move(blocks));
}

// R (x) Q: concatenate with Q's blocks shifted by R.n.
inline SetPartition tensor_partitions(const SetPartition &R, const SetPartition &Q) {
  std::vector<std::vector<long long>> blocks = R.blocks;
  for (auto &qb : Q.blocks) {
    std::vector<long long> blk;
    for (long long e : qb) blk.push_back(e + R.n);
    blocks.push_back(std::move(blk));
  }
  return SetPartition(R.n + Q.n, std::move(blocks));
}

// gamma_k(R): block i is the union of R_i + j*n over j < k. gamma_0 gives the
// empty blocks on ground set [0].
inline SetPartition gamma_k(const SetPartition &R, long long k) {
  require(k >= 0, "negative iteration count");
  std::vector<std::vector<long long>> blocks(R.num_blocks());
  for (long long j = 0; j < k; ++j)
    for (int i = 0; i < R.num_blocks(); ++i)
      for (long long e : R.blocks[i]) blocks[i].push_back(e + j * R.n);
  return SetPartition(k * R.n, std::move(blocks));
}

// r <> (Q_1,...,Q_p) = gamma_{r_1}(Q_1) (x) ... (x) gamma_{r_p}(Q_p).
inline SetPartition diamond(const Composition &r, const std::vector<SetPartition> &Qs) {
  require((int)Qs.size() == r.len(), "length mismatch in <>");
  SetPartition acc(0, {});
  for (int i = 0; i < r.len(); ++i) acc = tensor_partitions(acc, gamma_k(Qs[i], r[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// Permutation of [n]; composition convention (s*t)(x) = s(t(x)).
// ---------------------------------------------------------------------------
struct Perm {
  std::vector<long long> img; // img[i-1] = image of i

  Perm() = default;
  explicit Perm(std::vector<long long> images) : img(std::move(images)) {
    std::vector<char> seen(img.size() + 1, 0);
    for (long long v : img) {
      require(1 <= v && v <= (long long)img.size() && !seen[v], "not a bijection");
      seen[v] = 1;
    }
  }
  static Perm identity(long long n) {
    std::vector<long long> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Perm(std::move(im));
  }
  static Perm transposition(long long n, long long a, long long b) {
    Perm p = identity(n);
    std::swap(p.img[a - 1], p.img[b - 1]);
    return p;
  }

  long long n() const { return (long long)img.size(); }
  long long operator()(long long x) const { return img[x - 1]; }

  Perm inverse() const {
    std::vector<long long> im(img.size());
    for (long long i = 1; i <= n(); ++i) im[img[i - 1] - 1] = i;
    return Perm(std::move(im));
  }
  friend Perm operator*(const Perm &s, const Perm &t) {
    require(s.n() == t.n(), "degree mismatch");
    std::vector<long long> im(s.img.size());
    for (long long i = 1; i <= s.n(); ++i) im[i - 1] = s(t(i));
    return Perm(std::move(im));
  }
  bool is_identity() const {
    for (long long i = 1; i <= n(); ++i)
      if (img[i - 1] != i) return false;
    return true;
  }
  bool operator==(const Perm &o) const { return img == o.img; }
  auto operator<=>(const Perm &o) const = default;

  std::string str() const {
    std::vector<char> done(n() + 1, 0);
    std::ostringstream os;
    bool any = false;
    for (long long i = 1; i <= n(); ++i) {
      if (done[i] || img[i - 1] == i) continue;
      os << '(';
      long long j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = 1;
        os << (first ? "" : " ") << j;
        first = false;
        j = img[j - 1];
      }
      os << ')';
      any = true;
    }
    return any ? os.str() : "id";
  }
};

// rho*: block permutation moving the i-th iota(r)-interval onto the rho(i)-th
// interval of r^rho (the composition (r_{rho^{-1}(1)},...)), order-preserving
// within blocks.
inline Perm block_permutation(const Perm &rho, const Composition &r) {
  require(rho.n() == r.len(), "degree mismatch");
  std::vector<long long> rperm(r.len()); // r^rho
  for (int i = 1; i <= r.len(); ++i) rperm[rho(i) - 1] = r[i - 1];
  std::vector<long long> start(r.len() + 1, 0); // start of interval j in r^rho
  for (int j = 1; j <= r.len(); ++j) start[j] = start[j - 1] + rperm[j - 1];
  std::vector<long long> img(r.sum());
  long long at = 0;
  for (int i = 1; i <= r.len(); ++i) {
    long long base = start[rho(i) - 1];
    for (long long k = 1; k <= r[i - 1]; ++k) img[at + k - 1] = base + k;
    at += r[i - 1];
  }
  return Perm(std::move(img));
}

// Left coset representatives of the Young subgroup S_r in S_n, one per coset,
// each increasing on every iota(r)-block; ordered lexicographically by image
// sequence.
inline std::vector<Perm> coset_representatives(long long n, const Composition &r) {
  require(r.sum() == n, "composition does not sum to n");
  std::vector<Perm> out;
  std::vector<long long> img(n);
  std::vector<char> used(n + 1, 0);
  // assign images block by block; within a block images must increase, so pick
  // an increasing sequence of unused values
  std::vector<std::pair<long long, long long>> spans; // (start,len) per block
  long long at = 0;
  for (long long ri : r.parts) {
    spans.push_back({at, ri});
    at += ri;
  }
  auto rec = [&](auto &&self, size_t bi) -> void {
    if (bi == spans.size()) {
      out.push_back(Perm(img));
      return;
    }
    auto [st, len] = spans[bi];
    // choose an increasing run of unused values for positions st..st+len-1
    std::vector<long long> avail;
    for (long long v = 1; v <= n; ++v)
      if (!used[v]) avail.push_back(v);
    auto pick = [&](auto &&pickself, long long pos, long long lo) -> void {
      if (pos == len) {
        self(self, bi + 1);
        return;
      }
      for (long long a = lo; a < (long long)avail.size(); ++a) {
        img[st + pos] = avail[a];
        used[avail[a]] = 1;
        pickself(pickself, pos + 1, a + 1);
        used[avail[a]] = 0;
      }
    };
    pick(pick, 0, 0);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Young subgroup of a set partition: all permutations fixing every block.
inline std::vector<Perm> young_subgroup(const SetPartition &R) {
  std::vector<Perm> out{Perm::identity(R.n)};
  for (auto &blk : R.blocks) {
    if (blk.size() < 2) continue;
    std::vector<long long> arrangement(blk);
    std::vector<Perm> next;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      Perm p = Perm::identity(R.n);
      for (size_t i = 0; i < blk.size(); ++i) p.img[blk[i] - 1] = arrangement[i];
      for (auto &q : out) next.push_back(p * q);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The subgroup H = prod_i (S_{r_i} wr S_{q_i}) inside the Young subgroup of
// r <> (q_1,...,q_p): per part i, within-copy Young symmetries S_{q_i} in each
// of the r_i copies, and wholesale exchanges of the copies.
inline std::vector<Perm> wreath_subgroup(const Composition &r, const std::vector<Composition> &qs) {
  require((int)qs.size() == r.len(), "length mismatch");
  long long N = 0;
  for (int i = 0; i < r.len(); ++i) N += r[i] * qs[i].sum();
  std::vector<Perm> group{Perm::identity(N)};
  auto mul_in = [&](const std::vector<Perm> &gens) {
    // close group under the new generators (small sizes only)
    std::set<Perm> g(group.begin(), group.end());
    std::vector<Perm> frontier(g.begin(), g.end());
    for (auto &x : gens)
      if (!g.count(x)) {
        g.insert(x);
        frontier.push_back(x);
      }
    while (!frontier.empty()) {
      std::vector<Perm> nf;
      for (auto &a : frontier)
        for (auto &b : std::vector<Perm>(g.begin(), g.end())) {
          Perm c = a * b, d = b * a;
          if (!g.count(c)) {
            g.insert(c);
            nf.push_back(c);
          }
          if (!g.count(d)) {
            g.insert(d);
            nf.push_back(d);
          }
        }
      frontier = std::move(nf);
    }
    group.assign(g.begin(), g.end());
  };
  std::vector<Perm> gens;
  long long offset = 0;
  for (int i = 0; i < r.len(); ++i) {
    long long m = qs[i].sum();
    // within-copy Young generators per copy
    for (long long c = 0; c < r[i]; ++c) {
      long long base = offset + c * m;
      long long at = 0;
      for (long long part : qs[i].parts) {
        for (long long k = 1; k < part; ++k)
          gens.push_back(Perm::transposition(N, base + at + k, base + at + k + 1));
        at += part;
      }
    }
    // adjacent copy swaps
    for (long long c = 0; c + 1 < r[i]; ++c) {
      Perm p = Perm::identity(N);
      long long a = offset + c * m, b = offset + (c + 1) * m;
      for (long long k = 1; k <= m; ++k) {
        p.img[a + k - 1] = b + k;
        p.img[b + k - 1] = a + k;
      }
      gens.push_back(p);
    }
    offset += r[i] * m;
  }
  mul_in(gens);
  return group;
}

// Left coset representatives of H = prod_i (S_{r_i} wr S_{q_i}) inside the
// Young subgroup of r <> (q_1,...,q_p), enumerated combinatorially: a coset is
// determined, per part i, by the unordered collection of r_i copies, one copy
// being a tuple of disjoint subsets (the j-th of size q_{ij}, drawn from the
// j-th merged block). No group is materialized; representatives agree with
// wreath_coset_representatives up to coset equivalence.
inline std::vector<Perm> wreath_cosets(const Composition &r, const std::vector<Composition> &qs) {
  require((int)qs.size() == r.len(), "length mismatch");
  long long N = 0;
  std::vector<long long> goff(r.len());
  for (int i = 0; i < r.len(); ++i) {
    goff[i] = N;
    for (long long part : qs[i].parts) require(part >= 1, "empty inner part");
    N += r[i] * qs[i].sum();
  }
  // per group: all canonical copy collections, each as copies x blocks x positions
  using Copies = std::vector<std::vector<std::vector<long long>>>;
  std::vector<std::vector<Copies>> per_group(r.len());
  for (int i = 0; i < r.len(); ++i) {
    int nb = qs[i].len();
    long long m = qs[i].sum();
    std::vector<std::vector<long long>> remaining(nb);
    long long at = 0;
    for (int j = 0; j < nb; ++j) {
      for (long long c = 0; c < r[i]; ++c)
        for (long long k = 1; k <= qs[i][j]; ++k) remaining[j].push_back(goff[i] + c * m + at + k);
      std::sort(remaining[j].begin(), remaining[j].end());
      at += qs[i][j];
    }
    Copies cur;
    std::function<void(long long)> rec = [&](long long c) {
      if (c == r[i]) {
        per_group[i].push_back(cur);
        return;
      }
      // the copy containing the minimal unused element of block 1 comes next,
      // which enumerates unordered collections exactly once
      std::vector<std::vector<long long>> copy(qs[i].len());
      std::function<void(int)> pick_block = [&](int j) {
        if (j == qs[i].len()) {
          std::vector<std::vector<long long>> saved = remaining;
          for (int jj = 0; jj < qs[i].len(); ++jj) {
            std::vector<long long> rest;
            for (long long v : remaining[jj])
              if (std::find(copy[jj].begin(), copy[jj].end(), v) == copy[jj].end())
                rest.push_back(v);
            remaining[jj] = rest;
          }
          cur.push_back(copy);
          rec(c + 1);
          cur.pop_back();
          remaining = saved;
          return;
        }
        long long want = qs[i][j];
        const std::vector<long long> &pool = remaining[j];
        // choose `want` elements, forced to include pool[0] when j == 0
        std::vector<long long> chosen;
        std::function<void(size_t)> choose = [&](size_t lo) {
          if ((long long)chosen.size() == want) {
            copy[j] = chosen;
            pick_block(j + 1);
            return;
          }
          for (size_t a = lo; a < pool.size(); ++a) {
            if (j == 0 && chosen.empty() && a != 0) break;
            chosen.push_back(pool[a]);
            choose(a + 1);
            chosen.pop_back();
          }
        };
        choose(0);
      };
      pick_block(0);
    };
    rec(0);
  }
  // combine group choices into permutations
  std::vector<Perm> out;
  std::vector<size_t> idx(r.len(), 0);
  while (true) {
    std::vector<long long> img(N);
    for (int i = 0; i < r.len(); ++i) {
      const Copies &cs = per_group[i][idx[i]];
      long long m = qs[i].sum();
      for (long long c = 0; c < r[i]; ++c) {
        long long at = 0;
        for (int j = 0; j < qs[i].len(); ++j) {
          for (long long k = 0; k < qs[i][j]; ++k)
            img[goff[i] + c * m + at + k] = cs[c][j][k];
          at += qs[i][j];
        }
      }
    }
    out.push_back(Perm(img));
    int i = 0;
    while (i < r.len() && ++idx[i] == per_group[i].size()) idx[i++] = 0;
    if (i == r.len()) break;
  }
  return out;
}

// Left coset representatives of H = prod_i (S_{r_i} wr S_{q_i}) inside the
// Young subgroup of the partition r <> (q_1,...,q_p); canonical representative
// is the lexicographically minimal element of its coset.
inline std::vector<Perm> wreath_coset_representatives(const Composition &r,
                                                      const std::vector<Composition> &qs) {
  std::vector<SetPartition> iotas;
  for (auto &q : qs) iotas.push_back(iota(q));
  SetPartition D = diamond(r, iotas);
  std::vector<Perm> G = young_subgroup(D);
  std::vector<Perm> H = wreath_subgroup(r, qs);
  std::set<Perm> Hset(H.begin(), H.end());
  std::set<Perm> seen;
  std::vector<Perm> reps;
  std::sort(G.begin(), G.end());
  for (auto &g : G) {
    if (seen.count(g)) continue;
    reps.push_back(g); // lex-minimal unseen element of its coset
    for (auto &h : H) seen.insert(g * h);
  }
  require(reps.size() * H.size() == G.size(), "coset enumeration mismatch");
  return reps;
}

} // namespace dpa
