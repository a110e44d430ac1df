#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpa/comb.hpp"

#include <random>

using namespace dpa;

static SetPartition sp(long long n, std::vector<std::vector<long long>> b) {
  return SetPartition(n, std::move(b));
}

TEST_CASE("iota and pr") {
  CHECK(iota(Composition{2, 1}) == sp(3, {{1, 2}, {3}}));
  CHECK(pr(sp(3, {{1, 3}, {2}})) == Composition{2, 1});
  CHECK(iota(Composition{0, 2}) == sp(2, {{}, {1, 2}}));
  for (auto &parts : compositions_of(5, 3)) CHECK(pr(iota(Composition(parts))) == Composition(parts));
}

TEST_CASE("compose_composition") {
  CHECK(compose_composition(Composition{3, 2}, 1, Composition{1, 2}) == (Composition{1, 2, 2}));
  CHECK(compose_composition(Composition{5}, 1, Composition{4, 1}) == (Composition{4, 1}));
  CHECK(compose_composition(Composition{1, 1}, 2, Composition{1}) == (Composition{1, 1}));
  CHECK_THROWS_AS(compose_composition(Composition{3, 2}, 1, Composition{1, 1}), domain_error);
}

TEST_CASE("rhd") {
  CHECK(rhd(iota(Composition{2, 1}), iota(Composition{1, 2, 3})) == iota(Composition{3, 3}));
  SetPartition R = sp(3, {{1, 3}, {2}});
  CHECK(rhd(sp(2, {{1}, {2}}), R) == R);
  CHECK(rhd(sp(2, {{2}, {1}}), R) == sp(3, {{2}, {1, 3}}));
  CHECK_THROWS_AS(rhd(sp(2, {{1}, {2}}), sp(3, {{1, 2, 3}})), domain_error);
  // composition-level formula: blocks of iota(q) |> iota(r) group consecutive r-parts
  CHECK(rhd(iota(Composition{1, 2}), iota(Composition{2, 1, 1})) == iota(Composition{2, 2}));
}

TEST_CASE("tensor_partitions") {
  CHECK(tensor_partitions(sp(2, {{1}, {2}}), sp(1, {{1}})) == sp(3, {{1}, {2}, {3}}));
  SetPartition R = sp(3, {{1, 3}, {2}});
  CHECK(tensor_partitions(R, R) == sp(6, {{1, 3}, {2}, {4, 6}, {5}}));
  CHECK(tensor_partitions(R, sp(0, {})) == R);
  // associativity on random triples
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto rand_sp = [&]() {
      long long n = rng() % 4;
      std::vector<std::vector<long long>> blocks(1 + rng() % 3);
      for (long long e = 1; e <= n; ++e) blocks[rng() % blocks.size()].push_back(e);
      return SetPartition(n, blocks);
    };
    SetPartition A = rand_sp(), B = rand_sp(), C = rand_sp();
    CHECK(tensor_partitions(tensor_partitions(A, B), C) ==
          tensor_partitions(A, tensor_partitions(B, C)));
  }
}

TEST_CASE("gamma_k") {
  SetPartition R = sp(3, {{1, 3}, {2}});
  CHECK(gamma_k(R, 3) == sp(9, {{1, 3, 4, 6, 7, 9}, {2, 5, 8}}));
  CHECK(gamma_k(R, 1) == R);
  CHECK(gamma_k(sp(2, {{1}, {2}}), 2) == sp(4, {{1, 3}, {2, 4}}));
  CHECK(gamma_k(R, 0) == sp(0, {{}, {}}));
  // |> formula: gamma_k(R) = ({i + (j-1)p}) |> R^{(x)k}
  for (int k = 1; k <= 3; ++k)
    for (auto &parts : compositions_of(4, 2)) {
      SetPartition S = iota(Composition(parts));
      SetPartition pow(0, {});
      for (int j = 0; j < k; ++j) pow = tensor_partitions(pow, S);
      int p = S.num_blocks();
      std::vector<std::vector<long long>> Q(p);
      for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= k; ++j) Q[i - 1].push_back(i + (j - 1) * p);
      CHECK(gamma_k(S, k) == rhd(SetPartition(k * p, Q), pow));
    }
}

TEST_CASE("diamond") {
  CHECK(diamond(Composition{3, 2}, {iota(Composition{2, 1}), iota(Composition{1, 2})}) ==
        sp(15, {{1, 2, 4, 5, 7, 8}, {3, 6, 9}, {10, 13}, {11, 12, 14, 15}}));
  SetPartition Q = sp(3, {{1, 3}, {2}});
  CHECK(diamond(Composition{1}, {Q}) == Q);
  CHECK(diamond(Composition{3}, {iota(Composition{1, 1})}) == sp(6, {{1, 3, 5}, {2, 4, 6}}));
  CHECK_THROWS_AS(diamond(Composition{1, 1}, {Q}), domain_error);
}

TEST_CASE("permutations") {
  Perm s({2, 3, 1});
  CHECK(s.str() == "(1 2 3)");
  CHECK((s * s).str() == "(1 3 2)");
  CHECK((s * s * s).is_identity());
  CHECK(s.inverse() == s * s);
  CHECK(Perm::identity(4).str() == "id");
  Perm t({3, 4, 1, 6, 5, 2});
  CHECK(t.str() == "(1 3)(2 4 6)");
}

TEST_CASE("block_permutation") {
  CHECK(block_permutation(Perm::identity(3), Composition{2, 1, 1}).is_identity());
  CHECK(block_permutation(Perm({2, 1}), Composition{2, 1}) == Perm({2, 3, 1}));
  CHECK(block_permutation(Perm({2, 1}), Composition{1, 1}) == Perm({2, 1}));
}

TEST_CASE("coset_representatives") {
  CHECK(coset_representatives(2, Composition{2}) == std::vector<Perm>{Perm::identity(2)});
  CHECK(coset_representatives(2, Composition{1, 1}) ==
        (std::vector<Perm>{Perm::identity(2), Perm({2, 1})}));
  CHECK(coset_representatives(3, Composition{2, 1}).size() == 3);
  for (long long n = 1; n <= 7; ++n)
    for (int m = 1; m <= 3; ++m)
      for (auto &parts : compositions_of(n, m)) {
        Composition r(parts);
        auto reps = coset_representatives(n, r);
        BigInt expect = factorial_int(n);
        for (long long ri : parts) expect /= factorial_int(ri);
        CHECK(BigInt(reps.size()) == expect);
        if (n <= 5) {
          // pairwise distinct cosets: sigma^-1 tau must not fix all blocks
          SetPartition blocks = iota(r);
          for (size_t a = 0; a < reps.size(); ++a)
            for (size_t b = a + 1; b < reps.size(); ++b) {
              Perm d = reps[a].inverse() * reps[b];
              bool in_young = true;
              for (long long e = 1; e <= n; ++e)
                if (blocks.owner(e) != blocks.owner(d(e))) in_young = false;
              CHECK(!in_young);
            }
        }
      }
}

TEST_CASE("wreath_coset_representatives") {
  auto reps = wreath_coset_representatives(Composition{3}, {Composition{1, 1}});
  CHECK(reps.size() == 6);
  // the published representative set, up to coset equivalence
  std::vector<Perm> paper = {Perm::identity(6),       Perm({3, 2, 1, 4, 5, 6}),
                             Perm({1, 2, 5, 4, 3, 6}), Perm({3, 4, 1, 6, 5, 2}),
                             Perm({3, 2, 5, 4, 1, 6}), Perm({1, 4, 3, 6, 5, 2})};
  auto H = wreath_subgroup(Composition{3}, {Composition{1, 1}});
  CHECK(H.size() == 6);
  for (auto &pp : paper) {
    int hits = 0;
    for (auto &rep : reps)
      for (auto &h : H)
        if (rep * h == pp) ++hits;
    CHECK(hits == 1);
  }

  CHECK(wreath_coset_representatives(Composition{1}, {Composition{4}}) ==
        std::vector<Perm>{Perm::identity(4)});
  CHECK(wreath_coset_representatives(Composition{2}, {Composition{1, 1}}).size() == 2);

  // count * |H| = |G| and pairwise coset distinctness, small ground sets
  std::vector<std::pair<Composition, std::vector<Composition>>> cases = {
      {Composition{2}, {Composition{2}}},
      {Composition{2, 1}, {Composition{1, 1}, Composition{2}}},
      {Composition{3}, {Composition{2}}},
      {Composition{2}, {Composition{1, 2}}},
      {Composition{1, 1}, {Composition{2}, Composition{1, 1}}},
  };
  for (auto &[r, qs] : cases) {
    auto G = young_subgroup(diamond(r, [&] {
      std::vector<SetPartition> v;
      for (auto &q : qs) v.push_back(iota(q));
      return v;
    }()));
    auto Hs = wreath_subgroup(r, qs);
    auto rs = wreath_coset_representatives(r, qs);
    CHECK(rs.size() * Hs.size() == G.size());
    std::set<Perm> Hset(Hs.begin(), Hs.end());
    for (size_t a = 0; a < rs.size(); ++a)
      for (size_t b = a + 1; b < rs.size(); ++b)
        CHECK(!Hset.count(rs[a].inverse() * rs[b]));
  }
}
