#include <gtest/gtest.h>

#include <random>

#include "hamcon/constructions.hpp"
#include "hamcon/oracle.hpp"
#include "hamcon/sufficiency.hpp"
#include "hamcon/verify.hpp"
#include "test_support.hpp"

namespace hamcon {
namespace {

TEST(Ore, Examples) {
  const Graph j = join(complete(4), empty_graph(2));
  auto v = ore_test(j);
  EXPECT_EQ(v.outcome, Outcome::kHcCertified);
  EXPECT_TRUE(recheck(j, v));
  EXPECT_EQ(ore_test(complete(5)).outcome, Outcome::kHcCertified);

  const Graph f = build_F(10, 3);
  v = ore_test(f);
  EXPECT_EQ(v.outcome, Outcome::kInconclusive);
  const auto& w = std::get<OreWitness>(v.witness);
  ASSERT_TRUE(w.violating_pair.has_value());
  EXPECT_EQ(*w.violating_pair, (Edge{0 + 3, 8}));  // first nonadjacent low pair in scan order
  EXPECT_TRUE(recheck(f, v));
  EXPECT_THROW(ore_test(complete(2)), DomainError);
}

TEST(Lick, Examples) {
  EXPECT_EQ(lick_test(complete(4)).outcome, Outcome::kHcCertified);

  auto v = lick_test(build_F(10, 3));
  EXPECT_EQ(v.outcome, Outcome::kInconclusive);
  EXPECT_EQ(std::get<LickWitness>(v.witness).index, 3u);

  v = lick_test(build_G(16, 8));
  EXPECT_EQ(v.outcome, Outcome::kInconclusive);
  EXPECT_EQ(std::get<LickWitness>(v.witness).index, 8u);
  EXPECT_TRUE(recheck(build_G(16, 8), v));
  EXPECT_THROW(lick_test(empty_graph(2)), DomainError);

  // No index exists at n = 3, which must not count as a certificate.
  v = lick_test(empty_graph(3));
  EXPECT_EQ(v.outcome, Outcome::kInconclusive);
  EXPECT_TRUE(recheck(empty_graph(3), v));
}

TEST(Size, Examples) {
  Graph k9m = complete(9);
  k9m.remove_edge(0, 1);
  auto v = size_test(k9m);
  EXPECT_EQ(v.outcome, Outcome::kHcCertified);
  EXPECT_TRUE(std::get<SizeWitness>(v.witness).half_degree_clause);

  const Graph f = build_F(10, 3);
  v = size_test(f);
  EXPECT_EQ(v.outcome, Outcome::kInconclusive);
  EXPECT_EQ(std::get<SizeWitness>(v.witness).phi, BigInt(34));

  Graph f2 = f;
  f2.add_edge(8, 9);
  v = size_test(f2);
  EXPECT_EQ(v.outcome, Outcome::kHcCertified);
  EXPECT_EQ(std::get<SizeWitness>(v.witness).min_degree, 4u);
  EXPECT_EQ(std::get<SizeWitness>(v.witness).edges, 35u);
  EXPECT_TRUE(recheck(f2, v));
}

TEST(Separator, Examples) {
  const std::vector<Vertex> hub3{0, 1, 2};
  auto v = separator_certificate(build_F(10, 3), hub3);
  EXPECT_EQ(v.outcome, Outcome::kNhcCertified);
  EXPECT_EQ(std::get<SeparatorWitness>(v.witness).components, 3u);

  std::vector<Vertex> hub8{0, 1, 2, 3, 4, 5, 6, 7};
  v = separator_certificate(build_G(16, 8), hub8);
  EXPECT_EQ(v.outcome, Outcome::kNhcCertified);
  EXPECT_EQ(std::get<SeparatorWitness>(v.witness).components, 8u);
  EXPECT_TRUE(recheck(build_G(16, 8), v));

  const std::vector<Vertex> pair{2, 4};
  EXPECT_EQ(separator_certificate(complete(6), pair).outcome, Outcome::kInconclusive);

  const std::vector<Vertex> bad{0, 9};
  EXPECT_THROW(separator_certificate(complete(6), bad), DomainError);
  const std::vector<Vertex> one{0};
  EXPECT_THROW(separator_certificate(complete(6), one), DomainError);
}

TEST(Recheck, RejectsForgedWitness) {
  const Graph f = build_F(10, 3);
  Verdict forged{Outcome::kNhcCertified, SeparatorWitness{{0, 1}, 5}};
  EXPECT_FALSE(recheck(f, forged));
  Verdict forged_ore{Outcome::kHcCertified, OreWitness{}};
  EXPECT_FALSE(recheck(f, forged_ore));
}

TEST(Sufficiency, NeverFiresOnExtremalConstructions) {
  for (std::size_t n = 6; n <= 30; ++n) {
    for (std::size_t d = 3; d <= n / 2; ++d) {
      for (const Graph& g : {build_F(n, d), build_G(n, d)}) {
        EXPECT_EQ(size_test(g).outcome, Outcome::kInconclusive);
        EXPECT_EQ(ore_test(g).outcome, Outcome::kInconclusive);
        EXPECT_EQ(lick_test(g).outcome, Outcome::kInconclusive);
      }
    }
  }
}

TEST(Sufficiency, SoundAgainstOracle) {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const Graph g = random_graph(n, 0.35 + 0.1 * (trial % 6), rng);
    const bool hc = hamiltonian_connected(g).is_hc;
    for (const Verdict& v : {ore_test(g), lick_test(g), size_test(g)}) {
      if (v.outcome == Outcome::kHcCertified) {
        EXPECT_TRUE(hc) << encode_graph6(g);
      }
      EXPECT_TRUE(recheck(g, v));
    }
    // Neighborhood of a minimum-degree vertex is a natural separator candidate.
    Vertex w = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g.degree(v) < g.degree(w)) w = v;
    const auto nb = g.neighbors(w);
    if (nb.size() >= 2) {
      const auto v = separator_certificate(g, nb);
      if (v.outcome == Outcome::kNhcCertified) {
        EXPECT_FALSE(hc) << encode_graph6(g);
      }
    }
  }
}

}  // namespace
}  // namespace hamcon
