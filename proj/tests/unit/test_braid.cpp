#include <gtest/gtest.h>

#include <algorithm>

#include "schober/braid.hpp"
#include "schober/random.hpp"
#include "test_helpers.hpp"

using namespace schober;
using schober::testing::kind_of;
using schober::testing::scalar;
using schober::testing::scalar_quiver;
using schober::testing::two_point_example;

TEST(BraidWord, ParseAndCheck) {
  EXPECT_EQ(parse_word(3, "1,-2,1").letters, (std::vector<int>{1, -2, 1}));
  EXPECT_EQ(parse_word(3, " 2 , -1 ").letters, (std::vector<int>{2, -1}));
  EXPECT_TRUE(parse_word(3, "").letters.empty());
  EXPECT_EQ(kind_of([] { parse_word(3, "1,,2"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_word(3, "1,x"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_word(3, "1,"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_word(3, "3"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_word(3, "0"); }), ErrorKind::InvalidInput);
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce({2, {1, -1}}).letters.empty());
  EXPECT_EQ(reduce({3, {1, 2, -2, 1}}).letters, (std::vector<int>{1, 1}));
  EXPECT_EQ(reduce({3, {1, 2, 1}}).letters, (std::vector<int>{1, 2, 1}));
  EXPECT_TRUE(reduce({3, {1, 2, -2, -1}}).letters.empty());
}

TEST(ActGen, TwoPointExample) {
  const PervQuiver q = two_point_example();
  const PervQuiver p = act_gen(q, 1);
  // T_{Psi,2} = 1 - 1*3 = -2: u'_2 = 1*(-2), v'_2 = (-1/2)*2
  EXPECT_EQ(p.u, (std::vector<RatMatrix>{scalar(3), scalar(-2)}));
  EXPECT_EQ(p.v, (std::vector<RatMatrix>{scalar(1), scalar(-1)}));
  EXPECT_EQ(local_monodromies(p), (std::vector<RatMatrix>{scalar(-2), scalar(-1)}));
  EXPECT_TRUE(is_valid(p));
}

TEST(ActGen, ZeroVanishingSpacesOnlySwap) {
  PervQuiver q = PervQuiver::zero(3);
  q.psi_dim = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    q.u[i] = RatMatrix(0, 2);
    q.v[i] = RatMatrix(2, 0);
  }
  EXPECT_EQ(act_gen(q, 1), q);
  EXPECT_EQ(act_gen(q, 2), q);
  EXPECT_EQ(act_gen_inv(q, 2), q);
}

TEST(ActGen, SwapsDimensions) {
  Rng rng(13);
  QuiverGen g{3, 3, 1, 3};
  const PervQuiver q = random_quiver(rng, g);
  const PervQuiver p = act_gen(q, 2);
  EXPECT_EQ(p.phi_dims[0], q.phi_dims[0]);
  EXPECT_EQ(p.phi_dims[1], q.phi_dims[2]);
  EXPECT_EQ(p.phi_dims[2], q.phi_dims[1]);
  EXPECT_EQ(p.u[0], q.u[0]);
}

TEST(ActGen, Errors) {
  const PervQuiver q = two_point_example();
  EXPECT_EQ(kind_of([&] { act_gen(q, 2); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { act_gen(q, 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { act_gen(scalar_quiver({1, 1}, {1, 2}), 1); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { act_gen_inv(scalar_quiver({1, 1}, {1, 2}), 1); }), ErrorKind::InvalidInput);
}

TEST(ActGenInv, InvertsActGen) {
  const PervQuiver q = two_point_example();
  EXPECT_EQ(act_gen_inv(act_gen(q, 1), 1), q);
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const PervQuiver r = random_quiver(rng, {static_cast<std::size_t>(rng.uniform(2, 5)), 3, 1, 3});
    const auto i = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(r.n) - 1));
    EXPECT_EQ(act_gen(act_gen_inv(r, i), i), r);
    EXPECT_EQ(act_gen_inv(act_gen(r, i), i), r);
  }
}

TEST(Act, Basics) {
  const PervQuiver q = two_point_example();
  EXPECT_EQ(act(q, {2, {}}), q);
  EXPECT_EQ(act(q, {2, {1, -1}}), q);
  EXPECT_EQ(act(q, {2, {1}}), act_gen(q, 1));
  EXPECT_EQ(kind_of([&] { act(q, {3, {}}); }), ErrorKind::ArityMismatch);
  EXPECT_EQ(kind_of([&] { act(q, {2, {2}}); }), ErrorKind::InvalidInput);
}

TEST(Act, BraidRelationsOnRandomQuivers) {
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const PervQuiver q = random_quiver(rng, {static_cast<std::size_t>(rng.uniform(3, 5)), 3, 1, 3});
    for (int i = 1; i + 1 < static_cast<int>(q.n); ++i) {
      EXPECT_EQ(act(q, {q.n, {i, i + 1, i}}), act(q, {q.n, {i + 1, i, i + 1}}));
      EXPECT_EQ(act(q, {q.n, {-i, -(i + 1), -i}}), act(q, {q.n, {-(i + 1), -i, -(i + 1)}}));
    }
    for (int i = 1; i < static_cast<int>(q.n); ++i)
      for (int j = i + 2; j < static_cast<int>(q.n); ++j) EXPECT_EQ(act(q, {q.n, {i, j}}), act(q, {q.n, {j, i}}));
  }
}

TEST(Act, ComposesLeftToRight) {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    const PervQuiver q = random_quiver(rng, {static_cast<std::size_t>(rng.uniform(2, 4)), 3, 1, 3});
    const BraidWord w = random_word(rng, q.n, 5);
    const BraidWord w2 = random_word(rng, q.n, 5);
    EXPECT_EQ(act(q, w * w2), act(act(q, w), w2));
    EXPECT_EQ(act(q, w * w.inverse()), q);
    EXPECT_EQ(act(q, reduce(w)), act(q, w));
  }
}

TEST(ShadowActGen, Examples) {
  const PervQuiver q = two_point_example();
  EXPECT_EQ(shadow_act_gen(q, 1), (std::vector<RatMatrix>{scalar(1), scalar(-1)}));

  PervQuiver z = PervQuiver::zero(2);
  z.psi_dim = 1;
  z.u = {RatMatrix(0, 1), RatMatrix(0, 1)};
  z.v = {RatMatrix(1, 0), RatMatrix(1, 0)};
  EXPECT_EQ(shadow_act_gen(z, 1), (std::vector<RatMatrix>{RatMatrix(1, 0), RatMatrix(1, 0)}));
}

TEST(ShadowActGen, AgreesWithActGen) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const PervQuiver q = random_quiver(rng, {static_cast<std::size_t>(rng.uniform(2, 5)), 3, 1, 3});
    const auto i = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(q.n) - 1));
    EXPECT_EQ(shadow_act_gen(q, i), act_gen(q, i).v);
  }
}

TEST(Monodromy, Examples) {
  EXPECT_EQ(local_monodromies(PervQuiver::constant_sheaf()), std::vector<RatMatrix>{scalar(1)});
  EXPECT_EQ(local_monodromies(two_point_example()), (std::vector<RatMatrix>{scalar(-1), scalar(-2)}));
  EXPECT_EQ(local_monodromies(PervQuiver::skyscraper()), std::vector<RatMatrix>{RatMatrix(0, 0)});
  EXPECT_EQ(total_monodromy(two_point_example()), scalar(2));
  EXPECT_EQ(total_monodromy(PervQuiver::constant_sheaf()), scalar(1));
  EXPECT_EQ(total_monodromy(PervQuiver::skyscraper()), RatMatrix(0, 0));
}

TEST(Hurwitz, Examples) {
  EXPECT_EQ(hurwitz_act({scalar(-1), scalar(-2)}, {2, {1}}), (std::vector<RatMatrix>{scalar(-2), scalar(-1)}));
  const std::vector<RatMatrix> ids(3, RatMatrix::identity(2));
  EXPECT_EQ(hurwitz_act(ids, {3, {1, 2, -1, -2, 2}}), ids);
  EXPECT_EQ(kind_of([] { hurwitz_act({scalar(0), scalar(1)}, {2, {1}}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { hurwitz_act({scalar(1), RatMatrix::identity(2)}, {2, {1}}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { hurwitz_act({scalar(1)}, {2, {1}}); }), ErrorKind::ArityMismatch);
}

TEST(Hurwitz, NonCommutingExample) {
  // (T1, T2) -> (T2, T2^{-1} T1 T2) with T1 = [[1,1],[0,1]], T2 = [[1,0],[1,1]]
  const RatMatrix t1{{1, 1}, {0, 1}};
  const RatMatrix t2{{1, 0}, {1, 1}};
  const auto out = hurwitz_act({t1, t2}, {2, {1}});
  EXPECT_EQ(out[0], t2);
  EXPECT_EQ(out[1], (RatMatrix{{2, 1}, {-1, 0}}));
  EXPECT_EQ(out[0] * out[1], t1 * t2);
  EXPECT_EQ(hurwitz_act(out, {2, {-1}}), (std::vector<RatMatrix>{t1, t2}));
}

TEST(Hurwitz, CovariantWithAction) {
  Rng rng(18);
  for (int t = 0; t < 100; ++t) {
    const PervQuiver q = random_quiver(rng, {static_cast<std::size_t>(rng.uniform(2, 5)), 3, 1, 3});
    const BraidWord w = random_word(rng, q.n, 6);
    const PervQuiver p = act(q, w);
    EXPECT_EQ(local_monodromies(p), hurwitz_act(local_monodromies(q), w));
    EXPECT_EQ(total_monodromy(p), total_monodromy(q));
    auto a = q.phi_dims, b = p.phi_dims;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}
