#include <gtest/gtest.h>

#include "oracle/cut_model.hpp"
#include "support.hpp"
#include "vclass/errors.hpp"

using namespace vtest;

namespace {

Spectrum three() { return chain({true, true, true}); }  // 0 < p1 < m

// library token vs model cut, via the model's token map
::testing::AssertionResult agrees(const oracle::Model& m, const Spectrum& s, const QSubmodule& got,
                                  const oracle::Cut& want) {
  auto tok = m.token(want);
  if (!tok) return ::testing::AssertionFailure() << "model has no token, library gave " << to_literal(s, got);
  if (*tok == got) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "library " << to_literal(s, got) << ", model " << to_literal(s, *tok);
}

}  // namespace

TEST(Ideals, InAngleExamples) {
  auto s = three();
  auto q = s.parse("p1");
  auto m = s.top();
  EXPECT_TRUE(in_angle(s, QSubmodule::prime(s, q), {s.zero(), q}));
  EXPECT_FALSE(in_angle(s, QSubmodule::prime(s, m), {s.zero(), q}));
  auto principal = QSubmodule::of(IdealPos::generic(s, s.zero(), m, true));
  EXPECT_TRUE(in_angle(s, principal, {s.zero(), m}));
}

TEST(Ideals, ColonExamples) {
  auto s = three();
  auto p = s.parse("p1");
  // Ann(R_m/p) = p, Ann(kappa(p)) = p, Ann(Q) = 0
  EXPECT_EQ(colon(s, QSubmodule::prime(s, p), QSubmodule::ring(s)), QSubmodule::prime(s, p));
  EXPECT_EQ(colon(s, QSubmodule::prime(s, p), QSubmodule::localization(p)), QSubmodule::prime(s, p));
  EXPECT_EQ(colon(s, QSubmodule::zero(), QSubmodule::field(s)), QSubmodule::zero());
  EXPECT_THROW(colon(s, QSubmodule::ring(s), QSubmodule::prime(s, p)), NotContained);
}

TEST(Ideals, SaturateExamples) {
  auto s = three();
  auto q = s.parse("p1");
  EXPECT_EQ(saturate(s, QSubmodule::prime(s, s.top()), q), QSubmodule::ring(s));
  auto i = QSubmodule::of(IdealPos::generic(s, s.zero(), q, true));
  EXPECT_EQ(saturate(s, i, q), i);
  auto t = Spectrum::two_point(true);
  auto r = QSubmodule::of(IdealPos::generic(t, t.zero(), t.top(), true));
  // rR localized at 0 is Q, back in R this is R
  EXPECT_EQ(saturate(t, r, t.zero()), QSubmodule::ring(t));
}

TEST(Ideals, PartsExamples) {
  auto s = three();
  auto q = s.parse("p1");
  auto rm = UniserialModule::cyclic(s, QSubmodule::prime(s, s.top()));
  EXPECT_EQ(gamma_part(s, rm, q), rm);
  auto kq = UniserialModule::residue(s, q);
  EXPECT_EQ(f_part(s, kq, q), kq);
  auto rq = UniserialModule::cyclic(s, QSubmodule::prime(s, q));
  EXPECT_EQ(soc_part(s, rq, q), rq);
}

TEST(Ideals, DivisibilityExamples) {
  auto s = three();
  auto q = s.parse("p1");
  auto i = QSubmodule::prime(s, q);
  EXPECT_TRUE(is_q_divisible(s, UniserialModule::over_field(s, i), s.zero()));
  EXPECT_FALSE(is_q_divisible(s, UniserialModule::cyclic(s, i), q));
  for (auto& m : uniserial_vocabulary(s)) EXPECT_TRUE(is_q_divisible(s, m, s.top()));
}

TEST(Ideals, LiteralsRoundtrip) {
  for (auto& s : all_chains(2, 4)) {
    for (auto& a : submodules(s)) EXPECT_EQ(parse_submodule(s, to_literal(s, a)), a) << to_literal(s, a);
    for (auto& m : uniserial_vocabulary(s)) EXPECT_EQ(parse_module(s, to_literal(s, m)), m);
  }
  auto s = three();
  EXPECT_EQ(parse_submodule(s, "Q"), QSubmodule::field(s));
  EXPECT_EQ(parse_submodule(s, "R"), QSubmodule::ring(s));
  EXPECT_EQ(parse_module(s, "loc:p1 / prime:p1"), UniserialModule::residue(s, s.parse("p1")));
  EXPECT_THROW(parse_submodule(s, "gen:lo=m,att=m"), Error);
}

TEST(Ideals, VocabularyRespectsRealisability) {
  for (auto& s : all_chains(2, 4))
    for (auto& t : ideal_vocabulary(s))
      if (!t.is_prime && !t.iso_loc) EXPECT_TRUE(s.idempotent(t.attached));
}

// Inclusion order against the value-group model.
TEST(IdealsModel, OrderMatchesCuts) {
  for (auto& s : all_chains(1, 4)) {
    oracle::Model m(s);
    auto all = submodules(s);
    for (auto& a : all)
      for (auto& b : all) {
        bool want = m.subset(m.of(a), m.of(b));
        bool same_slot = a.is_generic() && b.is_generic() && a.ideal.lo == b.ideal.lo && !(a == b);
        if (same_slot) {
          EXPECT_THROW(subset(s, a, b), IncomparableSymbolic);
          EXPECT_EQ(subset_derived(s, a, b), want) << to_literal(s, a) << " in " << to_literal(s, b);
        } else {
          EXPECT_EQ(subset(s, a, b), want) << to_literal(s, a) << " in " << to_literal(s, b);
        }
      }
  }
}

TEST(IdealsModel, ExtendMulColonSaturate) {
  for (auto& s : all_chains(1, 4)) {
    oracle::Model m(s);
    for (auto& a : submodules(s))
      for (auto& p : s.primes()) {
        auto ca = m.of(a);
        int ip = m.idx(p);
        EXPECT_TRUE(agrees(m, s, extend(s, a, p), m.sum(ca, m.loc(ip)))) << "extend " << to_literal(s, a);
        EXPECT_TRUE(agrees(m, s, mul_prime(s, p, a), m.sum(m.prime(ip), ca))) << "mul " << to_literal(s, a);
        auto want = m.colon_q(ca, m.prime(ip));
        if (m.token(want)) {
          EXPECT_TRUE(agrees(m, s, colon_prime(s, a, p), want)) << "colon " << to_literal(s, a) << " : " << s.name(p);
        } else {
          EXPECT_THROW(colon_prime(s, a, p), NotDescribable);
        }
        if (!a.is_loc())
          EXPECT_TRUE(agrees(m, s, saturate(s, a, p), m.in_ring(m.sum(ca, m.loc(ip)))));
      }
  }
}

TEST(IdealsModel, ColonOfSubmodules) {
  for (auto& s : all_chains(1, 4)) {
    oracle::Model m(s);
    auto all = submodules(s);
    for (auto& i : all)
      for (auto& j : all) {
        bool same_slot = i.is_generic() && j.is_generic() && i.ideal.lo == j.ideal.lo && !(i == j);
        if (same_slot) continue;
        if (!m.subset(m.of(i), m.of(j))) {
          EXPECT_THROW(colon(s, i, j), NotContained);
          continue;
        }
        EXPECT_TRUE(agrees(m, s, colon(s, i, j), m.in_ring(m.colon_q(m.of(i), m.of(j)))))
            << "(" << to_literal(s, i) << " : " << to_literal(s, j) << ")";
      }
  }
}

// p' inside (I : J) iff p' J inside I, for every prime p'.
TEST(IdealsModel, ColonContract) {
  for (auto& s : all_chains(2, 4)) {
    oracle::Model m(s);
    auto all = submodules(s);
    for (auto& i : all)
      for (auto& j : all) {
        bool same_slot = i.is_generic() && j.is_generic() && i.ideal.lo == j.ideal.lo && !(i == j);
        if (same_slot || !m.subset(m.of(i), m.of(j))) continue;
        auto c = m.of(colon(s, i, j));
        for (int k = 1; k < static_cast<int>(s.size()); ++k)
          EXPECT_EQ(m.subset(m.prime(k), c), m.subset(m.sum(m.prime(k), m.of(j)), m.of(i)));
      }
  }
}

TEST(IdealsModel, ModuleParts) {
  for (auto& s : all_chains(1, 4)) {
    oracle::Model m(s);
    for (auto& mod : uniserial_vocabulary(s)) {
      auto j = m.of(mod.num), i = m.of(mod.den);
      for (auto& p : s.primes()) {
        int ip = m.idx(p);
        auto tq = m.meet(m.sum(i, m.loc(ip)), j);
        auto g = gamma_part(s, mod, p);
        EXPECT_TRUE(agrees(m, s, g.num, tq));
        EXPECT_EQ(g.den, mod.den);
        auto f = f_part(s, mod, p);
        EXPECT_TRUE(agrees(m, s, f.den, tq));
        bool div = m.same(j, tq) || m.same(m.sum(j, m.loc(ip)), j);
        EXPECT_EQ(is_q_divisible(s, mod, p), m.same(j, i) || m.same(m.sum(j, m.loc(ip)), j));
        EXPECT_EQ(is_q_divisible(s, f, p), div) << to_literal(s, mod) << " at " << s.name(p);
        auto cq = m.colon_q(i, m.prime(ip));
        if (m.token(cq)) {
          auto soc = soc_part(s, mod, p);
          EXPECT_TRUE(agrees(m, s, soc.num, m.meet(cq, j)));
        }
      }
    }
  }
}

TEST(IdealsProperties, SaturateIdempotentAndTrichotomy) {
  for (auto& s : all_chains(2, 4))
    for (auto& i : proper_ideals(s))
      for (auto& q : s.primes()) {
        auto once = saturate(s, i, q);
        if (!once.is_loc()) EXPECT_EQ(saturate(s, once, q), once);
        bool a = attached(s, i) <= q;
        bool b = saturate(s, i, q) == i;
        bool c = gamma_part(s, UniserialModule::cyclic(s, i), q).is_zero();
        EXPECT_EQ(a, b) << to_literal(s, i) << " at " << s.name(q);
        EXPECT_EQ(a, c) << to_literal(s, i) << " at " << s.name(q);
      }
}
