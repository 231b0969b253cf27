#include <gtest/gtest.h>

#include <set>

#include "oracle/cut_model.hpp"
#include "support.hpp"
#include "vclass/errors.hpp"

using namespace vtest;

namespace {

Spectrum fcqm() { return Spectrum::finite_chain({"0", "q", "m"}, {true, true, true}); }

QSubmodule principal(const Spectrum& s) { return QSubmodule::of(IdealPos::generic(s, s.zero(), s.top(), true)); }

// Annihilators (I : r) for r in J \ I, swept over a grid of values of r and
// checked one by one against the system.
bool sweep_in_class(const oracle::Model& m, const Spectrum& s, const AdmissibleSystem& x,
                    const UniserialModule& mod) {
  auto j = m.of(mod.num), i = m.of(mod.den);
  for (auto& g : m.grid()) {
    if (!m.contains(j, g) || m.contains(i, g)) continue;
    auto ann = m.in_ring(m.shift(i, g));
    int att = m.attached(ann);
    bool ok = false;
    for (auto& iv : x.intervals())
      if (m.subset(m.prime(m.idx(iv.p)), ann) && att <= m.idx(iv.q)) ok = true;
    if (!ok) return false;
  }
  return true;
}

// Tor_1(R_q/p, R/I) = 0, clause by clause
bool tor_clauses(const Spectrum& s, const Prime& p, const QSubmodule& i) {
  auto pp = QSubmodule::prime(s, p);
  if (subset(s, pp, i)) return true;
  bool strictly_inside = subset(s, i, pp) && !(i == pp);
  bool iso = i.is_ideal() && i.ideal.iso_loc;
  return strictly_inside && attached(s, i) <= p && !(iso && attached(s, i) == p);
}

}  // namespace

TEST(Cosilting, TorExamples) {
  auto s = fcqm();
  for (auto& i : proper_ideals(s))
    for (auto& q : s.primes()) EXPECT_TRUE(tor1_vanishes(s, q, s.zero(), i));
  EXPECT_FALSE(tor1_vanishes(s, s.top(), s.top(), principal(s)));
  EXPECT_TRUE(tor1_vanishes(s, s.top(), s.top(), QSubmodule::zero()));
  auto nonidem = Spectrum::finite_chain({"0", "q", "m"}, {true, false, true});
  EXPECT_THROW(tor1_vanishes(nonidem, nonidem.top(), nonidem.parse("q"), QSubmodule::zero()), NotIdempotent);
}

TEST(Cosilting, TorClauseTable) {
  for (auto& s : all_chains(1, 4))
    for (auto& p : s.primes()) {
      if (!s.idempotent(p)) continue;
      for (auto& q : s.primes()) {
        if (q < p) continue;
        for (auto& i : proper_ideals(s))
          EXPECT_EQ(tor1_vanishes(s, q, p, i), tor_clauses(s, p, i))
              << to_literal(s, i) << " against R_" << s.name(q) << "/" << s.name(p);
      }
    }
}

TEST(Cosilting, H0Examples) {
  auto t = Spectrum::two_point(true);
  KComplexRef g{ExtPrime::of(t.zero()), ExtPrime::of(t.top())};
  auto rm = UniserialModule::cyclic(t, QSubmodule::prime(t, t.top()));
  EXPECT_TRUE(h0_K_vanishes(t, g, rm));
  EXPECT_TRUE(h0_K_vanishes(t, {ExtPrime::neg_inf(), ExtPrime::of(t.top())}, rm));
  EXPECT_FALSE(h0_K_vanishes(t, g, UniserialModule::cyclic(t, principal(t))));
  KComplexRef stalk{ExtPrime::neg_inf(), ExtPrime::ring()};
  EXPECT_FALSE(h0_K_vanishes(t, stalk, rm));
  EXPECT_TRUE(h0_K_vanishes(t, stalk, UniserialModule::cyclic(t, QSubmodule::ring(t))));
}

TEST(Cosilting, H1Examples) {
  auto s = fcqm();
  auto q = s.parse("q");
  for (auto& m : uniserial_vocabulary(s)) EXPECT_TRUE(h1_K_vanishes(s, {ExtPrime::of(s.top()), ExtPrime::ring()}, m));
  EXPECT_TRUE(h1_K_vanishes(s, {ExtPrime::of(q), ExtPrime::of(s.top())}, UniserialModule::interval(s, q, s.zero())));
  EXPECT_FALSE(h1_K_vanishes(s, {ExtPrime::of(q), ExtPrime::of(s.top())},
                             UniserialModule::cyclic(s, QSubmodule::prime(s, q))));
}

TEST(Cosilting, InClassExamples) {
  auto s = fcqm();
  auto q = s.parse("q");
  AdmissibleSystem x(s, {{s.zero(), q}});
  EXPECT_TRUE(uniserial_in_class(x, UniserialModule::over_field(s, QSubmodule::prime(s, q))));
  EXPECT_FALSE(uniserial_in_class(x, UniserialModule::residue(s, s.top())));
  AdmissibleSystem none(s);
  for (auto& m : uniserial_vocabulary(s)) EXPECT_EQ(uniserial_in_class(none, m), m.is_zero());
}

TEST(Cosilting, TorDescriptionExamples) {
  auto t = Spectrum::two_point(true);
  auto rep = class_equals_tor_description(AdmissibleSystem(t, {{t.zero(), t.zero()}, {t.top(), t.top()}}));
  EXPECT_EQ(rep.mismatches, 0u);
  EXPECT_EQ(rep.rows.size(), cyclic_vocabulary(t).size());
  auto full = class_equals_tor_description(AdmissibleSystem(t, {{t.zero(), t.top()}}));
  for (auto& row : full.rows) EXPECT_TRUE(row.in_class && row.homological);
  auto none = class_equals_tor_description(AdmissibleSystem(t));
  for (auto& row : none.rows) {
    EXPECT_EQ(row.in_class, row.module.is_zero());
    EXPECT_EQ(row.homological, row.module.is_zero());
  }
}

TEST(Cosilting, TorDescriptionOnUniserials) {
  for (auto& s : all_chains(1, 4)) {
    auto mods = uniserial_vocabulary(s);
    for (auto& x : all_systems(s)) EXPECT_EQ(class_equals_tor_description(x, mods).mismatches, 0u);
  }
}

TEST(Cosilting, ClosedFormMatchesAnnihilatorSweep) {
  for (auto& s : all_chains(1, 4)) {
    oracle::Model m(s);
    auto mods = uniserial_vocabulary(s);
    for (auto& x : all_systems(s))
      for (auto& mod : mods)
        EXPECT_EQ(uniserial_in_class(x, mod), sweep_in_class(m, s, x, mod))
            << system_str(x) << " " << to_literal(s, mod);
  }
}

TEST(Cosilting, RecoverExamples) {
  auto s = fcqm();
  AdmissibleSystem x(s, {{s.zero(), s.parse("q")}});
  EXPECT_EQ(recover_system([&](const UniserialModule& m) { return uniserial_in_class(x, m); }, s), x);
  EXPECT_EQ(recover_system([](const UniserialModule&) { return true; }, s), AdmissibleSystem(s, {{s.zero(), s.top()}}));
  EXPECT_EQ(recover_system([](const UniserialModule& m) { return m.is_zero(); }, s), AdmissibleSystem(s));
}

TEST(Cosilting, RecoverRejectsNonClasses) {
  // only kappa(p1) with p1 not idempotent: would need the interval [p1,p1]
  auto s = chain({true, false, true});
  auto k = UniserialModule::residue(s, s.at(1));
  auto oracle = [&](const UniserialModule& m) { return m.is_zero() || m == k; };
  EXPECT_THROW(recover_system(oracle, s), InvalidOracle);
}

TEST(Cosilting, RecoverFixtureSpectra) {
  auto w = Spectrum::omega_plus_one();
  AdmissibleSystem ex1(w, {{w.zero(), w.q(2)}, {w.top(), w.top()}});
  EXPECT_EQ(recover_system([&](const UniserialModule& m) { return uniserial_in_class(ex1, m); }, w), ex1);
}

TEST(Cosilting, MonotoneInNestedSystems) {
  for (auto& s : all_chains(2, 3)) {
    auto xs = all_systems(s);
    auto mods = uniserial_vocabulary(s);
    for (auto& a : xs)
      for (auto& b : xs) {
        if (!is_nested(a, b)) continue;
        for (auto& m : mods)
          if (uniserial_in_class(a, m)) EXPECT_TRUE(uniserial_in_class(b, m));
      }
  }
}
