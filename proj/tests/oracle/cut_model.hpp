#pragma once

// Independent model of the submodules of Q for a valuation domain with a
// finite spectrum P_0 = 0 < P_1 < ... < P_{k-1} = m.
//
// The value group is A_1 x ... x A_{k-1} ordered lexicographically, with
// A_i = Z when P_i is not idempotent and A_i = Q otherwise. A submodule is
// an upward closed set of values; up to the zero module and Q itself it is
// {g : pi_j(g) >= v} or {g : pi_j(g) > v} where pi_j truncates to the first
// j coordinates. P_i is then {pi_i(g) > 0}, R_{P_i} is {pi_i(g) >= 0}.
// Generic ideal tokens are given the representative {pi_att(g) > 2 e_{lo+1}}
// (or >= when iso_loc), which sits strictly between P_lo and P_{lo+1}.

#include <optional>
#include <vector>

#include "vclass/ideals.hpp"

namespace oracle {

using vclass::Rat;

struct Cut {
  enum Kind { Empty, All, Level };
  Kind kind = Empty;
  int j = 0;
  std::vector<Rat> v;  // length j
  bool strict = false;
  bool operator==(const Cut&) const = default;
};

class Model {
 public:
  explicit Model(const vclass::Spectrum& s) : s_(s) {
    k_ = static_cast<int>(s.size());
    discrete_.assign(k_, false);
    for (int i = 1; i < k_; ++i) discrete_[i] = !s.idempotent(s.at(i));
  }

  int rank() const { return k_ - 1; }
  bool discrete(int coord) const { return discrete_[coord]; }  // 1-based

  Cut level(int j, std::vector<Rat> v, bool strict) const {
    if (j == 0) return Cut{strict ? Cut::Empty : Cut::All, 0, {}, false};
    if (strict && discrete_[j]) {
      v[j - 1] += 1;
      strict = false;
    }
    return Cut{Cut::Level, j, std::move(v), strict};
  }

  Cut empty() const { return Cut{}; }
  Cut all() const { return Cut{Cut::All, 0, {}, false}; }
  Cut ring() const { return loc(k_ - 1); }
  Cut loc(int i) const { return level(i, std::vector<Rat>(i, Rat(0)), false); }
  Cut prime(int i) const { return level(i, std::vector<Rat>(i, Rat(0)), true); }

  Cut of(const vclass::QSubmodule& a) const {
    using F = vclass::QSubmodule::Form;
    if (a.form == F::Zero) return empty();
    if (a.form == F::Loc) return loc(idx(a.loc));
    const auto& t = a.ideal;
    if (t.is_prime) return prime(idx(t.attached));
    int lo = idx(t.lo), att = idx(t.attached);
    std::vector<Rat> v(att, Rat(0));
    v[lo] = 2;  // coordinate lo+1
    return level(att, v, !t.iso_loc);
  }

  // truncation comparison on the first m coordinates
  static int cmp(const std::vector<Rat>& a, const std::vector<Rat>& b, int m) {
    for (int i = 0; i < m; ++i) {
      if (a[i] < b[i]) return -1;
      if (b[i] < a[i]) return 1;
    }
    return 0;
  }

  bool contains(const Cut& c, const std::vector<Rat>& g) const {
    if (c.kind == Cut::Empty) return false;
    if (c.kind == Cut::All) return true;
    int r = cmp(g, c.v, c.j);
    return r > 0 || (r == 0 && !c.strict);
  }

  bool subset(const Cut& a, const Cut& b) const {
    if (a.kind == Cut::Empty || b.kind == Cut::All) return true;
    if (b.kind == Cut::Empty) return false;
    if (a.kind == Cut::All) return false;
    int m = std::min(a.j, b.j);
    int r = cmp(a.v, b.v, m);
    if (r != 0) return r > 0;
    if (a.j == b.j) return a.strict || !b.strict;
    if (a.j < b.j) return a.strict;
    return !b.strict;
  }

  bool same(const Cut& a, const Cut& b) const { return subset(a, b) && subset(b, a); }
  Cut meet(const Cut& a, const Cut& b) const { return subset(a, b) ? a : b; }
  Cut join(const Cut& a, const Cut& b) const { return subset(a, b) ? b : a; }

  // product a*b of submodules: Minkowski sum of value sets
  Cut sum(const Cut& a, const Cut& b) const {
    if (a.kind == Cut::Empty || b.kind == Cut::Empty) return empty();
    if (a.kind == Cut::All || b.kind == Cut::All) return all();
    int m = std::min(a.j, b.j);
    std::vector<Rat> v(m);
    for (int i = 0; i < m; ++i) v[i] = a.v[i] + b.v[i];
    bool st = a.j == b.j ? (a.strict || b.strict) : (a.j < b.j ? a.strict : b.strict);
    return level(m, v, st);
  }

  // {x in Q : x*J inside I}
  Cut colon_q(const Cut& i, const Cut& jc) const {
    if (jc.kind == Cut::Empty) return all();
    if (i.kind == Cut::All) return all();
    if (i.kind == Cut::Empty) return empty();
    if (jc.kind == Cut::All) return empty();
    int m = std::min(i.j, jc.j);
    std::vector<Rat> t(m);
    for (int x = 0; x < m; ++x) t[x] = i.v[x] - jc.v[x];
    bool eq_ok = i.j == jc.j ? (jc.strict || !i.strict) : (jc.j < i.j ? jc.strict : !i.strict);
    return level(m, t, !eq_ok);
  }

  Cut in_ring(const Cut& c) const { return meet(c, ring()); }

  // translate by -d: the set {g : g + d in c}
  Cut shift(const Cut& c, const std::vector<Rat>& d) const {
    if (c.kind != Cut::Level) return c;
    std::vector<Rat> v(c.j);
    for (int x = 0; x < c.j; ++x) v[x] = c.v[x] - d[x];
    return Cut{Cut::Level, c.j, v, c.strict};
  }

  // attached prime index of a cut inside R (zero for the zero ideal)
  int attached(const Cut& c) const {
    if (c.kind == Cut::Level) return c.j;
    return 0;
  }

  // Back to a token, when the cut is a proper ideal, zero or a localization
  // (Q-submodules with negative leading value have no token).
  std::optional<vclass::QSubmodule> token(const Cut& c) const {
    using vclass::QSubmodule;
    if (c.kind == Cut::Empty) return QSubmodule::zero();
    if (c.kind == Cut::All) return QSubmodule::localization(s_.at(0));
    int f = -1;
    for (int x = 0; x < c.j; ++x)
      if (c.v[x] != 0) {
        f = x;
        break;
      }
    if (f < 0) {
      if (!c.strict) return QSubmodule::localization(s_.at(c.j));
      return QSubmodule::prime(s_, s_.at(c.j));
    }
    if (c.v[f] < 0) return std::nullopt;
    // {pi_j >= e_j} on a discrete last coordinate is the prime P_j
    if (f == c.j - 1 && !c.strict && discrete_[c.j] && c.v[f] == 1)
      return QSubmodule::prime(s_, s_.at(c.j));
    auto g = vclass::IdealPos::generic(s_, s_.at(f), s_.at(c.j), !c.strict);
    return QSubmodule::of(g);
  }

  // A grid of values: every coordinate in {-3,...,3}, in halves when the
  // coordinate group is Q.
  std::vector<std::vector<Rat>> grid() const {
    std::vector<std::vector<Rat>> out = {{}};
    for (int c = 1; c < k_; ++c) {
      std::vector<Rat> vals;
      if (discrete_[c])
        for (int x = -3; x <= 3; ++x) vals.push_back(Rat(x));
      else
        for (int x = -6; x <= 6; ++x) vals.push_back(Rat(x, 2));
      std::vector<std::vector<Rat>> next;
      for (auto& g : out)
        for (auto& x : vals) {
          auto h = g;
          h.push_back(x);
          next.push_back(std::move(h));
        }
      out = std::move(next);
    }
    return out;
  }

  int idx(const vclass::Prime& p) const { return static_cast<int>(s_.index(p)); }

 private:
  const vclass::Spectrum& s_;
  int k_ = 0;
  std::vector<bool> discrete_;
};

}  // namespace oracle
