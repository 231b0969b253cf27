#include "vclass/ideals.hpp"

#include <sstream>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

using Form = QSubmodule::Form;

QSubmodule gen(const Spectrum& s, const Prime& lo, const Prime& att, bool iso) {
  return QSubmodule::of(IdealPos::generic(s, lo, att, iso));
}

QSubmodule gen_like(const Spectrum& s, const IdealPos& g, const Prime& att, bool iso) {
  return gen(s, g.lo, att, iso);
}

// Position of an ideal token: (prime, 0) for primes, (lo, 1) for generics.
std::pair<Prime, int> ideal_key(const IdealPos& i) {
  return i.is_prime ? std::pair(i.lo, 0) : std::pair(i.lo, 1);
}

}  // namespace

IdealPos IdealPos::prime(const Spectrum& s, const Prime& p) {
  if (p == s.zero()) throw SchemaError("the zero prime is the zero submodule, not an ideal token");
  return IdealPos{p, p, p, true, !s.idempotent(p)};
}

IdealPos IdealPos::generic(const Spectrum& s, const Prime& lo, const Prime& att, bool iso) {
  auto hi = s.successor(lo);
  if (!hi) throw NotDescribable("prime " + s.name(lo) + " has no successor, no generic ideals above it");
  if (att < *hi) throw SchemaError("attached prime below the slot of a generic ideal");
  // without an idempotent attached prime the ideal is a principal multiple
  if (!s.idempotent(att)) iso = true;
  return IdealPos{lo, *hi, att, false, iso};
}

bool operator==(const IdealPos& a, const IdealPos& b) {
  return a.lo == b.lo && a.hi == b.hi && a.attached == b.attached && a.is_prime == b.is_prime &&
         a.iso_loc == b.iso_loc;
}

QSubmodule QSubmodule::prime(const Spectrum& s, const Prime& p) {
  if (p == s.zero()) return zero();
  return of(IdealPos::prime(s, p));
}

bool operator==(const QSubmodule& a, const QSubmodule& b) {
  if (a.form != b.form) return false;
  switch (a.form) {
    case Form::Zero: return true;
    case Form::Ideal: return a.ideal == b.ideal;
    case Form::Loc: return a.loc == b.loc;
  }
  return false;
}

Prime attached(const Spectrum& s, const QSubmodule& a) {
  switch (a.form) {
    case Form::Zero: return s.zero();
    case Form::Ideal: return a.ideal.attached;
    case Form::Loc: return a.loc;
  }
  return s.zero();
}

Prime lower_prime(const Spectrum& s, const QSubmodule& a) {
  switch (a.form) {
    case Form::Zero: return s.zero();
    case Form::Ideal: return a.ideal.lo;
    case Form::Loc: return s.top();
  }
  return s.zero();
}

namespace {

Ordering compare_impl(const Spectrum& s, const QSubmodule& a, const QSubmodule& b, bool canonical) {
  auto band = [](const QSubmodule& x) { return static_cast<int>(x.form); };
  if (band(a) != band(b)) return band(a) < band(b) ? Ordering::LT : Ordering::GT;
  switch (a.form) {
    case Form::Zero: return Ordering::EQ;
    case Form::Loc: return compare(b.loc, a.loc);  // R_a inside R_b iff b <= a
    case Form::Ideal: {
      auto ka = ideal_key(a.ideal), kb = ideal_key(b.ideal);
      Ordering o = compare(ka.first, kb.first);
      if (o != Ordering::EQ) return o;
      if (ka.second != kb.second) return ka.second < kb.second ? Ordering::LT : Ordering::GT;
      if (a.ideal == b.ideal) return Ordering::EQ;
      if (!canonical)
        throw IncomparableSymbolic("two distinct generic ideals in the slot above " + s.name(a.ideal.lo));
      // representatives {v > c} (or >= when iso) at the attached level, c fixed in the slot:
      // a lower attached level wins exactly when the token is strict
      const IdealPos& x = a.ideal;
      const IdealPos& y = b.ideal;
      if (x.attached == y.attached) return x.iso_loc ? Ordering::GT : Ordering::LT;
      bool x_inside = x.attached < y.attached ? !x.iso_loc : y.iso_loc;
      return x_inside ? Ordering::LT : Ordering::GT;
    }
  }
  return Ordering::EQ;
}

}  // namespace

Ordering compare(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return compare_impl(s, a, b, false);
}

Ordering compare_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return compare_impl(s, a, b, true);
}

bool subset(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return compare(s, a, b) != Ordering::GT;
}

bool subset_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return compare_derived(s, a, b) != Ordering::GT;
}

QSubmodule meet_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return subset_derived(s, a, b) ? a : b;
}

QSubmodule join_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return subset_derived(s, a, b) ? b : a;
}

QSubmodule meet(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return subset(s, a, b) ? a : b;
}

QSubmodule join(const Spectrum& s, const QSubmodule& a, const QSubmodule& b) {
  return subset(s, a, b) ? b : a;
}

QSubmodule extend(const Spectrum& s, const QSubmodule& a, const Prime& q) {
  switch (a.form) {
    case Form::Zero: return a;
    case Form::Loc: return QSubmodule::localization(pmin(a.loc, q));
    case Form::Ideal: {
      const IdealPos& i = a.ideal;
      if (i.is_prime) return i.lo <= q ? a : QSubmodule::localization(q);
      if (i.attached <= q) return a;
      if (q <= i.lo) return QSubmodule::localization(q);
      return gen_like(s, i, q, true);
    }
  }
  return a;
}

QSubmodule mul_prime(const Spectrum& s, const Prime& p, const QSubmodule& a) {
  if (p == s.zero()) return QSubmodule::zero();
  switch (a.form) {
    case Form::Zero: return a;
    case Form::Loc: return p <= a.loc ? QSubmodule::prime(s, p) : a;
    case Form::Ideal: {
      const IdealPos& i = a.ideal;
      if (i.is_prime) {
        if (p != i.lo) return QSubmodule::prime(s, pmin(p, i.lo));
        if (s.idempotent(p)) return a;
        return gen(s, *s.predecessor(p), p, true);  // p^2
      }
      if (p > i.attached) return a;
      if (p == i.attached) return gen_like(s, i, p, i.iso_loc && !s.idempotent(p));
      if (i.hi <= p) return gen_like(s, i, p, !s.idempotent(p));
      return QSubmodule::prime(s, p);
    }
  }
  return a;
}

QSubmodule colon_prime(const Spectrum& s, const QSubmodule& a, const Prime& p) {
  if (p == s.zero()) return QSubmodule::field(s);
  switch (a.form) {
    case Form::Zero: return a;
    case Form::Loc:
      if (p > a.loc) return a;
      if (p == a.loc && !s.idempotent(p))
        throw NotDescribable("(R_p : p) for non-idempotent p is a proper overmodule of R_p");
      return QSubmodule::localization(p);
    case Form::Ideal: {
      const IdealPos& i = a.ideal;
      if (i.is_prime) return p <= i.lo ? QSubmodule::localization(p) : a;
      if (p <= i.lo) return QSubmodule::localization(p);
      if (p < i.attached) return gen_like(s, i, p, true);
      if (p > i.attached) return a;
      if (s.idempotent(p)) return gen_like(s, i, p, true);
      // canonical representative of the slot: the square of hi, divided by p
      if (i.hi == p) return QSubmodule::prime(s, p);
      return gen_like(s, i, p, true);
    }
  }
  return a;
}

QSubmodule colon(const Spectrum& s, const QSubmodule& i, const QSubmodule& j) {
  if (!subset(s, i, j)) throw NotContained("colon needs I inside J");
  if (i == j) return QSubmodule::ring(s);
  if (i.is_zero()) return i;
  switch (j.form) {
    case Form::Zero: return i;  // unreachable: I inside 0 means I = 0
    case Form::Loc: {
      const Prime& b = j.loc;
      if (i.is_loc()) return QSubmodule::prime(s, b);
      const IdealPos& g = i.ideal;
      if (g.is_prime) return QSubmodule::prime(s, pmin(g.lo, b));
      if (g.attached <= b) return i;
      if (g.hi <= b) return gen_like(s, g, b, !s.idempotent(b));
      return QSubmodule::prime(s, b);
    }
    case Form::Ideal: {
      const IdealPos& h = j.ideal;
      if (h.is_prime) return meet(s, colon_prime(s, i, h.lo), QSubmodule::ring(s));
      const IdealPos& g = i.ideal;
      if (g.is_prime) return i;
      const Prime& a = g.attached;
      const Prime& c = h.attached;
      if (a < c) return i;
      if (a == c) return gen_like(s, g, a, !h.iso_loc || g.iso_loc);
      return gen_like(s, g, c, !h.iso_loc || !s.idempotent(c));
    }
  }
  return i;
}

QSubmodule saturate(const Spectrum& s, const QSubmodule& i, const Prime& q) {
  return meet(s, extend(s, i, q), QSubmodule::ring(s));
}

bool in_angle(const Spectrum& s, const QSubmodule& i, const Interval& chi) {
  if (i.is_loc()) return false;
  return chi.p <= lower_prime(s, i) && attached(s, i) <= chi.q;
}

UniserialModule UniserialModule::make(const Spectrum& s, const QSubmodule& num, const QSubmodule& den) {
  if (!subset(s, den, num)) throw NotContained("denominator not inside numerator");
  return {num, den};
}

UniserialModule UniserialModule::cyclic(const Spectrum& s, const QSubmodule& i) {
  return make(s, QSubmodule::ring(s), i);
}

UniserialModule UniserialModule::residue(const Spectrum& s, const Prime& p) {
  return make(s, QSubmodule::localization(p), QSubmodule::prime(s, p));
}

UniserialModule UniserialModule::interval(const Spectrum& s, const Prime& q, const Prime& p) {
  return make(s, QSubmodule::localization(q), QSubmodule::prime(s, p));
}

UniserialModule UniserialModule::over_field(const Spectrum& s, const QSubmodule& i) {
  return make(s, QSubmodule::field(s), i);
}

bool operator==(const UniserialModule& a, const UniserialModule& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.num == b.num && a.den == b.den;
}

UniserialModule gamma_part(const Spectrum& s, const UniserialModule& m, const Prime& q) {
  auto t = meet_derived(s, extend(s, m.den, q), m.num);
  return {t, m.den};
}

UniserialModule f_part(const Spectrum& s, const UniserialModule& m, const Prime& q) {
  auto t = meet_derived(s, extend(s, m.den, q), m.num);
  return {m.num, t};
}

UniserialModule soc_part(const Spectrum& s, const UniserialModule& m, const Prime& p) {
  auto t = meet_derived(s, colon_prime(s, m.den, p), m.num);
  return {t, m.den};
}

bool is_q_divisible(const Spectrum& s, const UniserialModule& m, const Prime& q) {
  return m.is_zero() || q == s.top() || attached(s, m.num) <= q;
}

// ---- literals ----

namespace {

std::string trim(const std::string& x) {
  auto b = x.find_first_not_of(" \t");
  auto e = x.find_last_not_of(" \t");
  return b == std::string::npos ? "" : x.substr(b, e - b + 1);
}

}  // namespace

QSubmodule parse_submodule(const Spectrum& s, const std::string& lit_in) {
  std::string lit = trim(lit_in);
  if (lit == "zero" || lit == "0") return QSubmodule::zero();
  if (lit == "Q") return QSubmodule::field(s);
  if (lit == "R") return QSubmodule::ring(s);
  if (lit.rfind("prime:", 0) == 0) return QSubmodule::prime(s, s.parse(trim(lit.substr(6))));
  if (lit.rfind("loc:", 0) == 0) return QSubmodule::localization(s.parse(trim(lit.substr(4))));
  if (lit.rfind("gen:", 0) == 0) {
    std::optional<Prime> lo, att;
    bool iso = false;
    std::stringstream ss(lit.substr(4));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw SchemaError("bad generic field '" + kv + "'");
      std::string k = trim(kv.substr(0, eq)), v = trim(kv.substr(eq + 1));
      if (k == "lo")
        lo = s.parse(v);
      else if (k == "att")
        att = s.parse(v);
      else if (k == "isoloc" || k == "iso")
        iso = (v == "true" || v == "1");
      else if (k != "hi")
        throw SchemaError("unknown generic field '" + k + "'");
    }
    if (!lo || !att) throw SchemaError("generic ideal needs lo and att");
    return QSubmodule::of(IdealPos::generic(s, *lo, *att, iso));
  }
  throw SchemaError("unknown submodule literal '" + lit_in + "'");
}

std::string to_literal(const Spectrum& s, const QSubmodule& a) {
  switch (a.form) {
    case Form::Zero: return "zero";
    case Form::Loc:
      if (a.loc == s.zero()) return "Q";
      if (a.loc == s.top()) return "R";
      return "loc:" + s.name(a.loc);
    case Form::Ideal:
      if (a.ideal.is_prime) return "prime:" + s.name(a.ideal.lo);
      return "gen:lo=" + s.name(a.ideal.lo) + ",att=" + s.name(a.ideal.attached) +
             ",isoloc=" + (a.ideal.iso_loc ? "true" : "false");
  }
  return "";
}

UniserialModule parse_module(const Spectrum& s, const std::string& lit) {
  auto slash = lit.find(" / ");
  std::size_t skip = 3;
  if (slash == std::string::npos) {
    // "loc:q/prime:p": the separator is the slash not inside a rational
    slash = std::string::npos;
    for (std::size_t i = 0; i < lit.size(); ++i)
      if (lit[i] == '/' && i + 1 < lit.size() && !std::isdigit(static_cast<unsigned char>(lit[i + 1]))) {
        slash = i;
        break;
      }
    skip = 1;
  }
  if (slash == std::string::npos) return UniserialModule::cyclic(s, parse_submodule(s, lit));
  return UniserialModule::make(s, parse_submodule(s, lit.substr(0, slash)),
                               parse_submodule(s, lit.substr(slash + skip)));
}

std::string to_literal(const Spectrum& s, const UniserialModule& m) {
  return to_literal(s, m.num) + " / " + to_literal(s, m.den);
}

// ---- vocabularies ----

std::vector<IdealPos> ideal_vocabulary(const Spectrum& s) {
  std::vector<IdealPos> out;
  auto ps = s.primes();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out.push_back(IdealPos::prime(s, ps[i]));
    if (i + 1 < ps.size())
      for (std::size_t a = i + 1; a < ps.size(); ++a) {
        out.push_back(IdealPos::generic(s, ps[i], ps[a], true));
        if (s.idempotent(ps[a])) out.push_back(IdealPos::generic(s, ps[i], ps[a], false));
      }
  }
  return out;
}

std::vector<UniserialModule> cyclic_vocabulary(const Spectrum& s) {
  std::vector<UniserialModule> out;
  out.push_back(UniserialModule::cyclic(s, QSubmodule::zero()));
  for (auto& i : ideal_vocabulary(s)) out.push_back(UniserialModule::cyclic(s, QSubmodule::of(i)));
  out.push_back(UniserialModule::cyclic(s, QSubmodule::ring(s)));
  return out;
}

std::vector<UniserialModule> uniserial_vocabulary(const Spectrum& s) {
  std::vector<UniserialModule> out;
  auto ideals = ideal_vocabulary(s);
  for (auto& b : s.primes()) {
    auto num = QSubmodule::localization(b);
    out.push_back({num, QSubmodule::zero()});
    for (auto& i : ideals) out.push_back({num, QSubmodule::of(i)});
    for (auto& a : s.primes())
      if (b <= a) out.push_back({num, QSubmodule::localization(a)});
  }
  return out;
}

}  // namespace vclass
