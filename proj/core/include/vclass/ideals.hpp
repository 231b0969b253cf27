#pragma once

#include <string>
#include <vector>

#include "vclass/spectrum.hpp"

namespace vclass {

// Symbolic proper non-zero ideal. Primes have lo = hi = attached.
// Generic ideals sit strictly between lo and its successor hi.
struct IdealPos {
  Prime lo, hi, attached;
  bool is_prime = false;
  bool iso_loc = false;

  static IdealPos prime(const Spectrum& s, const Prime& p);
  // hi is the successor of lo; attached >= hi
  static IdealPos generic(const Spectrum& s, const Prime& lo, const Prime& attached, bool iso_loc);
};

bool operator==(const IdealPos& a, const IdealPos& b);

// Submodule of the quotient field Q.
struct QSubmodule {
  enum class Form { Zero, Ideal, Loc };
  Form form = Form::Zero;
  IdealPos ideal;  // Form::Ideal
  Prime loc;       // Form::Loc: R_loc

  static QSubmodule zero() { return {}; }
  static QSubmodule of(const IdealPos& i) { return {Form::Ideal, i, {}}; }
  static QSubmodule localization(const Prime& p) { return {Form::Loc, {}, p}; }
  // Prime(0) is the zero ideal; normalises to Zero.
  static QSubmodule prime(const Spectrum& s, const Prime& p);
  static QSubmodule ring(const Spectrum& s) { return localization(s.top()); }
  static QSubmodule field(const Spectrum& s) { return localization(s.zero()); }

  bool is_zero() const { return form == Form::Zero; }
  bool is_ideal() const { return form == Form::Ideal; }
  bool is_loc() const { return form == Form::Loc; }
  bool is_prime() const { return is_ideal() && ideal.is_prime; }
  bool is_generic() const { return is_ideal() && !ideal.is_prime; }
};

bool operator==(const QSubmodule& a, const QSubmodule& b);

Prime attached(const Spectrum& s, const QSubmodule& a);
// largest prime contained in a (for ideals and zero)
Prime lower_prime(const Spectrum& s, const QSubmodule& a);

// Inclusion order. Throws IncomparableSymbolic for two distinct generic
// tokens of the same slot.
Ordering compare(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);
bool subset(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);
QSubmodule meet(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);
QSubmodule join(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);

// Same order, but two generic tokens of one slot are ordered through the
// canonical representatives {v > c} / {v >= c} at their attached levels.
// Exact for tokens obtained from one ideal by extend, mul_prime and
// colon_prime, which is how the vanishing predicates use it.
Ordering compare_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);
bool subset_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);
QSubmodule meet_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);
QSubmodule join_derived(const Spectrum& s, const QSubmodule& a, const QSubmodule& b);

// a * R_q
QSubmodule extend(const Spectrum& s, const QSubmodule& a, const Prime& q);
// p * a
QSubmodule mul_prime(const Spectrum& s, const Prime& p, const QSubmodule& a);
// {x in Q : x p in i}
QSubmodule colon_prime(const Spectrum& s, const QSubmodule& i, const Prime& p);
// (I : J) = {r in R : rJ in I}; the ring itself (R-marker) when I = J.
QSubmodule colon(const Spectrum& s, const QSubmodule& i, const QSubmodule& j);
// {r in R : sr in I for some s outside q}
QSubmodule saturate(const Spectrum& s, const QSubmodule& i, const Prime& q);

bool in_angle(const Spectrum& s, const QSubmodule& i, const Interval& chi);

// J/I with I inside J.
struct UniserialModule {
  QSubmodule num, den;

  bool is_zero() const { return num == den; }

  static UniserialModule make(const Spectrum& s, const QSubmodule& num, const QSubmodule& den);
  static UniserialModule cyclic(const Spectrum& s, const QSubmodule& i);  // R/I
  static UniserialModule residue(const Spectrum& s, const Prime& p);      // kappa(p)
  static UniserialModule interval(const Spectrum& s, const Prime& q, const Prime& p);  // R_q/p
  static UniserialModule over_field(const Spectrum& s, const QSubmodule& i);  // Q/I
};

bool operator==(const UniserialModule& a, const UniserialModule& b);

UniserialModule gamma_part(const Spectrum& s, const UniserialModule& m, const Prime& q);
UniserialModule f_part(const Spectrum& s, const UniserialModule& m, const Prime& q);
UniserialModule soc_part(const Spectrum& s, const UniserialModule& m, const Prime& p);
bool is_q_divisible(const Spectrum& s, const UniserialModule& m, const Prime& q);

// Literals: "zero", "Q", "R", "prime:q", "loc:q", "gen:lo=0,att=m,isoloc=true".
QSubmodule parse_submodule(const Spectrum& s, const std::string& lit);
std::string to_literal(const Spectrum& s, const QSubmodule& a);
// "loc:q / prime:p"
UniserialModule parse_module(const Spectrum& s, const std::string& lit);
std::string to_literal(const Spectrum& s, const UniserialModule& m);

// Finite spectra: every non-zero proper ideal token that names a real ideal.
// Non-iso generic tokens need an idempotent attached prime.
std::vector<IdealPos> ideal_vocabulary(const Spectrum& s);
// R/I for I zero, every ideal token, and I = R (the zero module).
std::vector<UniserialModule> cyclic_vocabulary(const Spectrum& s);
// R_b/I for every b and every I inside R_b (zero, ideal tokens, R_a with a >= b).
std::vector<UniserialModule> uniserial_vocabulary(const Spectrum& s);

}  // namespace vclass
