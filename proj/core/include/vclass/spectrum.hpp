#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vclass/paramset.hpp"
#include "vclass/rational.hpp"

namespace vclass {

enum class SpectrumKind { FiniteChain, OmegaPlusOne, TwoPoint, LexDouble };

enum class Ordering { LT, EQ, GT };

// A prime of some spectrum, ordered by (tier, x, tag).
//  finite chains: x = list index
//  omega: q_n has x = n, m has tier 1
//  lex: p_x has tag 0, q_x has tag 1
struct Prime {
  int tier = 0;
  Rat x{0};
  int tag = 0;
  std::uint64_t sid = 0;
};

Ordering compare(const Prime& a, const Prime& b);
bool operator==(const Prime& a, const Prime& b);
bool operator<(const Prime& a, const Prime& b);
inline bool operator!=(const Prime& a, const Prime& b) { return !(a == b); }
inline bool operator>(const Prime& a, const Prime& b) { return b < a; }
inline bool operator<=(const Prime& a, const Prime& b) { return !(b < a); }
inline bool operator>=(const Prime& a, const Prime& b) { return !(a < b); }
inline const Prime& pmin(const Prime& a, const Prime& b) { return b < a ? b : a; }
inline const Prime& pmax(const Prime& a, const Prime& b) { return a < b ? b : a; }

// Spec*(R): primes plus the sentinels -inf and R.
struct ExtPrime {
  enum class Kind { NegInf, Finite, Ring };
  Kind kind = Kind::Finite;
  Prime p;

  static ExtPrime neg_inf() { return {Kind::NegInf, {}}; }
  static ExtPrime ring() { return {Kind::Ring, {}}; }
  static ExtPrime of(const Prime& p) { return {Kind::Finite, p}; }
  bool is_neg_inf() const { return kind == Kind::NegInf; }
  bool is_ring() const { return kind == Kind::Ring; }
  bool is_prime() const { return kind == Kind::Finite; }
};

Ordering compare(const ExtPrime& a, const ExtPrime& b);
bool operator==(const ExtPrime& a, const ExtPrime& b);
bool operator<(const ExtPrime& a, const ExtPrime& b);

// Describable subsets of a spectrum.
struct PrimeSubset {
  std::vector<Prime> finite;
  // omega: every q_n with n >= tail_from
  std::optional<unsigned> tail_from;
  // lex: p_x (if with_p) and q_x (if with_q) for x in params
  std::optional<ParamSet> params;
  bool with_p = true, with_q = true;
};

class Spectrum {
 public:
  static Spectrum finite_chain(std::vector<std::string> names, std::vector<bool> idempotent);
  static Spectrum two_point(bool m_idempotent);
  static Spectrum omega_plus_one();
  static Spectrum lex_double();

  SpectrumKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == SpectrumKind::FiniteChain || kind_ == SpectrumKind::TwoPoint; }
  std::uint64_t id() const { return id_; }

  // finite spectra only
  std::size_t size() const;
  Prime at(std::size_t i) const;
  std::size_t index(const Prime& p) const;
  std::vector<Prime> primes() const;

  Prime zero() const;
  Prime top() const;
  Prime q(unsigned n) const;      // omega
  Prime lex_p(const Rat& x) const;  // lex
  Prime lex_q(const Rat& x) const;  // lex

  bool idempotent(const Prime& p) const;
  std::optional<Prime> successor(const Prime& p) const;
  std::optional<Prime> predecessor(const Prime& p) const;
  bool owns(const Prime& p) const;

  std::string name(const Prime& p) const;
  Prime parse(const std::string& s) const;

  Prime sup(const PrimeSubset& s) const;
  Prime inf(const PrimeSubset& s) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<bool>& flags() const { return idem_; }
  bool operator==(const Spectrum& o) const { return id_ == o.id_; }

 private:
  Spectrum() = default;
  void check(const Prime& p) const;
  void seal();

  SpectrumKind kind_ = SpectrumKind::FiniteChain;
  std::vector<std::string> names_;
  std::vector<bool> idem_;
  std::uint64_t id_ = 0;
};

}  // namespace vclass

namespace vclass {

// Formal interval [p,q] of primes.
struct Interval {
  Prime p, q;
};

inline bool operator==(const Interval& a, const Interval& b) { return a.p == b.p && a.q == b.q; }
inline bool operator<(const Interval& a, const Interval& b) {
  return a.p < b.p || (a.p == b.p && a.q < b.q);
}

}  // namespace vclass
