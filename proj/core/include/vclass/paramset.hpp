#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vclass/rational.hpp"

namespace vclass {

// Terms limit + (start - limit) * ratio^n for n >= 0, together with the limit.
struct Geometric {
  Rat start;
  Rat ratio;
  Rat limit;

  Rat term(unsigned n) const;
  bool contains(const Rat& x) const;
  // index of the term equal to x, if any (the limit is not a term)
  std::optional<unsigned> term_index(const Rat& x) const;
  bool increasing() const { return start < limit; }
  bool operator==(const Geometric&) const = default;
};

// An open/closed interval of rationals, possibly unbounded on either side.
struct RatInterval {
  std::optional<Rat> lo, hi;  // nullopt = unbounded
  bool lo_closed = true, hi_closed = true;

  bool contains(const Rat& x) const;
  bool empty() const;
  bool has_interior() const;
};

// Closed subsets of [0,1] the library can describe: finite unions of closed
// ranges, finite point sets and geometric sequences with their limit.
class ParamSet {
 public:
  std::vector<std::pair<Rat, Rat>> ranges;  // closed [a,b] with a < b
  std::vector<Rat> points;
  std::vector<Geometric> seqs;

  static ParamSet range(Rat a, Rat b);
  static ParamSet point(Rat a);

  bool empty() const { return ranges.empty() && points.empty() && seqs.empty(); }
  bool contains(const Rat& x) const;
  Rat min() const;
  Rat max() const;
  // Does the set contain an interval of positive length?
  bool has_interior() const { return !ranges.empty(); }
  // Adds every element of other.
  void merge(const ParamSet& other);
  // Sorted finite list of every rational where membership can change:
  // range endpoints, points, sequence starts/limits.
  std::vector<Rat> breakpoints() const;
  // One element in every non-empty cell of the partition of the rationals
  // cut out by the given sorted breakpoints (each breakpoint is its own cell).
  std::vector<Rat> representatives(const std::vector<Rat>& cuts) const;
  // Some element strictly between a and b, if one exists.
  std::optional<Rat> element_between(const Rat& a, const Rat& b) const;
  // Largest element < x / smallest element > x.
  std::optional<Rat> pred(const Rat& x) const;
  std::optional<Rat> succ(const Rat& x) const;
  // Element x has a strictly smaller element arbitrarily close to it.
  bool accumulates_below(const Rat& x) const;
  bool accumulates_above(const Rat& x) const;
  // Every element of this set lies in one of the intervals.
  bool covered_by(const std::vector<RatInterval>& ivs, const ParamSet* extra = nullptr) const;
  bool operator==(const ParamSet&) const = default;
};

std::string param_str(const ParamSet& p);

// Largest number of sequence terms ever materialised.
inline constexpr unsigned kMaxTerms = 48;

}  // namespace vclass
