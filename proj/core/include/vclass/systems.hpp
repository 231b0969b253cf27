#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vclass/ideals.hpp"
#include "vclass/paramset.hpp"
#include "vclass/spectrum.hpp"

namespace vclass {

// lex_double families: Full = {[p_x,q_x]}, Points = {[p_x,p_x],[q_x,q_x]}
enum class FamilyKind { Full, Points };

struct Family {
  FamilyKind kind = FamilyKind::Full;
  ParamSet params;
};

// Normalised piece of a system. Family atoms carry exactly one range or one
// sequence; isolated parameters are expanded into explicit intervals.
struct Atom {
  enum class Kind { Explicit, Family };
  Kind kind = Kind::Explicit;
  Interval iv;                      // explicit
  FamilyKind fam = FamilyKind::Full;
  ParamSet set;                     // family
  Prime lower, upper;               // hull in the prime order

  bool is_range() const { return kind == Kind::Family && !set.ranges.empty(); }
  bool is_seq() const { return kind == Kind::Family && !set.seqs.empty(); }
  Interval first() const;
  Interval last() const;
};

bool operator==(const Atom& a, const Atom& b);

struct Violation {
  std::string axiom;  // disjointness | idempotency | completeness | interval
  std::string witness;
};

class AdmissibleSystem {
 public:
  explicit AdmissibleSystem(Spectrum s, std::vector<Interval> ivs = {}, std::vector<Family> fams = {});

  const Spectrum& spectrum() const { return s_; }
  bool empty() const { return atoms_.empty(); }
  bool is_finite_list() const;
  // every interval; NotDescribable for parametric systems
  std::vector<Interval> intervals() const;
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Violation>& issues() const { return issues_; }
  const std::vector<Interval>& raw_intervals() const { return raw_ivs_; }
  const std::vector<Family>& raw_families() const { return raw_fams_; }

 private:
  void normalise();

  Spectrum s_;
  std::vector<Interval> raw_ivs_;
  std::vector<Family> raw_fams_;
  std::vector<Atom> atoms_;
  std::vector<Violation> issues_;
};

// Same members.
bool operator==(const AdmissibleSystem& a, const AdmissibleSystem& b);

std::string interval_str(const Spectrum& s, const Interval& iv);
std::string system_str(const AdmissibleSystem& x);

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_system(const AdmissibleSystem& x);

// ---- order queries ----

// Result of looking for an extremal member: found, nothing there, or the
// members accumulate without an extremum.
struct Probe {
  enum class Kind { Found, None, Accumulates };
  Kind kind = Kind::None;
  Interval iv;
};

std::optional<Interval> member_containing(const AdmissibleSystem& x, const Prime& p);
Probe last_below(const AdmissibleSystem& x, const Prime& p);   // largest member with q < p
Probe first_above(const AdmissibleSystem& x, const Prime& p);  // smallest member with p > prime
std::optional<Interval> min_member(const AdmissibleSystem& x);
std::optional<Interval> max_member(const AdmissibleSystem& x);

// ---- gaps ----

enum class GapCase { Cover, BelowMin, AboveMax, EmptySystem };

struct Gap {
  ExtPrime q, p;
  GapCase kind = GapCase::Cover;
};

bool operator==(const Gap& a, const Gap& b);
bool operator<(const Gap& a, const Gap& b);
std::string ext_str(const Spectrum& s, const ExtPrime& e);
std::string gap_str(const Spectrum& s, const Gap& g);
const char* gap_case_str(GapCase c);

// Infinite runs of covers inside lex families.
struct GapFamily {
  enum class Kind { PointPairs, SeqSteps };  // (p_x,q_x) for x in params | steps of a sequence
  Kind kind = Kind::PointPairs;
  ParamSet params;
  Geometric seq;
  bool operator==(const GapFamily&) const = default;
};

struct GapSet {
  std::vector<Gap> finite;  // sorted
  std::vector<GapFamily> families;
  bool operator==(const GapSet&) const = default;
  bool empty() const { return finite.empty() && families.empty(); }
};

GapSet gaps(const AdmissibleSystem& x);
// Gap g strictly containing the ideal position, or nothing.
std::string gap_family_str(const Spectrum& s, const GapFamily& f);
// A finite sample of members of every gap family (one per parameter cell).
std::vector<Gap> sample_gaps(const AdmissibleSystem& x, const GapSet& gs, const std::vector<Rat>& cuts);

// ---- density ----

struct DenseClass {
  Rat lo, hi;  // parameter range of a Full family atom
  Interval tau;
};

std::vector<DenseClass> dense_classes(const AdmissibleSystem& x);  // H(X)
AdmissibleSystem hull(const AdmissibleSystem& x);
bool is_nowhere_dense(const AdmissibleSystem& x);
bool is_dense_everywhere(const AdmissibleSystem& x);

// ---- location ----

struct Location {
  bool in_interval = false;
  Interval chi;
  Gap gap;
};

// I is zero or a proper ideal token.
Location locate_ideal(const AdmissibleSystem& x, const QSubmodule& i);

// ---- comparison of systems ----

// every member of a lies inside a member of b
bool is_nested(const AdmissibleSystem& a, const AdmissibleSystem& b, std::string* witness = nullptr);

// Parameters x for which [p_x,q_x] contains a member of x (lex only).
ParamSet blocking_params(const AdmissibleSystem& x);
// Does some member of x lie inside [a,b]?
bool has_member_inside(const AdmissibleSystem& x, const Interval& iv);

// Every admissible system of a finite spectrum, in a fixed order.
std::vector<AdmissibleSystem> all_systems(const Spectrum& s);

}  // namespace vclass
