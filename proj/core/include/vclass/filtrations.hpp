#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vclass/systems.hpp"

namespace vclass {

enum class BelowRule { Empty, ConstantFirst };
// Ex1Tail: X_n = {[0,q_n],[m,m]}, Ex2Tail: X_n = {[0,q_n]} for n past the window (omega+1 only).
enum class AboveRule { ConstantLast, Ex1Tail, Ex2Tail };

const char* below_str(BelowRule r);
const char* above_str(AboveRule r);

class AdmissibleFiltration {
 public:
  AdmissibleFiltration(Spectrum s, int first, std::vector<AdmissibleSystem> systems,
                       BelowRule below = BelowRule::Empty, AboveRule above = AboveRule::ConstantLast);

  const Spectrum& spectrum() const { return s_; }
  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(systems_.size()) - 1; }
  BelowRule below() const { return below_; }
  AboveRule above() const { return above_; }
  const std::vector<AdmissibleSystem>& window() const { return systems_; }
  // X_n for any integer n
  AdmissibleSystem at(int n) const;
  // Degrees a-1 .. b+2: enough to see every rule boundary once.
  std::vector<int> probe_degrees() const;

 private:
  Spectrum s_;
  int first_;
  std::vector<AdmissibleSystem> systems_;
  BelowRule below_;
  AboveRule above_;
};

bool operator==(const AdmissibleFiltration& a, const AdmissibleFiltration& b);

struct FiltrationReport {
  bool ok = true;
  bool systems_ok = true;
  bool nested = true;
  bool nondense_definition = true;  // (a) tau strictly between containing no lower member
  bool nondense_gap = true;         // (b) tau strictly inside a gap of the lower system
  bool nondense_density = true;     // (c) Z_C dense in C
  std::vector<std::string> violations;
};

// Throws FormulationMismatch if the three non-density checks disagree.
FiltrationReport validate_filtration(const AdmissibleFiltration& f);
// The three non-density checks for one pair of consecutive systems.
struct NonDensity {
  bool definition = true, gap = true, density = true;
  std::string witness;
};
NonDensity nondensity(const AdmissibleSystem& lower, const AdmissibleSystem& upper);

struct DnconsReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};
DnconsReport dncons_check(const AdmissibleFiltration& f);

struct EpiChain {
  Spectrum spectrum;
  int first = 0;
  std::vector<std::string> ring_descriptors;  // per window degree
  BelowRule below = BelowRule::Empty;
  AboveRule above = AboveRule::ConstantLast;
  std::vector<AdmissibleSystem> systems;
  bool flat = false;

  std::string descriptor(int n) const;
  std::string render() const;
};

struct GeneratorDescriptor {
  enum class Kind { KComplex, UniserialStalk };
  Kind kind = Kind::KComplex;
  std::string object;  // "K(0,m)" or "R_{q_x}/p_x ..."
  int shift = 0;       // added to the degree: 0 for K(q,p)[n], -1 for stalks R_q/p[n-1]
  std::optional<int> from, to;  // degree range, nullopt = unbounded
  std::string text() const;
};

struct ClassificationReport {
  bool nowhere_dense = false;
  bool compactly_generated = false;
  bool bounded = false;
  bool right_nondegenerate = false;
  bool co_intermediate = false;
  std::optional<EpiChain> epi_chain;
  std::vector<GeneratorDescriptor> generators;
  std::vector<std::string> notes;
};

ClassificationReport classify(const AdmissibleFiltration& f);

// Filtrations with below = Empty and above = ConstantLast on a finite spectrum.
// Budget from VCLASS_BUDGET (default 2000000); BudgetExceeded past it.
std::size_t enumerate(const Spectrum& s, int first, int last,
                      const std::function<void(const AdmissibleFiltration&)>& sink);
std::size_t count_filtrations(const Spectrum& s, int first, int last);
std::size_t enumeration_budget();

}  // namespace vclass
