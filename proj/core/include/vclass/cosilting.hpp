#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vclass/ideals.hpp"
#include "vclass/systems.hpp"

namespace vclass {

// The two-term complex p -> R_q; q may be -inf, p may be R.
struct KComplexRef {
  ExtPrime q, p;
  static KComplexRef of(const Gap& g) { return {g.q, g.p}; }
};

bool uniserial_in_class(const AdmissibleSystem& x, const UniserialModule& m);
bool cyclic_in_class(const AdmissibleSystem& x, const QSubmodule& i);

// Tor_1(R_q/p, M) = 0; p <= q, p idempotent.
bool tor1_vanishes(const Spectrum& s, const Prime& q, const Prime& p, const UniserialModule& m);
bool tor1_vanishes(const Spectrum& s, const Prime& q, const Prime& p, const QSubmodule& i);
// H^0(K(q,p) (x) M) = 0
bool h0_K_vanishes(const Spectrum& s, const KComplexRef& g, const UniserialModule& m);
// H^1(K(q,p) (x) M) = 0
bool h1_K_vanishes(const Spectrum& s, const KComplexRef& g, const UniserialModule& m);
// R_q/p (x) M = 0
bool tensor_vanishes(const Spectrum& s, const Prime& q, const Prime& p, const UniserialModule& m);

// Members [p,q] of the canonical dense subset Z_C of a dense class, sampled
// one per parameter cell of the given cuts. With a companion system the
// members containing a companion member are dropped.
std::vector<Interval> sample_dense_subset(const AdmissibleSystem& x, const DenseClass& c,
                                          const std::vector<Rat>& cuts,
                                          const AdmissibleSystem* companion = nullptr);
// Parameters where predicates on m can change value.
std::vector<Rat> module_cuts(const UniserialModule& m);

struct TorRow {
  UniserialModule module;
  bool in_class = false;
  bool homological = false;
};

struct TorReport {
  std::vector<TorRow> rows;
  std::size_t mismatches = 0;
};

// Membership vs the gap/Tor description, over every cyclic module.
TorReport class_equals_tor_description(const AdmissibleSystem& x);
// The same comparison for a given module list.
TorReport class_equals_tor_description(const AdmissibleSystem& x, const std::vector<UniserialModule>& mods);
bool tor_description(const AdmissibleSystem& x, const UniserialModule& m);

using ModuleOracle = std::function<bool(const UniserialModule&)>;

// Omega spectra are probed up to q_N with this N.
inline constexpr unsigned kOmegaProbe = 24;

// Rebuilds the system of a cosilting class from its membership oracle.
AdmissibleSystem recover_system(const ModuleOracle& oracle, const Spectrum& s);

}  // namespace vclass
