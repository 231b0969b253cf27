#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vclass/cosilting.hpp"
#include "vclass/filtrations.hpp"

namespace vclass {

// V_n = C_n ∩ D_{n+1}, interval form: M in the class of X_n and F_q(M) is
// q-divisible for every [p,q] in X_{n+1}.
bool xi_membership(const AdmissibleFiltration& f, int n, const UniserialModule& m);
// Same class through H^0/Tor over X_n, H^1 over the gaps of X_{n+1} and
// R_q/p (x) M over the dense subsets of X_{n+1}.
bool xi_membership_homological(const AdmissibleFiltration& f, int n, const UniserialModule& m);

struct CoaisleModel {
  AdmissibleFiltration filtration;
  bool member(int n, const UniserialModule& m) const { return xi_membership(filtration, n, m); }
};

using DegreeOracle = std::function<bool(int, const UniserialModule&)>;

// Recovers X_n for n in [first-1, last+2], infers the rules past the window
// and validates. InvalidOracle when nothing fits.
AdmissibleFiltration theta_recover(const DegreeOracle& oracle, const Spectrum& s, int first, int last);

std::vector<GeneratorDescriptor> build_generators(const AdmissibleFiltration& f);

// "Q", "R", "R_{q}", "R/p", "R_{q}/p"
std::string factor_str(const Spectrum& s, const Interval& iv);
// factors joined by " × "; "0" for the empty system
std::string ring_descriptor(const AdmissibleSystem& x);
// Inverse of ring_descriptor on finite interval lists.
AdmissibleSystem parse_ring_descriptor(const Spectrum& s, const std::string& d);

// NotNowhereDense unless every X_n is nowhere dense.
EpiChain filtration_to_chain(const AdmissibleFiltration& f);
AdmissibleFiltration chain_to_filtration(const EpiChain& ch);

}  // namespace vclass
