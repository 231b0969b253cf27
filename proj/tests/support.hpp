#pragma once

#include <string>
#include <vector>

#include "vclass/coaisle.hpp"

namespace vtest {

using namespace vclass;

// Chain 0 < p1 < ... < m with the given idempotency flags (flags[0] is forced).
inline Spectrum chain(const std::vector<bool>& idem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    if (i == 0)
      names.push_back("0");
    else if (i + 1 == idem.size())
      names.push_back("m");
    else
      names.push_back("p" + std::to_string(i));
  }
  return Spectrum::finite_chain(names, idem);
}

// Every finite chain with lo..hi primes and every idempotency pattern.
inline std::vector<Spectrum> all_chains(std::size_t lo, std::size_t hi) {
  std::vector<Spectrum> out;
  for (std::size_t k = lo; k <= hi; ++k)
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
      std::vector<bool> idem(k, true);
      for (std::size_t i = 1; i < k; ++i) idem[i] = (mask >> (i - 1)) & 1u;
      out.push_back(chain(idem));
    }
  return out;
}

inline std::vector<QSubmodule> proper_ideals(const Spectrum& s) {
  std::vector<QSubmodule> out = {QSubmodule::zero()};
  for (auto& i : ideal_vocabulary(s)) out.push_back(QSubmodule::of(i));
  return out;
}

// Zero, proper ideals and every localization.
inline std::vector<QSubmodule> submodules(const Spectrum& s) {
  auto out = proper_ideals(s);
  for (auto& p : s.primes()) out.push_back(QSubmodule::localization(p));
  return out;
}

}  // namespace vtest
