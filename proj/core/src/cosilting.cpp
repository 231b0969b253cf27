#include "vclass/cosilting.hpp"

#include <algorithm>
#include <set>

#include "vclass/errors.hpp"

namespace vclass {

bool uniserial_in_class(const AdmissibleSystem& x, const UniserialModule& m) {
  if (m.is_zero()) return true;
  const Spectrum& s = x.spectrum();
  // every annihilator shares the attached prime of the denominator
  auto chi = member_containing(x, attached(s, m.den));
  if (!chi) return false;
  return subset_derived(s, mul_prime(s, chi->p, m.num), m.den);
}

bool cyclic_in_class(const AdmissibleSystem& x, const QSubmodule& i) {
  return uniserial_in_class(x, UniserialModule::cyclic(x.spectrum(), i));
}

bool tor1_vanishes(const Spectrum& s, const Prime& q, const Prime& p, const UniserialModule& m) {
  if (!s.idempotent(p)) throw NotIdempotent(s.name(p) + " is not idempotent");
  if (q < p) throw SchemaError("Tor test needs p inside q");
  if (m.is_zero()) return true;
  auto lhs = extend(s, meet_derived(s, m.den, mul_prime(s, p, m.num)), q);
  auto rhs = extend(s, mul_prime(s, p, m.den), q);
  return subset_derived(s, lhs, rhs);
}

bool tor1_vanishes(const Spectrum& s, const Prime& q, const Prime& p, const QSubmodule& i) {
  return tor1_vanishes(s, q, p, UniserialModule::cyclic(s, i));
}

bool h0_K_vanishes(const Spectrum& s, const KComplexRef& g, const UniserialModule& m) {
  if (m.is_zero()) return true;
  const auto& j = m.num;
  const auto& i = m.den;
  if (g.q.is_neg_inf() && g.p.is_ring()) return false;  // H^0 is M itself
  if (g.q.is_neg_inf()) return subset_derived(s, mul_prime(s, g.p.p, j), mul_prime(s, g.p.p, i));
  if (g.p.is_ring()) return subset_derived(s, meet_derived(s, extend(s, i, g.q.p), j), i);
  auto lhs = meet_derived(s, mul_prime(s, g.p.p, j), extend(s, i, g.q.p));
  return subset_derived(s, lhs, mul_prime(s, g.p.p, i));
}

bool h1_K_vanishes(const Spectrum& s, const KComplexRef& g, const UniserialModule& m) {
  if (g.q.is_neg_inf() || m.is_zero()) return true;
  return is_q_divisible(s, f_part(s, m, g.q.p), g.q.p);
}

bool tensor_vanishes(const Spectrum& s, const Prime& q, const Prime& p, const UniserialModule& m) {
  if (m.is_zero()) return true;
  auto lhs = extend(s, m.num, q);
  auto rhs = join_derived(s, extend(s, m.den, q), extend(s, mul_prime(s, p, m.num), q));
  return subset_derived(s, lhs, rhs);
}

std::vector<Rat> module_cuts(const UniserialModule& m) {
  std::vector<Rat> out;
  auto add = [&](const QSubmodule& a) {
    if (a.is_loc()) out.push_back(a.loc.x);
    if (a.is_ideal()) {
      out.push_back(a.ideal.lo.x);
      out.push_back(a.ideal.hi.x);
      out.push_back(a.ideal.attached.x);
    }
  };
  add(m.num);
  add(m.den);
  out.push_back(Rat(0));
  out.push_back(Rat(1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Interval> sample_dense_subset(const AdmissibleSystem& x, const DenseClass& c,
                                          const std::vector<Rat>& cuts, const AdmissibleSystem* companion) {
  ParamSet blocked;
  if (companion) blocked = blocking_params(*companion);
  std::vector<Rat> pts = {c.lo, c.hi};
  for (auto& v : cuts)
    if (c.lo <= v && v <= c.hi) pts.push_back(v);
  for (auto& v : blocked.breakpoints())
    if (c.lo <= v && v <= c.hi) pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Rat> chosen;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!blocked.contains(pts[k])) chosen.push_back(pts[k]);
    if (k + 1 == pts.size()) break;
    Rat a = pts[k], b = pts[k + 1];
    for (int d = 1; d <= 6; ++d) {
      bool hit = false;
      for (long long j = 1; j < (1LL << d); j += 2) {
        Rat z = a + (b - a) * Rat(j, 1LL << d);
        if (!blocked.contains(z)) {
          chosen.push_back(z);
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
  }
  const Prime like = x.spectrum().zero();
  std::vector<Interval> out;
  for (auto& z : chosen) out.push_back({Prime{0, z, 0, like.sid}, Prime{0, z, 1, like.sid}});
  return out;
}

bool tor_description(const AdmissibleSystem& x, const UniserialModule& m) {
  const Spectrum& s = x.spectrum();
  auto cuts = module_cuts(m);
  AdmissibleSystem h = hull(x);
  for (auto& g : sample_gaps(h, gaps(h), cuts))
    if (!h0_K_vanishes(s, KComplexRef::of(g), m)) return false;
  for (auto& c : dense_classes(x))
    for (auto& iv : sample_dense_subset(x, c, cuts))
      if (!tor1_vanishes(s, iv.q, iv.p, m)) return false;
  return true;
}

TorReport class_equals_tor_description(const AdmissibleSystem& x, const std::vector<UniserialModule>& mods) {
  TorReport r;
  for (auto& m : mods) {
    TorRow row{m, uniserial_in_class(x, m), tor_description(x, m)};
    if (row.in_class != row.homological) ++r.mismatches;
    r.rows.push_back(row);
  }
  return r;
}

TorReport class_equals_tor_description(const AdmissibleSystem& x) {
  return class_equals_tor_description(x, cyclic_vocabulary(x.spectrum()));
}

AdmissibleSystem recover_system(const ModuleOracle& oracle, const Spectrum& s) {
  std::vector<Prime> probe;
  if (s.is_finite()) {
    probe = s.primes();
  } else if (s.kind() == SpectrumKind::OmegaPlusOne) {
    for (unsigned n = 0; n <= kOmegaProbe; ++n) probe.push_back(s.q(n));
    probe.push_back(s.top());
  } else {
    throw NotDescribable("recovery over lex_double needs a parametric oracle");
  }
  std::vector<Prime> k;
  for (auto& p : probe)
    if (oracle(UniserialModule::residue(s, p))) k.push_back(p);
  std::vector<Interval> ivs;
  for (auto& p : k) {
    std::optional<Prime> phi;
    for (auto& q : k)
      if (oracle(UniserialModule::interval(s, q, p))) {
        phi = q;
        break;  // k is sorted, first hit is the infimum
      }
    if (!phi) throw InvalidOracle("kappa(" + s.name(p) + ") is in the class but no R_q/p is");
    std::optional<Prime> psi;
    for (auto& q : k)
      if (oracle(UniserialModule::interval(s, *phi, q))) psi = q;
    if (!psi) throw InvalidOracle("no R_phi/q in the class for phi = " + s.name(*phi));
    Interval iv{*phi, *psi};
    if (std::find(ivs.begin(), ivs.end(), iv) == ivs.end()) ivs.push_back(iv);
  }
  AdmissibleSystem x(s, ivs);
  auto rep = validate_system(x);
  if (!rep.ok) throw InvalidOracle("recovered system fails " + rep.violations.front().axiom + ": " +
                                   rep.violations.front().witness);
  return x;
}

}  // namespace vclass
