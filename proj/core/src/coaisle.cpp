#include "vclass/coaisle.hpp"

#include <algorithm>
#include <map>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

// Upper ends q of members of x, one per parameter cell of the cuts.
std::vector<Prime> upper_ends(const AdmissibleSystem& x, const std::vector<Rat>& cuts) {
  const Spectrum& s = x.spectrum();
  std::vector<Prime> out;
  for (auto& a : x.atoms()) {
    if (a.kind == Atom::Kind::Explicit) {
      out.push_back(a.iv.q);
      continue;
    }
    for (auto& z : a.set.representatives(cuts)) {
      out.push_back(s.lex_q(z));
      if (a.fam == FamilyKind::Points) out.push_back(s.lex_p(z));
    }
  }
  return out;
}

}  // namespace

bool xi_membership(const AdmissibleFiltration& f, int n, const UniserialModule& m) {
  const Spectrum& s = f.spectrum();
  if (!uniserial_in_class(f.at(n), m)) return false;
  if (m.is_zero()) return true;
  for (auto& q : upper_ends(f.at(n + 1), module_cuts(m)))
    if (!is_q_divisible(s, f_part(s, m, q), q)) return false;
  return true;
}

bool xi_membership_homological(const AdmissibleFiltration& f, int n, const UniserialModule& m) {
  const Spectrum& s = f.spectrum();
  if (m.is_zero()) return true;
  auto cuts = module_cuts(m);
  auto prev = f.at(n - 1), cur = f.at(n), next = f.at(n + 1);
  for (auto& g : sample_gaps(cur, gaps(cur), cuts))
    if (!h0_K_vanishes(s, KComplexRef::of(g), m)) return false;
  for (auto& c : dense_classes(cur))
    for (auto& iv : sample_dense_subset(cur, c, cuts, &prev))
      if (!tor1_vanishes(s, iv.q, iv.p, m)) return false;
  for (auto& g : sample_gaps(next, gaps(next), cuts))
    if (!h1_K_vanishes(s, KComplexRef::of(g), m)) return false;
  for (auto& c : dense_classes(next))
    for (auto& iv : sample_dense_subset(next, c, cuts, &cur))
      if (!tensor_vanishes(s, iv.q, iv.p, m)) return false;
  return true;
}

AdmissibleFiltration theta_recover(const DegreeOracle& oracle, const Spectrum& s, int first, int last) {
  if (last < first) throw SchemaError("empty window");
  auto rec = [&](int n) { return recover_system([&](const UniserialModule& m) { return oracle(n, m); }, s); };
  std::vector<AdmissibleSystem> xs;
  for (int n = first; n <= last; ++n) xs.push_back(rec(n));

  auto below_sys = rec(first - 1);
  BelowRule below;
  if (below_sys.empty())
    below = BelowRule::Empty;
  else if (below_sys == xs.front())
    below = BelowRule::ConstantFirst;
  else
    throw InvalidOracle("degree " + std::to_string(first - 1) + " fits no rule below the window");

  auto up1 = rec(last + 1), up2 = rec(last + 2);
  std::optional<AboveRule> above;
  for (auto rule : {AboveRule::ConstantLast, AboveRule::Ex1Tail, AboveRule::Ex2Tail}) {
    if (rule != AboveRule::ConstantLast && (s.kind() != SpectrumKind::OmegaPlusOne || last + 1 < 0)) continue;
    AdmissibleFiltration cand(s, first, xs, below, rule);
    if (cand.at(last + 1) == up1 && cand.at(last + 2) == up2) {
      above = rule;
      break;
    }
  }
  if (!above) throw InvalidOracle("degrees past " + std::to_string(last) + " fit no tail rule");

  AdmissibleFiltration f(s, first, std::move(xs), below, *above);
  auto rep = validate_filtration(f);
  if (!rep.ok) throw InvalidOracle("recovered filtration is invalid: " + rep.violations.front());
  return f;
}

// ---- generators ----

std::string GeneratorDescriptor::text() const {
  std::string deg = shift == 0 ? "n" : "n" + std::to_string(shift);
  if (from && to && *from == *to) return object + "[" + std::to_string(*from + shift) + "]";
  std::string range;
  if (!from && !to)
    range = "all n";
  else if (!from)
    range = "n < " + std::to_string(*to + 1);
  else if (!to)
    range = "n >= " + std::to_string(*from);
  else
    range = std::to_string(*from) + " <= n <= " + std::to_string(*to);
  return object + "[" + deg + "] for " + range;
}

std::vector<GeneratorDescriptor> build_generators(const AdmissibleFiltration& f) {
  using Kind = GeneratorDescriptor::Kind;
  const Spectrum& s = f.spectrum();
  int lo = f.first() - 1, hi = f.last() + 1;
  using Key = std::pair<Kind, std::string>;
  std::vector<std::vector<Key>> per_degree;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Key> keys;
    if (n == hi && f.above() != AboveRule::ConstantLast) {
      keys.push_back({Kind::KComplex, f.above() == AboveRule::Ex1Tail ? "K(q_n,m)" : "K(q_n,R)"});
      per_degree.push_back(keys);
      continue;
    }
    auto x = f.at(n);
    auto gs = gaps(x);
    for (auto& g : gs.finite) keys.push_back({Kind::KComplex, "K" + gap_str(s, g)});
    for (auto& fam : gs.families) keys.push_back({Kind::KComplex, "K(q,p) for (q,p) " + gap_family_str(s, fam)});
    ParamSet blocked = blocking_params(f.at(n - 1));
    for (auto& c : dense_classes(x)) {
      std::string obj = "R_{q_x}/p_x for x in [" + rat_str(c.lo) + "," + rat_str(c.hi) + "]";
      if (!blocked.empty()) obj += " minus " + param_str(blocked);
      keys.push_back({Kind::UniserialStalk, obj});
    }
    per_degree.push_back(keys);
  }

  std::vector<GeneratorDescriptor> out;
  for (std::size_t i = 0; i < per_degree.size(); ++i)
    for (auto& key : per_degree[i]) {
      bool continues = i > 0 && std::find(per_degree[i - 1].begin(), per_degree[i - 1].end(), key) !=
                                    per_degree[i - 1].end();
      if (continues) continue;
      std::size_t j = i;
      while (j + 1 < per_degree.size() &&
             std::find(per_degree[j + 1].begin(), per_degree[j + 1].end(), key) != per_degree[j + 1].end())
        ++j;
      GeneratorDescriptor d;
      d.kind = key.first;
      d.object = key.second;
      d.shift = key.first == Kind::KComplex ? 0 : -1;
      if (i > 0) d.from = lo + static_cast<int>(i);
      if (j + 1 < per_degree.size()) d.to = lo + static_cast<int>(j);
      out.push_back(d);
    }
  return out;
}

// ---- epimorphism chains ----

std::string factor_str(const Spectrum& s, const Interval& iv) {
  if (iv.p == s.zero()) {
    if (iv.q == s.zero()) return "Q";
    if (iv.q == s.top()) return "R";
    return "R_{" + s.name(iv.q) + "}";
  }
  if (iv.q == s.top()) return "R/" + s.name(iv.p);
  return "R_{" + s.name(iv.q) + "}/" + s.name(iv.p);
}

std::string ring_descriptor(const AdmissibleSystem& x) {
  if (x.empty()) return "0";
  const Spectrum& s = x.spectrum();
  std::string out;
  for (auto& a : x.atoms()) {
    if (!out.empty()) out += " × ";
    if (a.kind == Atom::Kind::Explicit)
      out += factor_str(s, a.iv);
    else if (a.fam == FamilyKind::Points)
      out += "prod(x in " + param_str(a.set) + ") R_{p_x}/p_x × R_{q_x}/q_x";
    else
      out += "prod(x in " + param_str(a.set) + ") R_{q_x}/p_x";
  }
  return out;
}

AdmissibleSystem parse_ring_descriptor(const Spectrum& s, const std::string& d) {
  std::string t;
  for (char c : d)
    if (c != ' ') t += c;
  if (t == "0") return AdmissibleSystem(s);
  const std::string times = "×";
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    auto k = t.find(times, pos);
    parts.push_back(t.substr(pos, k == std::string::npos ? std::string::npos : k - pos));
    if (k == std::string::npos) break;
    pos = k + times.size();
  }
  std::vector<Interval> ivs;
  for (auto& f : parts) {
    if (f.rfind("prod", 0) == 0) throw NotDescribable("parametric factor '" + f + "' cannot be parsed back");
    if (f == "Q") {
      ivs.push_back({s.zero(), s.zero()});
      continue;
    }
    if (f.empty() || f[0] != 'R') throw SchemaError("bad ring factor '" + f + "'");
    std::string rest = f.substr(1);
    Prime q = s.top(), p = s.zero();
    if (rest.rfind("_{", 0) == 0) {
      auto close = rest.find('}');
      if (close == std::string::npos) throw SchemaError("bad ring factor '" + f + "'");
      q = s.parse(rest.substr(2, close - 2));
      rest = rest.substr(close + 1);
    }
    if (!rest.empty()) {
      if (rest[0] != '/') throw SchemaError("bad ring factor '" + f + "'");
      p = s.parse(rest.substr(1));
    }
    ivs.push_back({p, q});
  }
  return AdmissibleSystem(s, ivs);
}

namespace {

AdmissibleFiltration chain_filtration(const EpiChain& ch) {
  return AdmissibleFiltration(ch.spectrum, ch.first, ch.systems, ch.below, ch.above);
}

void require_nowhere_dense(const AdmissibleFiltration& f) {
  for (int n = f.first() - 1; n <= f.last() + 1; ++n)
    if (!is_nowhere_dense(f.at(n)))
      throw NotNowhereDense("X_" + std::to_string(n) + " = " + system_str(f.at(n)) + " has dense intervals");
}

}  // namespace

std::string EpiChain::descriptor(int n) const { return ring_descriptor(chain_filtration(*this).at(n)); }

std::string EpiChain::render() const {
  auto f = chain_filtration(*this);
  std::string out = "…";
  for (int n = f.first() - 1; n <= f.last() + 2; ++n) out += " ← " + ring_descriptor(f.at(n));
  return out + " ← …";
}

EpiChain filtration_to_chain(const AdmissibleFiltration& f) {
  require_nowhere_dense(f);
  EpiChain ch{f.spectrum(), f.first(), {}, f.below(), f.above(), f.window(), true};
  for (auto& x : f.window()) ch.ring_descriptors.push_back(ring_descriptor(x));
  const Spectrum& s = f.spectrum();
  for (int n = f.first() - 1; n <= f.last() + 1; ++n) {
    auto x = f.at(n);
    for (auto& a : x.atoms())
      if (a.kind != Atom::Kind::Explicit || !(a.iv.p == s.zero())) ch.flat = false;
  }
  return ch;
}

AdmissibleFiltration chain_to_filtration(const EpiChain& ch) {
  std::vector<AdmissibleSystem> xs;
  for (std::size_t i = 0; i < ch.ring_descriptors.size(); ++i) {
    std::optional<AdmissibleSystem> parsed;
    try {
      parsed = parse_ring_descriptor(ch.spectrum, ch.ring_descriptors[i]);
    } catch (const NotDescribable&) {
      if (i >= ch.systems.size()) throw;
    }
    if (i < ch.systems.size()) {
      if (parsed && !(*parsed == ch.systems[i]))
        throw SchemaError("descriptor '" + ch.ring_descriptors[i] + "' disagrees with its system");
      xs.push_back(ch.systems[i]);
    } else {
      xs.push_back(*parsed);
    }
  }
  AdmissibleFiltration f(ch.spectrum, ch.first, std::move(xs), ch.below, ch.above);
  require_nowhere_dense(f);
  auto rep = validate_filtration(f);
  if (!rep.ok) throw SchemaError("chain does not give an admissible filtration: " + rep.violations.front());
  return f;
}

}  // namespace vclass
