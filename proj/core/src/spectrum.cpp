#include "vclass/spectrum.hpp"

#include <set>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h | 1;  // never 0
}

bool is_int(const Rat& x) { return x.denominator() == 1; }

}  // namespace

Ordering compare(const Prime& a, const Prime& b) {
  if (a.sid != b.sid) throw MixedSpectrum("primes from different spectra");
  auto key = [](const Prime& p) { return std::tuple(p.tier, p.x, p.tag); };
  if (key(a) < key(b)) return Ordering::LT;
  if (key(b) < key(a)) return Ordering::GT;
  return Ordering::EQ;
}

bool operator==(const Prime& a, const Prime& b) { return compare(a, b) == Ordering::EQ; }
bool operator<(const Prime& a, const Prime& b) { return compare(a, b) == Ordering::LT; }

Ordering compare(const ExtPrime& a, const ExtPrime& b) {
  auto rank = [](const ExtPrime& e) { return e.is_neg_inf() ? 0 : e.is_prime() ? 1 : 2; };
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? Ordering::LT : Ordering::GT;
  if (ra != 1) return Ordering::EQ;
  return compare(a.p, b.p);
}

bool operator==(const ExtPrime& a, const ExtPrime& b) { return compare(a, b) == Ordering::EQ; }
bool operator<(const ExtPrime& a, const ExtPrime& b) { return compare(a, b) == Ordering::LT; }

void Spectrum::seal() {
  std::string d = std::to_string(static_cast<int>(kind_));
  for (std::size_t i = 0; i < names_.size(); ++i) d += "|" + names_[i] + (idem_[i] ? "+" : "-");
  id_ = fnv(d);
}

Spectrum Spectrum::finite_chain(std::vector<std::string> names, std::vector<bool> idempotent) {
  if (names.empty()) throw SchemaError("a finite chain needs at least one prime");
  if (names.size() != idempotent.size()) throw SchemaError("names and flags differ in length");
  std::set<std::string> seen;
  for (auto& n : names)
    if (!seen.insert(n).second) throw SchemaError("duplicate prime name '" + n + "'");
  Spectrum s;
  s.kind_ = SpectrumKind::FiniteChain;
  s.names_ = std::move(names);
  s.idem_ = std::move(idempotent);
  s.idem_[0] = true;  // 0 * 0 = 0
  s.seal();
  return s;
}

Spectrum Spectrum::two_point(bool m_idempotent) {
  Spectrum s;
  s.kind_ = SpectrumKind::TwoPoint;
  s.names_ = {"0", "m"};
  s.idem_ = {true, m_idempotent};
  s.seal();
  return s;
}

Spectrum Spectrum::omega_plus_one() {
  Spectrum s;
  s.kind_ = SpectrumKind::OmegaPlusOne;
  s.seal();
  return s;
}

Spectrum Spectrum::lex_double() {
  Spectrum s;
  s.kind_ = SpectrumKind::LexDouble;
  s.seal();
  return s;
}

std::size_t Spectrum::size() const {
  if (!is_finite()) throw NotDescribable("spectrum is infinite");
  return names_.size();
}

Prime Spectrum::at(std::size_t i) const {
  if (i >= size()) throw SchemaError("prime index out of range");
  return Prime{0, Rat(static_cast<long long>(i)), 0, id_};
}

std::size_t Spectrum::index(const Prime& p) const {
  check(p);
  if (!is_finite()) throw NotDescribable("index on an infinite spectrum");
  return static_cast<std::size_t>(p.x.numerator());
}

std::vector<Prime> Spectrum::primes() const {
  std::vector<Prime> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

Prime Spectrum::zero() const { return Prime{0, Rat(0), 0, id_}; }

Prime Spectrum::top() const {
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne: return Prime{1, Rat(0), 0, id_};
    case SpectrumKind::LexDouble: return Prime{0, Rat(1), 1, id_};
    default: return at(names_.size() - 1);
  }
}

Prime Spectrum::q(unsigned n) const {
  if (kind_ != SpectrumKind::OmegaPlusOne) throw NotDescribable("q_n only exists on omega+1");
  return Prime{0, Rat(static_cast<long long>(n)), 0, id_};
}

Prime Spectrum::lex_p(const Rat& x) const {
  if (kind_ != SpectrumKind::LexDouble || x < 0 || x > 1) throw NotDescribable("no such lex prime");
  return Prime{0, x, 0, id_};
}

Prime Spectrum::lex_q(const Rat& x) const {
  if (kind_ != SpectrumKind::LexDouble || x < 0 || x > 1) throw NotDescribable("no such lex prime");
  return Prime{0, x, 1, id_};
}

bool Spectrum::owns(const Prime& p) const {
  if (p.sid != id_) return false;
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne:
      return (p.tier == 1 && p.x == 0 && p.tag == 0) ||
             (p.tier == 0 && is_int(p.x) && p.x >= 0 && p.tag == 0);
    case SpectrumKind::LexDouble:
      return p.tier == 0 && p.x >= 0 && p.x <= 1 && (p.tag == 0 || p.tag == 1);
    default:
      return p.tier == 0 && p.tag == 0 && is_int(p.x) && p.x >= 0 &&
             p.x < static_cast<long long>(names_.size());
  }
}

void Spectrum::check(const Prime& p) const {
  if (p.sid != id_) throw MixedSpectrum("prime does not belong to this spectrum");
  if (!owns(p)) throw SchemaError("malformed prime");
}

bool Spectrum::idempotent(const Prime& p) const {
  check(p);
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne:
      // value group Z^(omega): only 0 and the union m are idempotent
      return p.tier == 1 || p.x == 0;
    case SpectrumKind::LexDouble: return true;
    default: return idem_[index(p)];
  }
}

std::optional<Prime> Spectrum::successor(const Prime& p) const {
  check(p);
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne:
      if (p.tier == 1) return std::nullopt;
      return q(static_cast<unsigned>(p.x.numerator()) + 1);
    case SpectrumKind::LexDouble:
      if (p.tag == 0) return lex_q(p.x);
      return std::nullopt;
    default:
      if (index(p) + 1 >= names_.size()) return std::nullopt;
      return at(index(p) + 1);
  }
}

std::optional<Prime> Spectrum::predecessor(const Prime& p) const {
  check(p);
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne:
      if (p.tier == 1 || p.x == 0) return std::nullopt;
      return q(static_cast<unsigned>(p.x.numerator()) - 1);
    case SpectrumKind::LexDouble:
      if (p.tag == 1) return lex_p(p.x);
      return std::nullopt;
    default:
      if (index(p) == 0) return std::nullopt;
      return at(index(p) - 1);
  }
}

std::string Spectrum::name(const Prime& p) const {
  check(p);
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne:
      if (p.tier == 1) return "m";
      if (p.x == 0) return "0";
      return "q_" + rat_str(p.x);
    case SpectrumKind::LexDouble:
      if (p == zero()) return "0";
      if (p == top()) return "m";
      return (p.tag == 0 ? "p_" : "q_") + rat_str(p.x);
    default: return names_[index(p)];
  }
}

Prime Spectrum::parse(const std::string& s_in) const {
  std::string s = s_in;
  // allow q_{1/2}
  if (s.size() > 3 && s[1] == '_' && s[2] == '{' && s.back() == '}') s = s.substr(0, 2) + s.substr(3, s.size() - 4);
  switch (kind_) {
    case SpectrumKind::OmegaPlusOne: {
      if (s == "m") return top();
      if (s == "0") return zero();
      if (s.rfind("q_", 0) == 0) {
        Rat n = parse_rat(s.substr(2));
        if (!is_int(n) || n < 0) break;
        return q(static_cast<unsigned>(n.numerator()));
      }
      break;
    }
    case SpectrumKind::LexDouble: {
      if (s == "0") return zero();
      if (s == "m") return top();
      if (s.size() > 2 && (s[0] == 'p' || s[0] == 'q') && s[1] == '_') {
        Rat x = parse_rat(s.substr(2));
        if (x < 0 || x > 1) break;
        return s[0] == 'p' ? lex_p(x) : lex_q(x);
      }
      break;
    }
    default:
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == s) return at(i);
      break;
  }
  throw SchemaError("unknown prime '" + s_in + "'");
}

Prime Spectrum::sup(const PrimeSubset& s) const {
  std::optional<Prime> best;
  auto take = [&](const Prime& p) {
    check(p);
    if (!best || *best < p) best = p;
  };
  for (auto& p : s.finite) take(p);
  if (s.tail_from) {
    if (kind_ != SpectrumKind::OmegaPlusOne) throw NotDescribable("tails only exist on omega+1");
    take(top());  // no maximal element; the union is m
  }
  if (s.params) {
    if (kind_ != SpectrumKind::LexDouble) throw NotDescribable("parameter sets only exist on lex_double");
    if (!s.params->empty()) {
      if (!s.with_p && !s.with_q) throw NotDescribable("parameter set selects no primes");
      Rat x = s.params->max();  // parameter sets are closed
      take(s.with_q ? lex_q(x) : lex_p(x));
    }
  }
  if (!best) throw EmptySubset("sup of an empty set");
  return *best;
}

Prime Spectrum::inf(const PrimeSubset& s) const {
  std::optional<Prime> best;
  auto take = [&](const Prime& p) {
    check(p);
    if (!best || p < *best) best = p;
  };
  for (auto& p : s.finite) take(p);
  if (s.tail_from) {
    if (kind_ != SpectrumKind::OmegaPlusOne) throw NotDescribable("tails only exist on omega+1");
    take(q(*s.tail_from));
  }
  if (s.params) {
    if (kind_ != SpectrumKind::LexDouble) throw NotDescribable("parameter sets only exist on lex_double");
    if (!s.params->empty()) {
      if (!s.with_p && !s.with_q) throw NotDescribable("parameter set selects no primes");
      Rat x = s.params->min();
      take(s.with_p ? lex_p(x) : lex_q(x));
    }
  }
  if (!best) throw EmptySubset("inf of an empty set");
  return *best;
}

}  // namespace vclass
