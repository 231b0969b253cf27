#include "vclass/filtrations.hpp"

#include <algorithm>
#include <cstdlib>

#include "vclass/coaisle.hpp"
#include "vclass/errors.hpp"

namespace vclass {

const char* below_str(BelowRule r) { return r == BelowRule::Empty ? "empty" : "constant_first"; }

const char* above_str(AboveRule r) {
  switch (r) {
    case AboveRule::ConstantLast: return "constant_last";
    case AboveRule::Ex1Tail: return "ex1_tail";
    case AboveRule::Ex2Tail: return "ex2_tail";
  }
  return "";
}

AdmissibleFiltration::AdmissibleFiltration(Spectrum s, int first, std::vector<AdmissibleSystem> systems,
                                           BelowRule below, AboveRule above)
    : s_(std::move(s)), first_(first), systems_(std::move(systems)), below_(below), above_(above) {
  if (systems_.empty()) throw SchemaError("a filtration needs at least one degree");
  for (auto& x : systems_)
    if (!(x.spectrum() == s_)) throw MixedSpectrum("system over another spectrum");
  if (above_ != AboveRule::ConstantLast) {
    if (s_.kind() != SpectrumKind::OmegaPlusOne) throw SchemaError("q_n tails need the omega+1 spectrum");
    if (last() + 1 < 0) throw SchemaError("q_n tails need the window to reach degree -1");
  }
}

AdmissibleSystem AdmissibleFiltration::at(int n) const {
  if (n >= first() && n <= last()) return systems_[static_cast<std::size_t>(n - first())];
  if (n < first()) return below_ == BelowRule::Empty ? AdmissibleSystem(s_) : systems_.front();
  switch (above_) {
    case AboveRule::ConstantLast: return systems_.back();
    case AboveRule::Ex1Tail:
      return AdmissibleSystem(s_, {{s_.zero(), s_.q(static_cast<unsigned>(n))}, {s_.top(), s_.top()}});
    case AboveRule::Ex2Tail: return AdmissibleSystem(s_, {{s_.zero(), s_.q(static_cast<unsigned>(n))}});
  }
  return systems_.back();
}

std::vector<int> AdmissibleFiltration::probe_degrees() const {
  std::vector<int> out;
  for (int n = first() - 1; n <= last() + 2; ++n) out.push_back(n);
  return out;
}

bool operator==(const AdmissibleFiltration& a, const AdmissibleFiltration& b) {
  if (!(a.spectrum() == b.spectrum())) return false;
  for (int n = std::min(a.first(), b.first()) - 1; n <= std::max(a.last(), b.last()) + 2; ++n)
    if (!(a.at(n) == b.at(n))) return false;
  return true;
}

// ---- degreewise non-density ----

namespace {

// class endpoints, blocker breakpoints inside, and midpoints
std::vector<Rat> probe_grid(const DenseClass& c, const ParamSet& blocked) {
  std::vector<Rat> g = {c.lo, c.hi};
  for (auto& v : blocked.breakpoints())
    if (c.lo < v && v < c.hi) g.push_back(v);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Rat> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(g[i]);
    if (i + 1 < g.size()) out.push_back((g[i] + g[i + 1]) / 2);
  }
  return out;
}

// Is there a dyadic z strictly between a and b with ok(z)?
template <class Pred>
bool witness_between(const Rat& a, const Rat& b, Pred ok) {
  for (int d = 1; d <= 6; ++d)
    for (long long j = 1; j < (1LL << d); j += 2)
      if (ok(a + (b - a) * Rat(j, 1LL << d))) return true;
  return false;
}

}  // namespace

NonDensity nondensity(const AdmissibleSystem& lower, const AdmissibleSystem& upper) {
  NonDensity r;
  const Spectrum& s = upper.spectrum();
  ParamSet blocked = blocking_params(lower);
  for (auto& c : dense_classes(upper)) {
    for (auto& [b0, b1] : blocked.ranges)
      if (std::max(b0, c.lo) < std::min(b1, c.hi)) {
        r.density = false;
        r.witness = "Z_C misses [" + rat_str(std::max(b0, c.lo)) + "," + rat_str(std::min(b1, c.hi)) + "]";
      }
    auto grid = probe_grid(c, blocked);
    auto tau = [&](const Rat& z) { return Interval{s.lex_p(z), s.lex_q(z)}; };
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const Rat &x = grid[i], &y = grid[i + 1];
      bool a = witness_between(x, y, [&](const Rat& z) { return !has_member_inside(lower, tau(z)); });
      bool b = witness_between(x, y, [&](const Rat& z) {
        auto loc = locate_ideal(lower, QSubmodule::prime(s, s.lex_p(z)));
        return !loc.in_interval && ExtPrime::of(s.lex_q(z)) < loc.gap.p;
      });
      std::string pair = "pair x=" + rat_str(x) + ", y=" + rat_str(y);
      if (!a) { r.definition = false; r.witness = pair; }
      if (!b) { r.gap = false; r.witness = pair; }
    }
  }
  return r;
}

FiltrationReport validate_filtration(const AdmissibleFiltration& f) {
  FiltrationReport r;
  const Spectrum& s = f.spectrum();
  for (int n = f.first(); n <= f.last(); ++n) {
    auto v = validate_system(f.at(n));
    for (auto& x : v.violations) {
      r.systems_ok = false;
      r.violations.push_back("X_" + std::to_string(n) + " " + x.axiom + ": " + x.witness);
    }
  }
  for (int n = f.first() - 1; n <= f.last() + 1; ++n) {
    auto lo = f.at(n), hi = f.at(n + 1);
    std::string w;
    if (!is_nested(lo, hi, &w)) {
      r.nested = false;
      r.violations.push_back("X_" + std::to_string(n) + " not nested in X_" + std::to_string(n + 1) + " at " + w);
    }
    auto nd = nondensity(lo, hi);
    if (nd.definition != nd.gap || nd.gap != nd.density)
      throw FormulationMismatch("non-density forms disagree between X_" + std::to_string(n) + " and X_" +
                                std::to_string(n + 1));
    if (!nd.density) {
      r.nondense_definition = r.nondense_gap = r.nondense_density = false;
      r.violations.push_back("degreewise non-density fails between X_" + std::to_string(n) + " and X_" +
                             std::to_string(n + 1) + " (" + nd.witness + ")");
    }
  }
  (void)s;
  r.ok = r.systems_ok && r.nested && r.nondense_density;
  return r;
}

DnconsReport dncons_check(const AdmissibleFiltration& f) {
  DnconsReport r;
  const Spectrum& s = f.spectrum();
  for (int n = f.first() - 1; n <= f.last() + 1; ++n) {
    auto x = f.at(n), y = f.at(n + 1);
    for (auto& c : dense_classes(x)) {
      auto grid = probe_grid(c, ParamSet{});
      for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
          auto mu = member_containing(y, s.lex_p(grid[i]));
          if (mu && s.lex_q(grid[j]) <= mu->q) continue;
          r.ok = false;
          r.witnesses.push_back("X_" + std::to_string(n) + ": x=" + rat_str(grid[i]) + ", y=" + rat_str(grid[j]) +
                                " not absorbed by X_" + std::to_string(n + 1));
        }
      if (r.ok) r.witnesses.push_back("X_" + std::to_string(n) + ": class over [" + rat_str(c.lo) + "," +
                                      rat_str(c.hi) + "] absorbed by X_" + std::to_string(n + 1));
    }
  }
  return r;
}

// ---- classification ----

namespace {

bool is_full(const AdmissibleSystem& x) {
  const Spectrum& s = x.spectrum();
  return x.is_finite_list() && x.atoms().size() == 1 && x.atoms()[0].iv == Interval{s.zero(), s.top()};
}

bool is_cg_shape(const AdmissibleSystem& x) {
  if (x.empty()) return true;
  return x.is_finite_list() && x.atoms().size() == 1 && x.atoms()[0].iv.p == x.spectrum().zero();
}

}  // namespace

ClassificationReport classify(const AdmissibleFiltration& f) {
  ClassificationReport r;
  int lo = f.first() - 1, hi = f.last() + 1;  // lo and hi stand for everything beyond the window
  r.nowhere_dense = true;
  r.compactly_generated = true;
  std::optional<int> first_empty, last_full;
  for (int n = lo; n <= hi; ++n) {
    auto x = f.at(n);
    if (!is_nowhere_dense(x)) r.nowhere_dense = false;
    if (!is_cg_shape(x)) r.compactly_generated = false;
    if (x.empty() && !first_empty) first_empty = n;
    if (is_full(x)) last_full = n;
  }
  r.right_nondegenerate = first_empty.has_value();
  r.bounded = first_empty && last_full && *first_empty < *last_full;
  // V inside D^{>=m}: empty below some degree; D^{>=n} inside V: full from some degree on
  bool empty_prefix = f.at(lo).empty();
  bool full_suffix = f.above() == AboveRule::ConstantLast && is_full(f.at(hi));
  r.co_intermediate = empty_prefix && full_suffix;
  if (r.nowhere_dense)
    r.epi_chain = filtration_to_chain(f);
  else
    r.notes.push_back("not nowhere dense: no chain of homological ring epimorphisms");
  r.generators = build_generators(f);
  r.notes.push_back("left non-degeneracy is not decided by this tool");
  return r;
}

// ---- enumeration ----

std::size_t enumeration_budget() {
  if (const char* e = std::getenv("VCLASS_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000000;
}

namespace {

struct NestTable {
  std::vector<AdmissibleSystem> systems;
  std::vector<std::vector<bool>> nested;
};

NestTable nest_table(const Spectrum& s) {
  NestTable t;
  t.systems = all_systems(s);
  std::size_t k = t.systems.size();
  t.nested.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t.nested[i][j] = is_nested(t.systems[i], t.systems[j]);
  return t;
}

void check_window(const Spectrum& s, int first, int last) {
  if (!s.is_finite()) throw NotDescribable("enumeration needs a finite spectrum");
  if (last < first) throw SchemaError("empty window");
  if (last - first >= 64) throw BudgetExceeded("window longer than 64 degrees");
}

}  // namespace

std::size_t count_filtrations(const Spectrum& s, int first, int last) {
  check_window(s, first, last);
  NestTable t = nest_table(s);
  std::size_t k = t.systems.size();
  std::vector<long double> ways(k, 1.0L);
  for (int n = first; n < last; ++n) {
    std::vector<long double> next(k, 0.0L);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (t.nested[i][j]) next[j] += ways[i];
    ways = std::move(next);
  }
  long double total = 0;
  for (auto w : ways) total += w;
  if (total > static_cast<long double>(enumeration_budget()))
    throw BudgetExceeded("more than " + std::to_string(enumeration_budget()) + " filtrations");
  return static_cast<std::size_t>(total);
}

std::size_t enumerate(const Spectrum& s, int first, int last,
                      const std::function<void(const AdmissibleFiltration&)>& sink) {
  std::size_t expected = count_filtrations(s, first, last);  // enforces the budget up front
  NestTable t = nest_table(s);
  std::size_t len = static_cast<std::size_t>(last - first + 1);
  std::vector<std::size_t> path;
  std::size_t count = 0;
  std::function<void()> rec = [&]() {
    if (path.size() == len) {
      std::vector<AdmissibleSystem> xs;
      for (auto i : path) xs.push_back(t.systems[i]);
      sink(AdmissibleFiltration(s, first, std::move(xs)));
      ++count;
      return;
    }
    for (std::size_t j = 0; j < t.systems.size(); ++j) {
      if (!path.empty() && !t.nested[path.back()][j]) continue;
      path.push_back(j);
      rec();
      path.pop_back();
    }
  };
  rec();
  if (count != expected) throw FormulationMismatch("enumeration and count disagree");
  return count;
}

}  // namespace vclass
