#include "vclass/systems.hpp"

#include <algorithm>
#include <functional>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

Prime lexp(const Prime& like, const Rat& x, int tag) { return Prime{0, x, tag, like.sid}; }

Atom explicit_atom(const Interval& iv) {
  Atom a;
  a.kind = Atom::Kind::Explicit;
  a.iv = iv;
  a.lower = iv.p;
  a.upper = iv.q;
  return a;
}

void set_hull(Atom& a, const Prime& like) {
  a.lower = lexp(like, a.set.min(), 0);
  a.upper = lexp(like, a.set.max(), 1);
}

Atom family_atom(FamilyKind k, ParamSet set, const Prime& like) {
  Atom a;
  a.kind = Atom::Kind::Family;
  a.fam = k;
  a.set = std::move(set);
  set_hull(a, like);
  return a;
}

bool hulls_meet(const Atom& a, const Atom& b) { return a.lower <= b.upper && b.lower <= a.upper; }

void expand_point(std::vector<Atom>& out, FamilyKind k, const Rat& x, const Prime& like) {
  if (k == FamilyKind::Full) {
    out.push_back(explicit_atom({lexp(like, x, 0), lexp(like, x, 1)}));
  } else {
    out.push_back(explicit_atom({lexp(like, x, 0), lexp(like, x, 0)}));
    out.push_back(explicit_atom({lexp(like, x, 1), lexp(like, x, 1)}));
  }
}

}  // namespace

Interval Atom::first() const {
  if (kind == Kind::Explicit) return iv;
  Rat x = set.min();
  if (fam == FamilyKind::Full) return {lexp(lower, x, 0), lexp(lower, x, 1)};
  return {lexp(lower, x, 0), lexp(lower, x, 0)};
}

Interval Atom::last() const {
  if (kind == Kind::Explicit) return iv;
  Rat x = set.max();
  if (fam == FamilyKind::Full) return {lexp(lower, x, 0), lexp(lower, x, 1)};
  return {lexp(lower, x, 1), lexp(lower, x, 1)};
}

bool operator==(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Atom::Kind::Explicit) return a.iv == b.iv;
  return a.fam == b.fam && a.set == b.set;
}

AdmissibleSystem::AdmissibleSystem(Spectrum s, std::vector<Interval> ivs, std::vector<Family> fams)
    : s_(std::move(s)), raw_ivs_(std::move(ivs)), raw_fams_(std::move(fams)) {
  normalise();
}

void AdmissibleSystem::normalise() {
  std::vector<Atom> atoms;
  for (auto& iv : raw_ivs_) {
    if (!s_.owns(iv.p) || !s_.owns(iv.q)) throw MixedSpectrum("interval from another spectrum");
    if (iv.q < iv.p) {
      issues_.push_back({"interval", "[" + s_.name(iv.p) + "," + s_.name(iv.q) + "] has p above q"});
      continue;
    }
    atoms.push_back(explicit_atom(iv));
  }
  const Prime like = s_.zero();
  for (auto& f : raw_fams_) {
    if (s_.kind() != SpectrumKind::LexDouble)
      throw NotDescribable("parametric families only exist on lex_double");
    auto in01 = [](const Rat& x) { return x >= 0 && x <= 1; };
    for (auto& [a, b] : f.params.ranges) {
      if (!in01(a) || !in01(b) || !(a < b)) throw NotDescribable("parameter range outside [0,1]");
      ParamSet one;
      one.ranges.emplace_back(a, b);
      atoms.push_back(family_atom(f.kind, one, like));
    }
    for (auto& x : f.params.points) {
      if (!in01(x)) throw NotDescribable("parameter outside [0,1]");
      expand_point(atoms, f.kind, x, like);
    }
    for (auto& g : f.params.seqs) {
      if (!in01(g.start) || !in01(g.limit) || g.start == g.limit || g.ratio <= 0 || g.ratio >= 1)
        throw NotDescribable("geometric sequence needs 0 < ratio < 1 and start != limit inside [0,1]");
      ParamSet one;
      one.seqs.push_back(g);
      atoms.push_back(family_atom(f.kind, one, like));
    }
  }

  // Peel leading terms off sequences until their hulls clear every other atom.
  for (unsigned guard = 0;; ++guard) {
    if (guard > 20000) throw NotDescribable("sequences interleave too deeply");
    bool changed = false;
    for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
      if (!atoms[i].is_seq()) continue;
      for (std::size_t j = 0; j < atoms.size() && !changed; ++j) {
        if (i == j || !hulls_meet(atoms[i], atoms[j])) continue;
        Geometric& g = atoms[i].set.seqs[0];
        Atom lim = explicit_atom({lexp(like, g.limit, 0), lexp(like, g.limit, 1)});
        if (hulls_meet(lim, atoms[j])) {
          if (atoms[j].is_seq() && atoms[j].set.seqs[0].limit == g.limit)
            throw NotDescribable("two sequences share the limit " + rat_str(g.limit));
          continue;  // a genuine overlap at the limit, or j peels instead
        }
        Rat t = g.start;
        FamilyKind k = atoms[i].fam;
        g.start = g.limit + (g.start - g.limit) * g.ratio;
        if (g.start.denominator() > (1LL << 50)) throw NotDescribable("sequence terms too fine");
        set_hull(atoms[i], like);
        expand_point(atoms, k, t, like);
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.lower != b.lower) return a.lower < b.lower;
    return a.upper < b.upper;
  });
  for (std::size_t k = 0; k + 1 < atoms.size(); ++k) {
    if (atoms[k].upper < atoms[k + 1].lower) continue;
    Interval a = atoms[k].last(), b = atoms[k + 1].first();
    issues_.push_back({"disjointness", interval_str(s_, a) + " meets " + interval_str(s_, b)});
  }
  atoms_ = std::move(atoms);
}

bool AdmissibleSystem::is_finite_list() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.kind == Atom::Kind::Explicit; });
}

std::vector<Interval> AdmissibleSystem::intervals() const {
  std::vector<Interval> out;
  for (auto& a : atoms_) {
    if (a.kind != Atom::Kind::Explicit) throw NotDescribable("system has parametric families");
    out.push_back(a.iv);
  }
  return out;
}

bool operator==(const AdmissibleSystem& a, const AdmissibleSystem& b) {
  return a.spectrum() == b.spectrum() && a.atoms() == b.atoms();
}

std::string interval_str(const Spectrum& s, const Interval& iv) {
  return "[" + s.name(iv.p) + "," + s.name(iv.q) + "]";
}

std::string system_str(const AdmissibleSystem& x) {
  std::string out = "{";
  bool first = true;
  for (auto& a : x.atoms()) {
    if (!first) out += ",";
    first = false;
    if (a.kind == Atom::Kind::Explicit)
      out += interval_str(x.spectrum(), a.iv);
    else
      out += std::string(a.fam == FamilyKind::Full ? "[p_x,q_x]" : "[p_x,p_x],[q_x,q_x]") +
             " for x in " + param_str(a.set);
  }
  return out + "}";
}

// ---- order queries ----

std::optional<Interval> member_containing(const AdmissibleSystem& x, const Prime& p) {
  for (auto& a : x.atoms()) {
    if (!(a.lower <= p && p <= a.upper)) continue;
    if (a.kind == Atom::Kind::Explicit) return a.iv;
    if (!a.set.contains(p.x)) return std::nullopt;
    if (a.fam == FamilyKind::Full) return Interval{lexp(p, p.x, 0), lexp(p, p.x, 1)};
    return Interval{p, p};
  }
  return std::nullopt;
}

Probe last_below(const AdmissibleSystem& x, const Prime& p) {
  Probe best;
  for (auto& a : x.atoms()) {
    if (a.upper < p) {
      best = {Probe::Kind::Found, a.last()};
      continue;
    }
    if (!(a.lower < p) || a.kind == Atom::Kind::Explicit) break;
    const Rat& y = p.x;
    if (a.fam == FamilyKind::Points && p.tag == 1 && a.set.contains(y))
      return {Probe::Kind::Found, {lexp(p, y, 0), lexp(p, y, 0)}};
    if (a.set.accumulates_below(y)) return {Probe::Kind::Accumulates, {}};
    if (auto w = a.set.pred(y)) {
      if (a.fam == FamilyKind::Full) return {Probe::Kind::Found, {lexp(p, *w, 0), lexp(p, *w, 1)}};
      return {Probe::Kind::Found, {lexp(p, *w, 1), lexp(p, *w, 1)}};
    }
    break;
  }
  return best;
}

Probe first_above(const AdmissibleSystem& x, const Prime& p) {
  Probe best;
  const auto& atoms = x.atoms();
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    const Atom& a = *it;
    if (p < a.lower) {
      best = {Probe::Kind::Found, a.first()};
      continue;
    }
    if (!(p < a.upper) || a.kind == Atom::Kind::Explicit) break;
    const Rat& y = p.x;
    if (a.fam == FamilyKind::Points && p.tag == 0 && a.set.contains(y))
      return {Probe::Kind::Found, {lexp(p, y, 1), lexp(p, y, 1)}};
    if (a.set.accumulates_above(y)) return {Probe::Kind::Accumulates, {}};
    if (auto w = a.set.succ(y)) {
      if (a.fam == FamilyKind::Full) return {Probe::Kind::Found, {lexp(p, *w, 0), lexp(p, *w, 1)}};
      return {Probe::Kind::Found, {lexp(p, *w, 0), lexp(p, *w, 0)}};
    }
    break;
  }
  return best;
}

std::optional<Interval> min_member(const AdmissibleSystem& x) {
  if (x.empty()) return std::nullopt;
  return x.atoms().front().first();
}

std::optional<Interval> max_member(const AdmissibleSystem& x) {
  if (x.empty()) return std::nullopt;
  return x.atoms().back().last();
}

// ---- validation ----

ValidationReport validate_system(const AdmissibleSystem& x) {
  ValidationReport r;
  const Spectrum& s = x.spectrum();
  r.violations = x.issues();
  for (auto& a : x.atoms()) {
    if (a.kind != Atom::Kind::Explicit) continue;  // lex primes are all idempotent
    if (!s.idempotent(a.iv.p))
      r.violations.push_back({"idempotency", s.name(a.iv.p) + " is not idempotent in " + interval_str(s, a.iv)});
  }
  // Describable sub-collections without an extremum accumulate at a family
  // parameter; the union/intersection must be realised there.
  for (auto& a : x.atoms()) {
    if (a.kind != Atom::Kind::Family) continue;
    std::vector<Rat> acc;
    for (auto& [lo, hi] : a.set.ranges) { acc.push_back(lo); acc.push_back(hi); }
    for (auto& g : a.set.seqs) acc.push_back(g.limit);
    for (auto& y : acc) {
      Prime py = lexp(a.lower, y, 0), qy = lexp(a.lower, y, 1);
      auto below = member_containing(x, py);
      auto above = member_containing(x, qy);
      if (a.set.accumulates_below(y) && !(below && below->p == py))
        r.violations.push_back({"completeness", "no interval with lower bound " + s.name(py)});
      if (a.set.accumulates_above(y) && !(above && above->q == qy))
        r.violations.push_back({"completeness", "no interval with upper bound " + s.name(qy)});
    }
  }
  r.ok = r.violations.empty();
  return r;
}

// ---- gaps ----

bool operator==(const Gap& a, const Gap& b) { return a.q == b.q && a.p == b.p && a.kind == b.kind; }

bool operator<(const Gap& a, const Gap& b) {
  if (!(a.q == b.q)) return a.q < b.q;
  return a.p < b.p;
}

std::string ext_str(const Spectrum& s, const ExtPrime& e) {
  if (e.is_neg_inf()) return "-inf";
  if (e.is_ring()) return "R";
  return s.name(e.p);
}

std::string gap_str(const Spectrum& s, const Gap& g) {
  return "(" + ext_str(s, g.q) + "," + ext_str(s, g.p) + ")";
}

const char* gap_case_str(GapCase c) {
  switch (c) {
    case GapCase::Cover: return "cover";
    case GapCase::BelowMin: return "below_min";
    case GapCase::AboveMax: return "above_max";
    case GapCase::EmptySystem: return "empty_system";
  }
  return "";
}

std::string gap_family_str(const Spectrum& s, const GapFamily& f) {
  (void)s;
  if (f.kind == GapFamily::Kind::PointPairs) return "(p_x,q_x) for x in " + param_str(f.params);
  ParamSet p;
  p.seqs.push_back(f.seq);
  return "steps between consecutive terms of " + param_str(p);
}

GapSet gaps(const AdmissibleSystem& x) {
  GapSet gs;
  const Spectrum& s = x.spectrum();
  if (x.empty()) {
    gs.finite.push_back({ExtPrime::neg_inf(), ExtPrime::ring(), GapCase::EmptySystem});
    return gs;
  }
  const auto& atoms = x.atoms();
  Interval lo = atoms.front().first(), hi = atoms.back().last();
  if (lo.p != s.zero()) gs.finite.push_back({ExtPrime::neg_inf(), ExtPrime::of(lo.p), GapCase::BelowMin});
  if (hi.q != s.top()) gs.finite.push_back({ExtPrime::of(hi.q), ExtPrime::ring(), GapCase::AboveMax});
  for (std::size_t k = 0; k + 1 < atoms.size(); ++k)
    gs.finite.push_back({ExtPrime::of(atoms[k].last().q), ExtPrime::of(atoms[k + 1].first().p), GapCase::Cover});
  for (auto& a : atoms) {
    if (a.kind != Atom::Kind::Family) continue;
    if (a.fam == FamilyKind::Points) gs.families.push_back({GapFamily::Kind::PointPairs, a.set, {}});
    if (a.is_seq()) gs.families.push_back({GapFamily::Kind::SeqSteps, {}, a.set.seqs[0]});
  }
  std::sort(gs.finite.begin(), gs.finite.end());
  return gs;
}

std::vector<Gap> sample_gaps(const AdmissibleSystem& x, const GapSet& gs, const std::vector<Rat>& cuts) {
  std::vector<Gap> out = gs.finite;
  const Prime like = x.spectrum().zero();
  for (auto& f : gs.families) {
    if (f.kind == GapFamily::Kind::PointPairs) {
      for (auto& y : f.params.representatives(cuts))
        out.push_back({ExtPrime::of(lexp(like, y, 0)), ExtPrime::of(lexp(like, y, 1)), GapCase::Cover});
    } else {
      for (unsigned n = 0; n + 1 < kMaxTerms; ++n) {
        Rat a = f.seq.term(n), b = f.seq.term(n + 1);
        if (b.denominator() > (1LL << 40)) break;
        Rat lo = std::min(a, b), hi = std::max(a, b);
        out.push_back({ExtPrime::of(lexp(like, lo, 1)), ExtPrime::of(lexp(like, hi, 0)), GapCase::Cover});
      }
    }
  }
  return out;
}

// ---- density ----

std::vector<DenseClass> dense_classes(const AdmissibleSystem& x) {
  std::vector<DenseClass> out;
  for (auto& a : x.atoms())
    if (a.is_range() && a.fam == FamilyKind::Full) {
      auto [lo, hi] = a.set.ranges[0];
      out.push_back({lo, hi, {a.lower, a.upper}});
    }
  return out;
}

AdmissibleSystem hull(const AdmissibleSystem& x) {
  std::vector<Interval> ivs;
  std::vector<Family> fams;
  for (auto& a : x.atoms()) {
    if (a.kind == Atom::Kind::Explicit)
      ivs.push_back(a.iv);
    else if (a.is_range() && a.fam == FamilyKind::Full)
      ivs.push_back({a.lower, a.upper});
    else
      fams.push_back({a.fam, a.set});
  }
  return AdmissibleSystem(x.spectrum(), ivs, fams);
}

bool is_nowhere_dense(const AdmissibleSystem& x) { return dense_classes(x).empty(); }

bool is_dense_everywhere(const AdmissibleSystem& x) {
  if (x.atoms().size() != 1) return false;  // two atoms always leave a cover between them
  const Atom& a = x.atoms()[0];
  bool no_cover = a.kind == Atom::Kind::Explicit || (a.is_range() && a.fam == FamilyKind::Full);
  const Spectrum& s = x.spectrum();
  return no_cover && a.first().p == s.zero() && a.last().q == s.top();
}

// ---- location ----

Location locate_ideal(const AdmissibleSystem& x, const QSubmodule& i) {
  const Spectrum& s = x.spectrum();
  if (i.is_loc()) throw SchemaError("locate_ideal needs a proper ideal");
  Prime lower = lower_prime(s, i);
  Prime upper = i.is_zero() ? s.zero() : i.ideal.hi;
  Location loc;
  auto chi = member_containing(x, lower);
  if (chi && upper <= chi->q) {
    loc.in_interval = true;
    loc.chi = *chi;
    return loc;
  }
  ExtPrime gq = ExtPrime::neg_inf();
  if (chi) {
    gq = ExtPrime::of(chi->q);
  } else {
    Probe b = last_below(x, lower);
    if (b.kind == Probe::Kind::Accumulates) throw NotDescribable("members accumulate below the ideal");
    if (b.kind == Probe::Kind::Found) gq = ExtPrime::of(b.iv.q);
  }
  ExtPrime gp = ExtPrime::ring();
  if (gq.is_neg_inf()) {
    if (auto m = min_member(x)) gp = ExtPrime::of(m->p);
  } else {
    Probe a = first_above(x, gq.p);
    if (a.kind == Probe::Kind::Accumulates) throw NotDescribable("members accumulate above the ideal");
    if (a.kind == Probe::Kind::Found) gp = ExtPrime::of(a.iv.p);
  }
  GapCase c = GapCase::Cover;
  if (gq.is_neg_inf() && gp.is_ring())
    c = GapCase::EmptySystem;
  else if (gq.is_neg_inf())
    c = GapCase::BelowMin;
  else if (gp.is_ring())
    c = GapCase::AboveMax;
  loc.gap = {gq, gp, c};
  return loc;
}

// ---- comparison ----

namespace {

enum class MemberShape { Full, PointP, PointQ };

// Parameters x whose member of the given shape sits inside some member of b.
std::vector<RatInterval> coverage(const AdmissibleSystem& b, MemberShape shape, ParamSet& extra) {
  std::vector<RatInterval> ivs;
  for (auto& a : b.atoms()) {
    if (a.kind == Atom::Kind::Family) {
      if (shape != MemberShape::Full || a.fam == FamilyKind::Full) extra.merge(a.set);
      continue;
    }
    const Prime& lo = a.iv.p;
    const Prime& hi = a.iv.q;
    RatInterval r;
    r.lo = lo.x;
    r.hi = hi.x;
    switch (shape) {
      case MemberShape::Full:
        r.lo_closed = lo.tag == 0;
        r.hi_closed = hi.tag == 1;
        break;
      case MemberShape::PointP:
        r.lo_closed = lo.tag == 0;
        r.hi_closed = true;
        break;
      case MemberShape::PointQ:
        r.lo_closed = true;
        r.hi_closed = hi.tag == 1;
        break;
    }
    if (!r.empty()) ivs.push_back(r);
  }
  return ivs;
}

}  // namespace

bool is_nested(const AdmissibleSystem& a, const AdmissibleSystem& b, std::string* witness) {
  const Spectrum& s = a.spectrum();
  if (!(s == b.spectrum())) throw MixedSpectrum("systems over different spectra");
  for (auto& at : a.atoms()) {
    if (at.kind == Atom::Kind::Explicit) {
      auto m = member_containing(b, at.iv.p);
      if (m && at.iv.q <= m->q) continue;
      if (witness) *witness = interval_str(s, at.iv);
      return false;
    }
    std::vector<MemberShape> shapes;
    if (at.fam == FamilyKind::Full)
      shapes = {MemberShape::Full};
    else
      shapes = {MemberShape::PointP, MemberShape::PointQ};
    for (auto sh : shapes) {
      ParamSet extra;
      auto ivs = coverage(b, sh, extra);
      if (at.set.covered_by(ivs, &extra)) continue;
      if (witness) *witness = system_str(AdmissibleSystem(s, {}, {{at.fam, at.set}}));
      return false;
    }
  }
  return true;
}

ParamSet blocking_params(const AdmissibleSystem& x) {
  ParamSet out;
  for (auto& a : x.atoms()) {
    if (a.kind == Atom::Kind::Family)
      out.merge(a.set);
    else if (a.iv.p.x == a.iv.q.x)
      out.points.push_back(a.iv.p.x);
  }
  return out;
}

bool has_member_inside(const AdmissibleSystem& x, const Interval& iv) {
  auto inside = [&](const Interval& m) { return iv.p <= m.p && m.q <= iv.q; };
  if (auto m = member_containing(x, iv.p); m && inside(*m)) return true;
  if (auto m = member_containing(x, iv.q); m && inside(*m)) return true;
  Probe f = first_above(x, iv.p);
  if (f.kind == Probe::Kind::Found) return inside(f.iv);
  if (f.kind == Probe::Kind::Accumulates) return iv.p.x < iv.q.x;
  return false;
}

std::vector<AdmissibleSystem> all_systems(const Spectrum& s) {
  auto ps = s.primes();
  std::vector<AdmissibleSystem> out;
  std::vector<Interval> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.emplace_back(s, cur);
    for (std::size_t i = from; i < ps.size(); ++i) {
      if (!s.idempotent(ps[i])) continue;
      for (std::size_t j = i; j < ps.size(); ++j) {
        cur.push_back({ps[i], ps[j]});
        rec(j + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace vclass
