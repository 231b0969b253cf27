#include "vclass/paramset.hpp"

#include <algorithm>
#include <cstdlib>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

Rat abs_rat(const Rat& r) { return r < 0 ? -r : r; }

// Denominators beyond this are not materialised (overflow guard).
constexpr long long kDenomCap = 1LL << 50;

bool term_ok(const Rat& r) { return r.denominator() < kDenomCap && std::llabs(r.numerator()) < kDenomCap; }

}  // namespace

Rat Geometric::term(unsigned n) const {
  Rat f(1);
  for (unsigned i = 0; i < n; ++i) f *= ratio;
  return limit + (start - limit) * f;
}

std::optional<unsigned> Geometric::term_index(const Rat& x) const {
  if (x == limit) return std::nullopt;
  Rat d = abs_rat(x - limit);
  Rat t = start;
  for (unsigned n = 0; n < kMaxTerms; ++n) {
    if (t == x) return n;
    if (abs_rat(t - limit) < d) return std::nullopt;
    Rat next = limit + (t - limit) * ratio;
    if (!term_ok(next)) return std::nullopt;
    t = next;
  }
  return std::nullopt;
}

bool Geometric::contains(const Rat& x) const { return x == limit || term_index(x).has_value(); }

bool RatInterval::contains(const Rat& x) const {
  if (lo && (x < *lo || (x == *lo && !lo_closed))) return false;
  if (hi && (x > *hi || (x == *hi && !hi_closed))) return false;
  return true;
}

bool RatInterval::empty() const {
  if (!lo || !hi) return false;
  if (*lo < *hi) return false;
  if (*lo > *hi) return true;
  return !(lo_closed && hi_closed);
}

bool RatInterval::has_interior() const { return !lo || !hi || *lo < *hi; }

ParamSet ParamSet::range(Rat a, Rat b) {
  ParamSet s;
  if (a < b)
    s.ranges.emplace_back(a, b);
  else if (a == b)
    s.points.push_back(a);
  return s;
}

ParamSet ParamSet::point(Rat a) {
  ParamSet s;
  s.points.push_back(a);
  return s;
}

bool ParamSet::contains(const Rat& x) const {
  for (auto& [a, b] : ranges)
    if (a <= x && x <= b) return true;
  for (auto& p : points)
    if (p == x) return true;
  for (auto& g : seqs)
    if (g.contains(x)) return true;
  return false;
}

Rat ParamSet::min() const {
  if (empty()) throw EmptySubset("empty parameter set");
  std::optional<Rat> m;
  auto take = [&](const Rat& v) { if (!m || v < *m) m = v; };
  for (auto& r : ranges) take(r.first);
  for (auto& p : points) take(p);
  for (auto& g : seqs) take(std::min(g.start, g.limit));
  return *m;
}

Rat ParamSet::max() const {
  if (empty()) throw EmptySubset("empty parameter set");
  std::optional<Rat> m;
  auto take = [&](const Rat& v) { if (!m || v > *m) m = v; };
  for (auto& r : ranges) take(r.second);
  for (auto& p : points) take(p);
  for (auto& g : seqs) take(std::max(g.start, g.limit));
  return *m;
}

void ParamSet::merge(const ParamSet& o) {
  ranges.insert(ranges.end(), o.ranges.begin(), o.ranges.end());
  points.insert(points.end(), o.points.begin(), o.points.end());
  seqs.insert(seqs.end(), o.seqs.begin(), o.seqs.end());
}

std::vector<Rat> ParamSet::breakpoints() const {
  std::vector<Rat> out;
  for (auto& r : ranges) { out.push_back(r.first); out.push_back(r.second); }
  out.insert(out.end(), points.begin(), points.end());
  for (auto& g : seqs) { out.push_back(g.start); out.push_back(g.limit); }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rat> ParamSet::element_between(const Rat& a, const Rat& b) const {
  if (!(a < b)) return std::nullopt;
  for (auto& [r0, r1] : ranges) {
    Rat lo = std::max(a, r0), hi = std::min(b, r1);
    if (lo < hi) return (lo + hi) / 2;
  }
  for (auto& p : points)
    if (a < p && p < b) return p;
  for (auto& g : seqs) {
    if (a < g.limit && g.limit < b) return g.limit;
    Rat t = g.start;
    for (unsigned n = 0; n < kMaxTerms && term_ok(t); ++n) {
      if (a < t && t < b) return t;
      t = g.limit + (t - g.limit) * g.ratio;
    }
  }
  return std::nullopt;
}

std::vector<Rat> ParamSet::representatives(const std::vector<Rat>& cuts) const {
  std::vector<Rat> out;
  if (empty()) return out;
  Rat lo = min(), hi = max();
  // open cells are bounded by the set's own extent
  std::vector<Rat> c;
  c.push_back(lo - 1);
  for (auto& x : cuts) c.push_back(x);
  c.push_back(hi + 1);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (contains(c[i])) out.push_back(c[i]);
    if (i + 1 < c.size())
      if (auto e = element_between(c[i], c[i + 1])) out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ParamSet::accumulates_below(const Rat& x) const {
  for (auto& [r0, r1] : ranges)
    if (r0 < x && x <= r1) return true;
  for (auto& g : seqs)
    if (g.increasing() && g.limit == x) return true;
  return false;
}

bool ParamSet::accumulates_above(const Rat& x) const {
  for (auto& [r0, r1] : ranges)
    if (r0 <= x && x < r1) return true;
  for (auto& g : seqs)
    if (!g.increasing() && g.limit == x) return true;
  return false;
}

std::optional<Rat> ParamSet::pred(const Rat& x) const {
  if (accumulates_below(x)) return std::nullopt;
  std::optional<Rat> best;
  auto take = [&](const Rat& v) { if (v < x && (!best || v > *best)) best = v; };
  for (auto& r : ranges) take(r.second);
  for (auto& p : points) take(p);
  for (auto& g : seqs) {
    take(g.limit);
    Rat t = g.start;
    for (unsigned n = 0; n < kMaxTerms && term_ok(t); ++n) {
      take(t);
      t = g.limit + (t - g.limit) * g.ratio;
    }
  }
  return best;
}

std::optional<Rat> ParamSet::succ(const Rat& x) const {
  if (accumulates_above(x)) return std::nullopt;
  std::optional<Rat> best;
  auto take = [&](const Rat& v) { if (v > x && (!best || v < *best)) best = v; };
  for (auto& r : ranges) take(r.first);
  for (auto& p : points) take(p);
  for (auto& g : seqs) {
    take(g.limit);
    Rat t = g.start;
    for (unsigned n = 0; n < kMaxTerms && term_ok(t); ++n) {
      take(t);
      t = g.limit + (t - g.limit) * g.ratio;
    }
  }
  return best;
}

namespace {

// [a,b] inside the union of ivs?
bool range_covered(const Rat& a, const Rat& b, const std::vector<RatInterval>& ivs) {
  Rat cur = a;
  bool need_point = true;  // else only a right neighbourhood of cur is missing
  for (std::size_t guard = 0; guard <= 2 * ivs.size() + 2; ++guard) {
    if (!need_point && cur == b) return true;
    const RatInterval* best = nullptr;
    for (auto& iv : ivs) {
      bool ok = need_point ? iv.contains(cur)
                           : (!iv.lo || *iv.lo <= cur) && (!iv.hi || *iv.hi > cur);
      if (!ok) continue;
      if (!best || !iv.hi ||
          (best->hi && (*iv.hi > *best->hi || (*iv.hi == *best->hi && iv.hi_closed))))
        best = &iv;
    }
    if (!best) return false;
    if (!best->hi) return true;
    const Rat& h = *best->hi;
    if (h > b || (h == b && best->hi_closed)) return true;
    if (h == cur) {
      need_point = false;
      continue;
    }
    cur = h;
    need_point = !best->hi_closed;
  }
  return false;
}

}  // namespace

bool ParamSet::covered_by(const std::vector<RatInterval>& ivs_in, const ParamSet* extra) const {
  std::vector<RatInterval> ivs = ivs_in;
  if (extra)
    for (auto& [a, b] : extra->ranges) ivs.push_back({a, b, true, true});
  auto covered = [&](const Rat& x) {
    for (auto& iv : ivs)
      if (iv.contains(x)) return true;
    return extra && extra->contains(x);
  };
  for (auto& [a, b] : ranges)
    if (!range_covered(a, b, ivs)) return false;
  for (auto& p : points)
    if (!covered(p)) return false;
  for (auto& g : seqs) {
    if (extra && std::find(extra->seqs.begin(), extra->seqs.end(), g) != extra->seqs.end()) continue;
    if (!covered(g.limit)) return false;
    Rat t = g.start;
    bool done = false;
    for (unsigned n = 0; n < kMaxTerms && term_ok(t); ++n) {
      if (!covered(t)) return false;
      // the remaining tail lies between t and the limit
      Rat lo = std::min(t, g.limit), hi = std::max(t, g.limit);
      for (auto& iv : ivs)
        if (iv.contains(lo) && iv.contains(hi)) done = true;
      if (done) break;
      t = g.limit + (t - g.limit) * g.ratio;
    }
    if (!done) return false;
  }
  return true;
}

}  // namespace vclass

namespace vclass {

std::string param_str(const ParamSet& p) {
  std::string out;
  auto add = [&](const std::string& t) { out += (out.empty() ? "" : " u ") + t; };
  for (auto& [a, b] : p.ranges) add("[" + rat_str(a) + "," + rat_str(b) + "]");
  if (!p.points.empty()) {
    std::string t = "{";
    for (std::size_t i = 0; i < p.points.size(); ++i) t += (i ? "," : "") + rat_str(p.points[i]);
    add(t + "}");
  }
  for (auto& g : p.seqs)
    add("geo(start=" + rat_str(g.start) + ",ratio=" + rat_str(g.ratio) + ",limit=" + rat_str(g.limit) + ")");
  return out.empty() ? "{}" : out;
}

}  // namespace vclass
