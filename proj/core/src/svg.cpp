#include "vclass/svg.hpp"

#include <cstdio>
#include <sstream>

#include <boost/rational.hpp>

namespace vclass {

namespace {

constexpr double kLeft = 90, kWidth = 640, kLane = 44, kTop = 30;

double to_double(const Rat& r) { return boost::rational_cast<double>(r); }

// horizontal position in [0,1]; sentinels sit just outside
double pos(const Spectrum& s, const Prime& p) {
  switch (s.kind()) {
    case SpectrumKind::OmegaPlusOne: {
      if (p == s.top()) return 1.0;
      double n = to_double(p.x);
      return 0.9 * n / (n + 1.0);
    }
    case SpectrumKind::LexDouble: return 0.02 + 0.94 * to_double(p.x) + (p.tag ? 0.02 : 0.0);
    default: return s.size() == 1 ? 0.5 : static_cast<double>(s.index(p)) / static_cast<double>(s.size() - 1);
  }
}

double pos(const Spectrum& s, const ExtPrime& e) {
  if (e.is_neg_inf()) return -0.06;
  if (e.is_ring()) return 1.06;
  return pos(s, e.p);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

double px(double t) { return kLeft + kWidth * t; }

void bar(std::ostringstream& o, double a, double b, double y, const char* cls) {
  double w = std::max(px(b) - px(a), 3.0);
  o << "<rect class=\"" << cls << "\" x=\"" << num(px(a) - (b == a ? 1.5 : 0)) << "\" y=\"" << num(y)
    << "\" width=\"" << num(w) << "\" height=\"14\"/>\n";
}

}  // namespace

std::string render_svg(const AdmissibleFiltration& f) {
  const Spectrum& s = f.spectrum();
  int lo = f.first() - 1, hi = f.last() + 1;
  int lanes = hi - lo + 1;
  double height = kTop + kLane * lanes + 30;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kLeft + kWidth + 60) << "\" height=\""
    << num(height) << "\" font-family=\"monospace\" font-size=\"12\">\n"
    << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
       "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#c44\" "
       "stroke-width=\"1.5\"/></pattern></defs>\n"
    << "<style>.member{fill:#2a5db0}.gap{fill:url(#hatch);opacity:0.6}.dense{fill:#9bc;opacity:0.5}</style>\n";
  for (int n = lo; n <= hi; ++n) {
    double y = kTop + kLane * (n - lo);
    auto x = f.at(n);
    o << "<text x=\"8\" y=\"" << num(y + 11) << "\">X_" << n << "</text>\n";
    o << "<line x1=\"" << num(px(-0.06)) << "\" y1=\"" << num(y + 7) << "\" x2=\"" << num(px(1.06)) << "\" y2=\""
      << num(y + 7) << "\" stroke=\"#bbb\"/>\n";
    auto gs = gaps(x);
    for (auto& g : gs.finite) bar(o, pos(s, g.q), pos(s, g.p), y, "gap");
    for (auto& c : dense_classes(x)) bar(o, pos(s, s.lex_p(c.lo)), pos(s, s.lex_q(c.hi)), y, "dense");
    for (auto& a : x.atoms()) {
      if (a.kind == Atom::Kind::Explicit) {
        bar(o, pos(s, a.iv.p), pos(s, a.iv.q), y, "member");
        continue;
      }
      if (a.is_range()) continue;  // drawn as a dense class
      const Geometric& g = a.set.seqs.front();
      for (unsigned k = 0; k < 24; ++k) {
        Rat t = g.term(k);
        bar(o, pos(s, s.lex_p(t)), pos(s, s.lex_p(t)), y, "member");
        bar(o, pos(s, s.lex_q(t)), pos(s, s.lex_q(t)), y, "member");
      }
      bar(o, pos(s, s.lex_p(g.limit)), pos(s, s.lex_p(g.limit)), y, "member");
    }
  }
  double ya = kTop + kLane * lanes + 4;
  auto label = [&](double t, const std::string& text) {
    o << "<text x=\"" << num(px(t)) << "\" y=\"" << num(ya + 12) << "\" text-anchor=\"middle\">" << text
      << "</text>\n";
  };
  label(-0.06, "-inf");
  label(1.06, "R");
  if (s.is_finite())
    for (auto& p : s.primes()) label(pos(s, p), s.name(p));
  else {
    label(pos(s, s.zero()), "0");
    label(pos(s, s.top()), "m");
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace vclass
