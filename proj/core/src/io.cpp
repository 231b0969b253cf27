#include "vclass/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "vclass/errors.hpp"

namespace vclass {

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) { throw SchemaError(ptr + ": " + msg); }

const json& field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing");
  return *it;
}

std::string str_at(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

Rat rat_at(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) fail(ptr, "expected a rational such as \"1/2\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
}

Prime prime_at(const Spectrum& s, const json& j, const std::string& ptr) {
  try {
    return s.parse(str_at(j, ptr));
  } catch (const SchemaError& e) {
    fail(ptr, e.what());
  }
}

std::string ext_json(const Spectrum& s, const ExtPrime& e) { return ext_str(s, e); }

}  // namespace

Spectrum spectrum_from_json(const json& j, const std::string& ptr) {
  std::string kind = str_at(field(j, "kind", ptr), ptr + "/kind");
  if (kind == "omega_plus_one") return Spectrum::omega_plus_one();
  if (kind == "lex_double") return Spectrum::lex_double();
  if (kind == "two_point") {
    bool idem = true;
    if (j.contains("m_idempotent")) {
      if (!j["m_idempotent"].is_boolean()) fail(ptr + "/m_idempotent", "expected a boolean");
      idem = j["m_idempotent"].get<bool>();
    }
    return Spectrum::two_point(idem);
  }
  if (kind != "finite_chain") fail(ptr + "/kind", "unknown spectrum kind '" + kind + "'");
  const json& ps = field(j, "primes", ptr);
  if (!ps.is_array() || ps.empty()) fail(ptr + "/primes", "expected a non-empty array");
  std::vector<std::string> names;
  std::vector<bool> idem;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string pp = ptr + "/primes/" + std::to_string(i);
    std::string name = str_at(field(ps[i], "name", pp), pp + "/name");
    if (!seen.insert(name).second) fail(pp + "/name", "duplicate prime name '" + name + "'");
    bool f = true;
    if (ps[i].contains("idempotent")) {
      if (!ps[i]["idempotent"].is_boolean()) fail(pp + "/idempotent", "expected a boolean");
      f = ps[i]["idempotent"].get<bool>();
    }
    if (i == 0 && !f) fail(pp + "/idempotent", "the zero prime is always idempotent");
    names.push_back(name);
    idem.push_back(f);
  }
  return Spectrum::finite_chain(names, idem);
}

json spectrum_to_json(const Spectrum& s) {
  switch (s.kind()) {
    case SpectrumKind::OmegaPlusOne: return {{"kind", "omega_plus_one"}};
    case SpectrumKind::LexDouble: return {{"kind", "lex_double"}};
    case SpectrumKind::TwoPoint: return {{"kind", "two_point"}, {"m_idempotent", s.idempotent(s.top())}};
    case SpectrumKind::FiniteChain: break;
  }
  json ps = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    ps.push_back({{"name", s.names()[i]}, {"idempotent", static_cast<bool>(s.flags()[i])}});
  return {{"kind", "finite_chain"}, {"primes", ps}};
}

namespace {

std::pair<Rat, Rat> range_at(const json& j, const std::string& ptr) {
  Rat a, b;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto comma = s.find(',');
    if (s.size() < 5 || s.front() != '[' || s.back() != ']' || comma == std::string::npos)
      fail(ptr, "expected a range such as \"[0,1/2]\"");
    try {
      a = parse_rat(s.substr(1, comma - 1));
      b = parse_rat(s.substr(comma + 1, s.size() - comma - 2));
    } catch (const Error& e) {
      fail(ptr, e.what());
    }
  } else if (j.is_array() && j.size() == 2) {
    a = rat_at(j[0], ptr + "/0");
    b = rat_at(j[1], ptr + "/1");
  } else {
    fail(ptr, "expected a range such as \"[0,1/2]\"");
  }
  if (!(a < b)) fail(ptr, "range needs lo < hi");
  if (a < 0 || b > 1) fail(ptr, "parameters live in [0,1]");
  return {a, b};
}

Geometric geometric_at(const json& j, const std::string& ptr) {
  Geometric g;
  g.start = j.contains("start") ? rat_at(j["start"], ptr + "/start") : Rat(1);
  g.ratio = rat_at(field(j, "ratio", ptr), ptr + "/ratio");
  g.limit = rat_at(field(j, "limit", ptr), ptr + "/limit");
  if (!(Rat(0) < g.ratio && g.ratio < Rat(1))) fail(ptr + "/ratio", "ratio must lie strictly between 0 and 1");
  if (g.start == g.limit) fail(ptr, "start equals limit");
  if (g.start < 0 || g.start > 1 || g.limit < 0 || g.limit > 1) fail(ptr, "parameters live in [0,1]");
  return g;
}

}  // namespace

ParamSet params_from_json(const json& j, const std::string& ptr) {
  ParamSet p;
  if (j.is_string()) {
    auto [a, b] = range_at(j, ptr);
    return ParamSet::range(a, b);
  }
  if (!j.is_object()) fail(ptr, "expected a range string or an object");
  for (auto& [k, v] : j.items())
    if (k != "ranges" && k != "finite" && k != "geometric") fail(ptr + "/" + k, "unknown key");
  if (j.contains("ranges")) {
    const json& rs = j["ranges"];
    if (!rs.is_array()) fail(ptr + "/ranges", "expected an array");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      auto [a, b] = range_at(rs[i], ptr + "/ranges/" + std::to_string(i));
      p.merge(ParamSet::range(a, b));
    }
  }
  if (j.contains("finite")) {
    const json& ps = j["finite"];
    if (!ps.is_array()) fail(ptr + "/finite", "expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Rat x = rat_at(ps[i], ptr + "/finite/" + std::to_string(i));
      if (x < 0 || x > 1) fail(ptr + "/finite/" + std::to_string(i), "parameters live in [0,1]");
      p.merge(ParamSet::point(x));
    }
  }
  if (j.contains("geometric")) {
    const json& gs = j["geometric"];
    std::vector<std::pair<json, std::string>> items;
    if (gs.is_object())
      items.push_back({gs, ptr + "/geometric"});
    else if (gs.is_array())
      for (std::size_t i = 0; i < gs.size(); ++i) items.push_back({gs[i], ptr + "/geometric/" + std::to_string(i)});
    else
      fail(ptr + "/geometric", "expected an object or an array");
    for (auto& [g, gp] : items) {
      ParamSet one;
      one.seqs.push_back(geometric_at(g, gp));
      p.merge(one);
    }
  }
  if (p.empty()) fail(ptr, "empty parameter set");
  return p;
}

json params_to_json(const ParamSet& p) {
  auto range = [](const Rat& a, const Rat& b) { return "[" + rat_str(a) + "," + rat_str(b) + "]"; };
  if (p.ranges.size() == 1 && p.points.empty() && p.seqs.empty()) return range(p.ranges[0].first, p.ranges[0].second);
  json out = json::object();
  if (!p.ranges.empty()) {
    json rs = json::array();
    for (auto& [a, b] : p.ranges) rs.push_back(range(a, b));
    out["ranges"] = rs;
  }
  if (!p.points.empty()) {
    json ps = json::array();
    for (auto& x : p.points) ps.push_back(rat_str(x));
    out["finite"] = ps;
  }
  if (!p.seqs.empty()) {
    json ss = json::array();
    for (auto& g : p.seqs)
      ss.push_back({{"start", rat_str(g.start)}, {"ratio", rat_str(g.ratio)}, {"limit", rat_str(g.limit)}});
    out["geometric"] = ss.size() == 1 ? ss[0] : ss;
  }
  return out;
}

AdmissibleSystem system_from_json(const Spectrum& s, const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of intervals");
  std::vector<Interval> ivs;
  std::vector<Family> fams;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string ip = ptr + "/" + std::to_string(i);
    const json& e = j[i];
    if (e.is_array()) {
      if (e.size() != 2) fail(ip, "expected [p, q]");
      Prime p = prime_at(s, e[0], ip + "/0"), q = prime_at(s, e[1], ip + "/1");
      if (q < p) fail(ip, "interval needs p inside q");
      ivs.push_back({p, q});
    } else if (e.is_object()) {
      if (s.kind() != SpectrumKind::LexDouble) fail(ip, "families need the lex_double spectrum");
      std::string k = str_at(field(e, "family", ip), ip + "/family");
      Family f;
      if (k == "full_lex" || k == "full")
        f.kind = FamilyKind::Full;
      else if (k == "points")
        f.kind = FamilyKind::Points;
      else
        fail(ip + "/family", "unknown family '" + k + "'");
      f.params = params_from_json(field(e, "param", ip), ip + "/param");
      fams.push_back(f);
    } else {
      fail(ip, "expected [p, q] or a family object");
    }
  }
  try {
    return AdmissibleSystem(s, ivs, fams);
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
}

json system_to_json(const AdmissibleSystem& x) {
  const Spectrum& s = x.spectrum();
  json out = json::array();
  for (auto& iv : x.raw_intervals()) out.push_back({s.name(iv.p), s.name(iv.q)});
  for (auto& f : x.raw_families()) {
    out.push_back({{"family", f.kind == FamilyKind::Full ? "full_lex" : "points"}, {"param", params_to_json(f.params)}});
  }
  return out;
}

AdmissibleFiltration filtration_from_json(const Spectrum& s, const json& j, const std::string& ptr) {
  const json& w = field(j, "window", ptr);
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
    fail(ptr + "/window", "expected [first, last] integers");
  int a = w[0].get<int>(), b = w[1].get<int>();
  if (b < a) fail(ptr + "/window", "last < first");
  const json& sys = field(j, "systems", ptr);
  if (!sys.is_object()) fail(ptr + "/systems", "expected an object keyed by degree");
  std::vector<AdmissibleSystem> xs;
  for (int n = a; n <= b; ++n) {
    std::string key = std::to_string(n);
    if (!sys.contains(key)) fail(ptr + "/systems/" + key, "missing degree");
    xs.push_back(system_from_json(s, sys[key], ptr + "/systems/" + key));
  }
  for (auto& [k, v] : sys.items()) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      fail(ptr + "/systems/" + k, "degree keys are integers");
    }
    if (n < a || n > b) fail(ptr + "/systems/" + k, "degree outside the window");
    (void)v;
  }
  BelowRule below = BelowRule::Empty;
  if (j.contains("below")) {
    std::string r = str_at(j["below"], ptr + "/below");
    if (r == "empty")
      below = BelowRule::Empty;
    else if (r == "constant_first")
      below = BelowRule::ConstantFirst;
    else
      fail(ptr + "/below", "unknown rule '" + r + "'");
  }
  AboveRule above = AboveRule::ConstantLast;
  if (j.contains("above")) {
    std::string r = str_at(j["above"], ptr + "/above");
    if (r == "constant_last")
      above = AboveRule::ConstantLast;
    else if (r == "ex1_tail")
      above = AboveRule::Ex1Tail;
    else if (r == "ex2_tail")
      above = AboveRule::Ex2Tail;
    else
      fail(ptr + "/above", "unknown rule '" + r + "'");
  }
  try {
    return AdmissibleFiltration(s, a, std::move(xs), below, above);
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
}

json filtration_to_json(const AdmissibleFiltration& f) {
  json sys = json::object();
  for (int n = f.first(); n <= f.last(); ++n) sys[std::to_string(n)] = system_to_json(f.at(n));
  return {{"window", {f.first(), f.last()}},
          {"systems", sys},
          {"below", below_str(f.below())},
          {"above", above_str(f.above())}};
}

Document document_from_json(const json& j) {
  if (!j.is_object()) fail("", "expected an object");
  Document d{spectrum_from_json(field(j, "spectrum", ""), "/spectrum"), std::nullopt, std::nullopt, nullptr};
  if (j.contains("filtration")) d.filtration = filtration_from_json(d.spectrum, j["filtration"], "/filtration");
  if (j.contains("system")) d.system = system_from_json(d.spectrum, j["system"], "/system");
  if (!d.filtration && !d.system) fail("", "expected a filtration or a system");
  if (j.contains("paper_verdicts")) d.paper_verdicts = j["paper_verdicts"];
  return d;
}

json document_to_json(const Document& d) {
  json out = {{"spectrum", spectrum_to_json(d.spectrum)}};
  if (d.filtration) out["filtration"] = filtration_to_json(*d.filtration);
  if (d.system) out["system"] = system_to_json(*d.system);
  if (!d.paper_verdicts.is_null()) out["paper_verdicts"] = d.paper_verdicts;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(": not valid JSON (") + e.what() + ")");
  }
}

Document read_document(const std::string& path) { return document_from_json(read_json_file(path)); }

json validation_to_json(const ValidationReport& r) {
  json v = json::array();
  for (auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"schema_version", kSchemaVersion}, {"ok", r.ok}, {"violations", v}};
}

json filtration_report_to_json(const FiltrationReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"ok", r.ok},
          {"systems_ok", r.systems_ok},
          {"nested", r.nested},
          {"nondensity",
           {{"definition", r.nondense_definition}, {"gap", r.nondense_gap}, {"density", r.nondense_density}}},
          {"violations", r.violations}};
}

json chain_to_json(const EpiChain& ch) {
  json ds = json::object();
  for (std::size_t i = 0; i < ch.ring_descriptors.size(); ++i)
    ds[std::to_string(ch.first + static_cast<int>(i))] = ch.ring_descriptors[i];
  return {{"render", ch.render()}, {"descriptors", ds}, {"flat", ch.flat}};
}

json generators_to_json(const std::vector<GeneratorDescriptor>& gs) {
  json out = json::array();
  for (auto& g : gs) {
    json e = {{"kind", g.kind == GeneratorDescriptor::Kind::KComplex ? "k_complex" : "uniserial_stalk"},
              {"object", g.object},
              {"shift", g.shift},
              {"from", g.from ? json(*g.from) : json(nullptr)},
              {"to", g.to ? json(*g.to) : json(nullptr)},
              {"text", g.text()}};
    out.push_back(e);
  }
  return out;
}

json classification_to_json(const ClassificationReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"nowhere_dense", r.nowhere_dense},
          {"compactly_generated", r.compactly_generated},
          {"bounded", r.bounded},
          {"right_nondegenerate", r.right_nondegenerate},
          {"co_intermediate", r.co_intermediate},
          {"epi_chain", r.epi_chain ? chain_to_json(*r.epi_chain) : json(nullptr)},
          {"generators", generators_to_json(r.generators)},
          {"notes", r.notes}};
}

json location_to_json(const Spectrum& s, const Location& loc) {
  if (loc.in_interval) return {{"in_interval", {s.name(loc.chi.p), s.name(loc.chi.q)}}};
  return {{"in_gap", {ext_json(s, loc.gap.q), ext_json(s, loc.gap.p)}}};
}

json gaps_to_json(const Spectrum& s, const GapSet& gs) {
  json fin = json::array(), fam = json::array();
  for (auto& g : gs.finite) fin.push_back({{"q", ext_json(s, g.q)}, {"p", ext_json(s, g.p)}, {"case", gap_case_str(g.kind)}});
  for (auto& f : gs.families) fam.push_back(gap_family_str(s, f));
  return {{"finite", fin}, {"families", fam}};
}

}  // namespace vclass
