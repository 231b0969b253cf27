#include "vclass/fixtures.hpp"

#include "vclass/errors.hpp"

namespace vclass {

namespace {

json verdicts(bool nd, bool cg, bool bounded, bool right, bool co, json left) {
  json v = {{"nowhere_dense", nd},
            {"compactly_generated", cg},
            {"bounded", bounded},
            {"right_nondegenerate", right},
            {"co_intermediate", co}};
  v["left_nondegenerate"] = left.is_null() ? json(nullptr) : json{{"value", left}, {"source", "paper"}};
  return v;
}

Fixture ex0(bool corrupted) {
  Spectrum s = Spectrum::lex_double();
  Family pts{FamilyKind::Points, ParamSet{}};
  if (corrupted)
    pts.params = ParamSet::range(Rat(0), Rat(1));
  else
    pts.params.seqs.push_back(Geometric{Rat(1), Rat(1, 2), Rat(0)});
  Family full{FamilyKind::Full, ParamSet::range(Rat(0), Rat(1))};
  std::vector<AdmissibleSystem> xs = {AdmissibleSystem(s), AdmissibleSystem(s, {}, {pts}),
                                      AdmissibleSystem(s, {}, {full}),
                                      AdmissibleSystem(s, {{s.zero(), s.top()}})};
  return {corrupted ? "ex0_corrupted" : "ex0", AdmissibleFiltration(s, -1, xs),
          verdicts(false, false, true, true, true, nullptr)};
}

}  // namespace

std::vector<std::string> fixture_names() { return {"ex0", "ex1", "ex2", "ex3", "hrs", "stable_constant"}; }

Fixture corrupted_ex0() { return ex0(true); }

Fixture make_fixture(const std::string& name) {
  if (name == "ex0") return ex0(false);
  if (name == "ex1" || name == "ex2") {
    Spectrum s = Spectrum::omega_plus_one();
    bool one = name == "ex1";
    std::vector<Interval> x0 = {{s.zero(), s.zero()}};
    if (one) x0.push_back({s.top(), s.top()});
    AdmissibleFiltration f(s, -1, {AdmissibleSystem(s), AdmissibleSystem(s, x0)}, BelowRule::Empty,
                           one ? AboveRule::Ex1Tail : AboveRule::Ex2Tail);
    if (one) return {name, f, verdicts(true, false, false, true, false, true)};
    return {name, f, verdicts(true, true, false, true, false, false)};
  }
  if (name == "ex3") {
    Spectrum s = Spectrum::two_point(true);
    AdmissibleFiltration f(s, -1,
                           {AdmissibleSystem(s), AdmissibleSystem(s, {{s.zero(), s.zero()}, {s.top(), s.top()}})});
    return {name, f, verdicts(true, false, false, true, false, false)};
  }
  if (name == "hrs") {
    Spectrum s = Spectrum::two_point(true);
    AdmissibleFiltration f(s, -1, {AdmissibleSystem(s), AdmissibleSystem(s, {{s.zero(), s.top()}})});
    return {name, f, verdicts(true, true, true, true, true, nullptr)};
  }
  if (name == "stable_constant") {
    Spectrum s = Spectrum::two_point(true);
    AdmissibleFiltration f(s, 0, {AdmissibleSystem(s, {{s.zero(), s.zero()}, {s.top(), s.top()}})},
                           BelowRule::ConstantFirst, AboveRule::ConstantLast);
    return {name, f, verdicts(true, false, false, false, false, nullptr)};
  }
  throw SchemaError("unknown fixture '" + name + "'");
}

json fixture_to_json(const Fixture& f) {
  return {{"spectrum", spectrum_to_json(f.filtration.spectrum())},
          {"filtration", filtration_to_json(f.filtration)},
          {"paper_verdicts", f.paper_verdicts}};
}

}  // namespace vclass
