#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "vclass/coaisle.hpp"
#include "vclass/errors.hpp"
#include "vclass/fixtures.hpp"
#include "vclass/io.hpp"
#include "vclass/svg.hpp"

using namespace vclass;

namespace {

constexpr int kOk = 0, kViolation = 1, kInputError = 2;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const AdmissibleFiltration& need_filtration(const Document& d) {
  if (!d.filtration) throw SchemaError("/filtration: missing");
  return *d.filtration;
}

// System to work on: the file's single system, or X_n of its filtration.
AdmissibleSystem pick_system(const Document& d, std::optional<int> degree) {
  if (degree) return need_filtration(d).at(*degree);
  if (d.system) return *d.system;
  throw SchemaError("/system: missing (or pass --degree)");
}

void print_text(const json& j, const std::string& indent = "") {
  for (auto& [k, v] : j.items()) {
    if (v.is_object()) {
      std::cout << indent << k << ":\n";
      print_text(v, indent + "  ");
    } else if (v.is_array()) {
      std::cout << indent << k << ":\n";
      for (auto& e : v) std::cout << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
    } else {
      std::cout << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void output(const json& j, const std::string& format) {
  if (format == "text")
    print_text(j);
  else
    emit(j);
}

std::pair<int, int> parse_window(const std::string& w) {
  auto k = w.find("..");
  if (k == std::string::npos) throw SchemaError("--window: expected a..b");
  try {
    return {std::stoi(w.substr(0, k)), std::stoi(w.substr(k + 2))};
  } catch (const std::exception&) {
    throw SchemaError("--window: expected integers a..b");
  }
}

Spectrum read_spectrum(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("spectrum")) return spectrum_from_json(j["spectrum"], "/spectrum");
  return spectrum_from_json(j, "");
}

int cmd_validate(const std::string& path, const std::string& format) {
  Document d = read_document(path);
  if (d.filtration) {
    auto r = validate_filtration(*d.filtration);
    output(filtration_report_to_json(r), format);
    return r.ok ? kOk : kViolation;
  }
  auto r = validate_system(*d.system);
  output(validation_to_json(r), format);
  return r.ok ? kOk : kViolation;
}

int cmd_classify(const std::string& path, const std::string& format) {
  Document d = read_document(path);
  const auto& f = need_filtration(d);
  auto v = validate_filtration(f);
  if (!v.ok) {
    output(filtration_report_to_json(v), format);
    return kViolation;
  }
  json j = classification_to_json(classify(f));
  if (d.paper_verdicts.is_object() && d.paper_verdicts.contains("left_nondegenerate") &&
      !d.paper_verdicts["left_nondegenerate"].is_null())
    j["left_nondegenerate"] = d.paper_verdicts["left_nondegenerate"];
  output(j, format);
  return kOk;
}

int cmd_locate(const std::string& path, std::optional<int> degree, const std::string& ideal) {
  Document d = read_document(path);
  auto x = pick_system(d, degree);
  auto i = parse_submodule(d.spectrum, ideal);
  if (i.is_loc()) throw SchemaError("--ideal: expected zero or a proper ideal");
  emit(location_to_json(d.spectrum, locate_ideal(x, i)));
  return kOk;
}

int cmd_enumerate(const std::string& spath, const std::string& window, bool count_only) {
  Spectrum s = read_spectrum(spath);
  auto [a, b] = parse_window(window);
  if (count_only) {
    std::cout << count_filtrations(s, a, b) << "\n";
    return kOk;
  }
  std::size_t n = enumerate(s, a, b, [](const AdmissibleFiltration& f) {
    std::cout << filtration_to_json(f).dump() << "\n";
  });
  std::cerr << n << " filtrations\n";
  return kOk;
}

int cmd_xi(const std::string& path, int degree, const std::string& module) {
  Document d = read_document(path);
  const auto& f = need_filtration(d);
  auto m = parse_module(d.spectrum, module);
  bool a = xi_membership(f, degree, m), b = xi_membership_homological(f, degree, m);
  if (a != b) throw FormulationMismatch("interval and homological membership disagree");
  emit({{"schema_version", kSchemaVersion}, {"degree", degree}, {"module", to_literal(d.spectrum, m)},
        {"member", a}, {"homological", b}});
  return kOk;
}

int cmd_chain(const std::string& path, const std::string& format) {
  Document d = read_document(path);
  try {
    auto ch = filtration_to_chain(need_filtration(d));
    if (format == "text")
      std::cout << ch.render() << "\n";
    else
      emit(chain_to_json(ch));
    return kOk;
  } catch (const NotNowhereDense& e) {
    emit({{"schema_version", kSchemaVersion}, {"error", "NotNowhereDense"}, {"diagnosis", e.what()}});
    return kViolation;
  }
}

int cmd_generators(const std::string& path, const std::string& format) {
  Document d = read_document(path);
  auto gs = build_generators(need_filtration(d));
  if (format == "text") {
    for (auto& g : gs) std::cout << g.text() << "\n";
  } else {
    emit({{"schema_version", kSchemaVersion}, {"generators", generators_to_json(gs)}});
  }
  return kOk;
}

int cmd_tor(const std::string& path, std::optional<int> degree, const std::string& module) {
  Document d = read_document(path);
  auto x = pick_system(d, degree);
  TorReport r = module.empty() ? class_equals_tor_description(x)
                               : class_equals_tor_description(x, {parse_module(d.spectrum, module)});
  json rows = json::array();
  for (auto& row : r.rows)
    rows.push_back({{"module", to_literal(d.spectrum, row.module)},
                    {"in_class", row.in_class},
                    {"homological", row.homological}});
  emit({{"schema_version", kSchemaVersion}, {"system", system_str(x)}, {"rows", rows},
        {"mismatches", r.mismatches}});
  return r.mismatches == 0 ? kOk : kViolation;
}

int cmd_fixture(const std::string& name, const std::string& dir) {
  std::vector<std::string> names = name == "all" ? fixture_names() : std::vector<std::string>{name};
  for (auto& n : names) {
    Fixture f = make_fixture(n);
    std::string out = (dir.empty() ? "" : dir + "/") + n + ".json";
    std::ofstream o(out);
    if (!o) throw std::runtime_error("cannot write " + out);
    o << fixture_to_json(f).dump(2) << "\n";
    std::cout << out << "\n";
  }
  return kOk;
}

int cmd_diagram(const std::string& path, const std::string& out) {
  Document d = read_document(path);
  std::string svg = render_svg(need_filtration(d));
  if (out.empty() || out == "-") {
    std::cout << svg;
    return kOk;
  }
  std::ofstream o(out);
  if (!o) throw std::runtime_error("cannot write " + out);
  o << svg;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vclass: definable coaisles over valuation domains"};
  app.require_subcommand(1);
  std::string path, format = "json", ideal, module, window, spectrum_path, name, out, dir;
  int degree = 0;
  bool count_only = false;
  auto fmt_opt = [&](CLI::App* c) {
    c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "check a system or filtration");
  validate->add_option("file", path)->required();
  fmt_opt(validate);

  auto* cls = app.add_subcommand("classify", "classification report for a filtration");
  cls->add_option("file", path)->required();
  fmt_opt(cls);

  auto* locate = app.add_subcommand("locate", "interval or gap containing an ideal");
  locate->add_option("file", path)->required();
  auto* loc_deg = locate->add_option("--degree", degree);
  locate->add_option("--ideal", ideal)->required();

  auto* en = app.add_subcommand("enumerate", "all filtrations of a finite spectrum over a window");
  en->add_option("--spectrum", spectrum_path)->required();
  en->add_option("--window", window)->required();
  en->add_flag("--count-only", count_only);

  auto* xi = app.add_subcommand("xi", "degree-n membership of a uniserial module");
  xi->add_option("file", path)->required();
  xi->add_option("--degree", degree)->required();
  xi->add_option("--module", module)->required();

  auto* chain = app.add_subcommand("chain", "chain of ring epimorphisms");
  chain->add_option("file", path)->required();
  fmt_opt(chain);

  auto* gen = app.add_subcommand("generators", "tensor generators of the coaisle");
  gen->add_option("file", path)->required();
  fmt_opt(gen);

  auto* tor = app.add_subcommand("tor", "class membership vs the Tor/gap description");
  std::string system_path;
  tor->add_option("file", path);
  tor->add_option("--system", system_path, "same as the positional file");
  auto* tor_deg = tor->add_option("--degree", degree);
  tor->add_option("--module", module);

  auto* fix = app.add_subcommand("fixture", "write a fixture file (ex0 ex1 ex2 ex3 hrs stable_constant all)");
  fix->add_option("name", name)->required();
  fix->add_option("--dir", dir);

  auto* dia = app.add_subcommand("diagram", "SVG of a filtration");
  dia->add_option("file", path)->required();
  dia->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  auto opt_degree = [&](CLI::Option* o) { return o->count() ? std::optional<int>(degree) : std::nullopt; };
  try {
    if (*validate) return cmd_validate(path, format);
    if (*cls) return cmd_classify(path, format);
    if (*locate) return cmd_locate(path, opt_degree(loc_deg), ideal);
    if (*en) return cmd_enumerate(spectrum_path, window, count_only);
    if (*xi) return cmd_xi(path, degree, module);
    if (*chain) return cmd_chain(path, format);
    if (*gen) return cmd_generators(path, format);
    if (*tor) {
      if (path.empty()) path = system_path;
      if (path.empty()) throw SchemaError("tor: pass a file or --system");
      return cmd_tor(path, opt_degree(tor_deg), module);
    }
    if (*fix) return cmd_fixture(name, dir);
    if (*dia) return cmd_diagram(path, out);
  } catch (const SchemaError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
