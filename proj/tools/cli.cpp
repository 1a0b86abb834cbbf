// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "toricdec/decomposition.hpp"
#include "toricdec/examples.hpp"
#include "toricdec/io.hpp"
#include "toricdec/ishida.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace toricdec::cli {

namespace {

struct Config {
  std::string input;
  std::string example;
  std::int64_t box = 6;
  std::int64_t k_max = 20;
  std::string format = "table";
  unsigned jobs = 1;
  std::string output;
  std::vector<std::int64_t> degree;

  CheckOptions options() const { return {box, k_max, jobs}; }
  bool structured() const { return format == "structured"; }
};

// What a command hands back: a report, plus optional lines printed above it in
// table mode. `raw` replaces the whole output when set.
struct Outcome {
  DecompositionReport report;
  std::vector<std::string> headline;
  bool show_report = true;
  std::optional<std::string> raw;
  std::optional<std::string> raw_table;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string group_string(const AbelianGroupPresentation& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto& d : g.torsion) parts.push_back("Z/" + d.get_str());
  return parts.empty() ? "0" : join(parts, " + ");
}

std::string class_string(const ClassElement& c) { return c.size() == 1 ? c[0].get_str() : to_string(c); }

DecompositionReport info_report(const std::string& title, const std::string& target, const Config& cfg) {
  DecompositionReport r;
  r.title = title;
  r.target = target;
  r.box = cfg.box;
  r.k_max = cfg.k_max;
  return r;
}

GradingSetup load_setup(const Config& cfg) { return parse_setup(read_file(cfg.input)); }

Outcome fan_info(const Config& cfg) {
  const GradingSetup setup = load_setup(cfg);
  if (!setup.has_fan()) throw InputError("", "expected a fan document");
  const Fan& fan = setup.fan();
  std::ostringstream head;
  head << fan.ambient_dim() << "-dimensional fan, " << fan.num_rays() << " rays, " << fan.max_cones().size()
       << " maximal cones, " << (fan.is_smooth() ? "smooth" : "not smooth");
  Outcome o{info_report("fan info", head.str(), cfg), {head.str()}, false, {}, {}};
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    o.headline.push_back("  ray " + std::to_string(i) + ": " + to_string(fan.ray(i)));
  for (std::size_t i = 0; i < fan.max_cones().size(); ++i) {
    const Cone& c = fan.max_cones()[i];
    o.headline.push_back("  cone " + cone_string(c) + (fan.is_smooth(c) ? "  smooth" : "") +
                         (fan.is_simplicial(c) ? "  simplicial" : "  not simplicial"));
  }
  std::vector<std::string> locus;
  for (const auto& c : fan.nonsimplicial_locus()) locus.push_back(cone_string(c));
  o.headline.push_back("  non-simplicial cones: " + (locus.empty() ? std::string("none") : join(locus, " ")));
  return o;
}

Outcome classgroup(const Config& cfg) {
  const GradingSetup setup = load_setup(cfg);
  std::vector<std::string> degrees;
  for (const auto& c : setup.class_of_vars()) degrees.push_back(class_string(c));
  const std::string line = group_string(setup.class_group()) + ", degrees (" + join(degrees, ",") + ")";
  return {info_report("class group", line, cfg), {line}, false, {}, {}};
}

Outcome irrelevant(const Config& cfg) {
  const GradingSetup setup = load_setup(cfg);
  const std::string line = "B = " + setup.irrelevant().to_string();
  return {info_report("irrelevant ideal", line, cfg), {line}, false, {}, {}};
}

Outcome matrix_check(const Config& cfg) {
  const MatrixDocument doc = parse_matrix(read_file(cfg.input));
  DecompositionReport r = info_report("matrix check", "", cfg);
  const auto shifts = equivariant_shifts(doc.entries, doc.nvars);
  std::optional<Polynomial> minor;
  std::optional<std::string> too_big;
  try {
    minor = non_monomial_minor(doc.entries, doc.nvars);
  } catch (const SizeBoundExceeded& e) {
    too_big = e.what();
  }
  if (shifts) {
    std::vector<std::string> t, s;
    for (const auto& a : shifts->target) t.push_back(to_string(a));
    for (const auto& b : shifts->source) s.push_back(to_string(b));
    r.verdicts.push_back(Verdict::verified("equivariant", "target shifts " + join(t, " ") + ", source shifts " + join(s, " ")));
  } else {
    r.verdicts.push_back(Verdict::failed("equivariant", {}, minor ? "minor " + minor->to_string() : "no consistent shifts"));
  }
  const std::string check = "minors are monomials";
  if (too_big)
    r.verdicts.push_back(Verdict::inconclusive(check, *too_big));
  else if (static_cast<bool>(shifts) == !minor)
    r.verdicts.push_back(Verdict::verified(check, minor ? "agrees: minor " + minor->to_string() : "agrees"));
  else
    r.verdicts.push_back(Verdict::failed(check, {}, minor ? minor->to_string() : "all minors monomial",
                                         "disagrees with the shift search"));
  if (doc.matrix) r.verdicts.push_back(Verdict::verified("homogeneous for the given shifts"));
  return {std::move(r), {}, true, {}, {}};
}

Outcome module_piece(const Config& cfg) {
  const ModuleDocument doc = parse_module(read_file(cfg.input));
  std::optional<IntVector> degree = doc.degree;
  if (!cfg.degree.empty()) {
    if (cfg.degree.size() != doc.setup.num_vars())
      throw InputError("--degree", "expected " + std::to_string(doc.setup.num_vars()) + " entries");
    degree = IntVector(cfg.degree.begin(), cfg.degree.end());
  }
  if (degree) {
    const GradedPiece p = piece(doc.module, *degree);
    std::ostringstream t;
    t << "degree " << to_string(*degree) << ": dim " << p.dim() << '\n';
    for (const auto& b : p.basis) {
      std::vector<std::string> terms;
      for (std::size_t i = 0; i < p.labels.size(); ++i) {
        const Rational& c = b[i];
        if (c == 0) continue;
        terms.push_back(c.get_str() + "*" + monomial_string(p.labels[i].exponent) + "*e" +
                        std::to_string(p.labels[i].generator));
      }
      t << "  " << (terms.empty() ? std::string("0") : join(terms, " + ")) << '\n';
    }
    return {{}, {}, false, piece_to_document(p), t.str()};
  }
  DecompositionReport r = info_report("graded pieces", doc.module.to_string(), cfg);
  r.columns = {"dim"};
  for (const auto& a : degree_box(box_lower(doc.module), cfg.box))
    r.table.push_back({a, {static_cast<std::int64_t>(evaluate(doc.module, a).dim())}});
  return {std::move(r), {}, true, {}, {}};
}

Outcome sheaf_zero_test(const Config& cfg) {
  const ModuleDocument doc = parse_module(read_file(cfg.input));
  DecompositionReport r = info_report("sheaf zero-test", doc.module.to_string(), cfg);
  Verdict v = sheafification_zero(doc.module, doc.setup, cfg.options());
  std::string line;
  switch (v.status) {
    case VerdictStatus::Verified: line = "B-torsion: sheafification zero"; break;
    case VerdictStatus::Failed: line = "not B-torsion: sheafification nonzero at " + to_string(v.degree); break;
    case VerdictStatus::Inconclusive: line = "inconclusive: k_max exhausted before stabilization"; break;
  }
  r.verdicts.push_back(std::move(v));
  return {std::move(r), {line}, true, {}, {}};
}

Outcome decompose_verify(const Config& cfg) {
  const ModuleDocument doc = parse_module(read_file(cfg.input));
  if (doc.components.empty()) throw InputError("/components", "no components given");
  const ModuleExpr target = doc.target ? *doc.target : ModuleExpr::zero(doc.module);
  const CheckOptions opts = cfg.options();
  DecompositionReport r = info_report("decompose verify", target.to_string(), cfg);

  std::vector<ModuleExpr> qs;
  std::vector<PrimaryComponent> comps;
  for (const auto& c : doc.components) {
    qs.push_back(c.module);
    comps.push_back(make_component(c.module, c.prime, doc.setup, c.label));
  }
  r.verdicts.push_back(intersect_check(qs, target, opts, "target = intersection of components"));
  for (const auto& c : comps)
    for (auto v : verify_primary(c.module, doc.module, c.prime, opts)) {
      v.check = c.label + " primary: " + v.check;
      r.verdicts.push_back(std::move(v));
    }

  const DescentResult d = descend(comps, doc.module, doc.setup, opts);
  for (const auto& c : d.kept) r.components.push_back({c.label, c.prime, c.relevant, true, ""});
  for (const auto& [c, why] : d.dropped) r.components.push_back({c.label, c.prime, c.relevant, false, why});
  std::stable_sort(r.components.begin(), r.components.end(), [&](const auto& x, const auto& y) {
    auto pos = [&](const std::string& l) {
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].label == l) return i;
      return comps.size();
    };
    return pos(x.label) < pos(y.label);
  });
  std::vector<std::string> charts;
  for (const auto& c : d.non_free_charts) charts.push_back(monomial_string(c));
  std::vector<std::string> head;
  if (!charts.empty()) head.push_back("charts without invertible functions in every degree: " + join(charts, " "));
  return {std::move(r), head, true, {}, {}};
}

Outcome omega_check(const Config& cfg) {
  const GradingSetup setup = load_setup(cfg);
  if (!setup.has_fan()) throw InputError("", "expected a fan document");
  const CheckOptions opts = cfg.options();
  DecompositionReport r = omega_decomposition_check(setup.fan_ptr(), opts);
  const IshidaData data = build_ishida(setup.fan_ptr());
  const auto sipl = cokernel_support(setup.fan(), 2);
  const auto engine = cokernel_support_engine(data, 2, cfg.k_max);
  const auto locus = setup.fan().nonsimplicial_locus();
  std::vector<std::string> cones;
  for (const auto& c : sipl) cones.push_back(cone_string(c));
  const std::string listed = cones.empty() ? "empty" : join(cones, " ");
  if (sipl == engine && sipl == locus)
    r.verdicts.push_back(Verdict::verified("cokernel support = non-simplicial locus", listed));
  else
    r.verdicts.push_back(Verdict::failed("cokernel support = non-simplicial locus", {}, listed));
  return {std::move(r), {}, true, {}, {}};
}

Outcome example(const Config& cfg) {
  const CheckOptions opts = cfg.options();
  if (cfg.example == "p2-cubic") return {p2_cubic_report(opts), {}, true, {}, {}};
  if (cfg.example == "quadric-cone")
    return {torsion_report("quadric cone: k in class 1 of Z/2", quadric_cone_example(), opts), {}, true, {}, {}};
  return {torsion_report("Z-graded, 4 variables: x0*S/<x0^2,x1,x2,x3>", z_graded_4var_example(), opts), {}, true,
          {}, {}};
}

std::string render(const Outcome& o, const Config& cfg) {
  if (cfg.structured()) return o.raw ? *o.raw : report_to_document(o.report);
  if (o.raw_table) return *o.raw_table;
  std::string s;
  for (const auto& l : o.headline) s += l + "\n";
  if (o.show_report) s += to_table(o.report);
  return s;
}

int status_code(const Outcome& o) { return o.raw ? 0 : exit_code(o.report.overall()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Equivariant primary decompositions over toric Cox rings", "toricdec"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--box", cfg.box, "bound on the total fine degree")->check(CLI::NonNegativeNumber);
  app.add_option("--k-max", cfg.k_max, "largest localization exponent")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--output", cfg.output, "write the report to a file");

  Outcome (*command)(const Config&) = nullptr;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Outcome (*f)(const Config&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("file", cfg.input, "input document")->required();
    sub->callback([&command, f] { command = f; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  leaf(group("fan", "fan data"), "info", "rays, cones, smoothness", fan_info);
  leaf(&app, "classgroup", "class group and variable degrees", classgroup);
  leaf(&app, "irrelevant", "irrelevant ideal", irrelevant);
  leaf(group("matrix", "monomial matrices"), "check", "equivariance of a monomial matrix", matrix_check);
  leaf(group("module", "module expressions"), "piece", "graded pieces", module_piece)
      ->add_option("--degree", cfg.degree, "fine degree")
      ->delimiter(',');
  leaf(group("sheaf", "sheafification"), "zero-test", "does the sheafification vanish", sheaf_zero_test);
  leaf(group("decompose", "decompositions"), "verify", "check user-supplied primary components", decompose_verify);
  leaf(group("omega", "Zariski 1-forms"), "check", "decomposition of the 1-forms of a fan", omega_check);
  CLI::App* ex = app.add_subcommand("example", "built-in examples");
  ex->add_option("name", cfg.example, "p2-cubic, quadric-cone or z-graded-4var")
      ->required()
      ->check(CLI::IsMember({"p2-cubic", "quadric-cone", "z-graded-4var"}));
  ex->callback([&command] { command = example; });

  std::vector<std::string> argv_store(args.begin(), args.end());
  if (argv_store.empty()) argv_store.push_back("toricdec");
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }
  if (!command) {
    err << "error: no command\n";
    return kExitUsage;
  }

  const std::string where = cfg.input.empty() ? std::string() : cfg.input + ": ";
  Outcome result;
  try {
    result = command(cfg);
  } catch (const InputError& e) {
    err << "error: " << (e.where() == cfg.input ? std::string() : where) << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeBoundExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << where << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << where << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << where << e.what() << '\n';
    return 2;
  }

  const std::string text = render(result, cfg);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!(f << text)) {
      err << "error: " << cfg.output << ": cannot write\n";
      return kExitUsage;
    }
  }
  return status_code(result);
}

}  // namespace toricdec::cli
