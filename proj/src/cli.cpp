#include "rfa/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rfa/json_io.hpp"

namespace rfa::cli {

namespace {

struct Config {
  std::int64_t field_q = 0;
  std::int64_t cyclotomic = 0;
  std::string group;
  std::string algebra;
  std::uint64_t seed = 1;
  std::string json_out;
  int max_group_order = 24;
  int max_normal_order = 8;
  int value_order = 0;
  int threads = 0;
  bool local = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidData, path + ": " + e.what());
  }
}

GroupPtr load_group(const std::string& src) {
  if (src.empty()) throw Error(ErrorKind::Usage, "--group is required");
  if (std::filesystem::exists(src)) return group_from_json(read_json_file(src));
  return group_from_json(Json(src));
}

/// Smallest prime p = 1 mod exp(G): it splits G and every subgroup.
FieldSpec default_field(const FinGroup& G) {
  const std::int64_t e = G.exponent();
  for (std::int64_t p = e + 1;; p += e)
    if (is_prime_number(p)) return FieldSpec::prime(p);
}

std::optional<FieldSpec> flag_field(const Config& c) {
  if (c.field_q > 0) return FieldSpec::finite(c.field_q);
  if (c.cyclotomic > 0) return FieldSpec::cyclotomic(c.cyclotomic);
  return std::nullopt;
}

FieldSpec resolve_field(const Config& c, const std::optional<FieldSpec>& from_file, const FinGroup& G) {
  if (auto f = flag_field(c)) return *f;
  if (from_file) return *from_file;
  return default_field(G);
}

void emit(const Config& c, const Json& report, std::ostream& out) {
  if (c.json_out.empty()) return;
  if (c.json_out == "-") {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream f(c.json_out);
  if (!f) throw Error(ErrorKind::Usage, "cannot write " + c.json_out);
  f << report.dump(2) << "\n";
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

AlgebraSpec load_algebra(const Config& c) {
  if (c.algebra.empty()) throw Error(ErrorKind::Usage, "--algebra is required");
  return algebra_spec_from_json(read_json_file(c.algebra));
}

Json header(const std::string& command, const FieldSpec& f, const FinGroup& G, std::uint64_t seed) {
  return {{"command", command}, {"field", to_json(f)}, {"field_name", f.name()}, {"group", to_json(G)}, {"seed", seed}};
}

void print_report(std::ostream& out, const std::string& title, const Report& r) {
  out << "  " << std::left << std::setw(34) << title << verdict(r.ok());
  if (!r.ok()) out << "  " << r.summary();
  out << "\n";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (w.size() <= k) w.push_back(0);
      w[k] = std::max(w[k], r[k].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) {
      line += r[k];
      if (k + 1 < r.size()) line += std::string(w[k] - r[k].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

int cmd_verify(const Config& c, std::ostream& out) {
  AlgebraSpec spec = load_algebra(c);
  FieldSpec f = resolve_field(c, spec.field, *spec.group);
  BuiltAlgebra B = build_A(spec.data, f);
  RigidFrobeniusCert cert = check_rigid_frobenius(B.algebra, B.frobenius);
  CharacterizationResult a = characterization_a(B.algebra), b = characterization_b(B.algebra),
                         cc = characterization_c(B.algebra, B.frobenius);
  Report audit = well_definedness_audit(spec.data, f, c.seed);
  const bool ok = cert.passed && a.passed && b.passed && cc.passed && audit.ok();

  out << "A(H, N, gamma, epsilon) over " << f.name() << ": H = " << spec.data.H.describe()
      << ", N = " << spec.data.N.describe() << "\n";
  out << "  dim A = " << B.algebra.dim() << ", connected dim = " << cert.connected_dim;
  if (cert.qdim) out << ", eps m Delta u = " << cert.qdim->to_string();
  out << "\n";
  print_report(out, "rigid Frobenius suite", cert.report);
  print_report(out, "characterization (a)", a.report);
  print_report(out, "characterization (b)", b.report);
  print_report(out, "characterization (c)", cc.report);
  print_report(out, "transversal audit", audit);
  out << (ok ? "verified" : "verification failed") << "\n";

  Json j = header("verify", f, *spec.group, c.seed);
  j["algebra"] = to_json(spec.data);
  j["dim"] = B.algebra.dim();
  j["basis"] = B.basis_labels;
  j["grade_dims"] = B.algebra.carrier.grade_dims();
  j["cert"] = to_json(cert);
  j["characterization_a"] = to_json(a);
  j["characterization_b"] = to_json(b);
  j["characterization_c"] = to_json(cc);
  j["audit"] = to_json(audit);
  j["passed"] = ok;
  emit(c, j, out);
  return ok ? kPass : kCheckFailed;
}

int cmd_classify(const Config& c, std::ostream& out) {
  GroupPtr G = load_group(c.group);
  FieldSpec f = resolve_field(c, std::nullopt, *G);
  ClassifyOptions opt;
  opt.max_group_order = c.max_group_order;
  opt.max_normal_order = c.max_normal_order;
  opt.value_order = c.value_order;
  opt.threads = c.threads;
  opt.seed = c.seed;
  Classification cl = classify(G, f, opt);

  std::vector<std::optional<LocalAnalysis>> local(cl.entries.size());
  if (c.local)
    parallel_for(cl.entries.size(), c.threads,
                 [&](std::size_t i) { local[i] = analyze_local(cl.entries[i].algebra, c.seed); });
  bool ok = true;
  for (const auto& la : local)
    if (la && !la->ok()) ok = false;

  out << G->name() << " over " << f.name() << ": " << cl.pairs.size() << " admissible pairs, " << cl.entries.size()
      << " algebras\n";
  std::vector<std::vector<std::string>> rows = {{"#", "H", "N", "dim A", "FPdim A", "FPdim loc"}};
  if (c.local) rows[0].push_back("local");
  rows[0].push_back("notes");
  for (std::size_t i = 0; i < cl.entries.size(); ++i) {
    const auto& e = cl.entries[i];
    std::vector<std::string> r = {std::to_string(i), e.data.H.describe(), e.data.N.describe(),
                                  std::to_string(e.dims.dim_A), std::to_string(e.dims.fpdim_rep),
                                  std::to_string(e.dims.fpdim_local)};
    if (c.local) {
      const auto& la = *local[i];
      std::string cell = la.fpdim.census ? std::to_string(la.fpdim.local_count) : "-";
      if (!la.ok()) cell += "!";
      r.push_back(cell);
    }
    std::string notes;
    if (!e.possibly_isomorphic.empty()) {
      notes = "possibly isomorphic to";
      for (int k : e.possibly_isomorphic) notes += " " + std::to_string(k);
    }
    r.push_back(notes);
    rows.push_back(r);
  }
  print_table(out, rows);
  for (const auto& p : cl.pairs) {
    if (p.skipped)
      out << "skipped: H = " << p.H.describe() << ", N = " << p.N.describe() << " (|N| above the cocycle bound)\n";
    else if (p.inconsistent_classes > 0 && p.represented_by == static_cast<int>(&p - cl.pairs.data()))
      out << "no epsilon: H = " << p.H.describe() << ", N = " << p.N.describe() << ", " << p.inconsistent_classes
          << " of " << p.cocycle_classes << " gamma classes\n";
  }

  Json j = header("classify", f, *G, c.seed);
  j["options"] = {{"max_group_order", opt.max_group_order},
                  {"max_normal_order", opt.max_normal_order},
                  {"value_order", opt.value_order}};
  Json pairs = Json::array();
  for (const auto& p : cl.pairs) pairs.push_back(to_json(p));
  j["pairs"] = pairs;
  Json entries = Json::array();
  for (std::size_t i = 0; i < cl.entries.size(); ++i) {
    Json e = to_json(cl.entries[i], i);
    if (local[i]) e["local"] = to_json(*local[i]);
    entries.push_back(e);
  }
  j["entries"] = entries;
  j["passed"] = ok;
  emit(c, j, out);
  return ok ? kPass : kCheckFailed;
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

int cmd_local(const Config& c, std::ostream& out) {
  AlgebraSpec spec = load_algebra(c);
  FieldSpec f = resolve_field(c, spec.field, *spec.group);
  BuiltAlgebra B = build_A(spec.data, f);
  // refuses loudly in a non-semisimple or non-split setting
  require_semisimple_field(*spec.group, f);
  LocalAnalysis la = analyze_local(B, c.seed);
  if (!la.fpdim.census) throw Error(ErrorKind::NonSplit, la.fpdim.census_skipped);

  out << "Rep_A for H = " << spec.data.H.describe() << ", N = " << spec.data.N.describe() << " over " << f.name()
      << ": " << la.simples.size() << " simple modules, " << la.fpdim.local_count << " local\n";
  std::vector<std::vector<std::string>> rows = {{"module", "dim", "local", "twist"}};
  for (const auto& m : la.simples)
    rows.push_back({m.module.label, std::to_string(m.module.carrier.dim()), m.local ? "yes" : "no",
                    m.local ? scalar_text(twist(m.module.carrier).get(0, 0)) : ""});
  print_table(out, rows);
  print_report(out, "FP-dimension census", la.fpdim.report);
  if (la.muger) print_report(out, "Mueger center", la.muger->report);
  print_report(out, "twist", la.twist);
  if (la.modular) {
    const auto& m = *la.modular;
    out << "S (rows and columns: ";
    for (std::size_t i = 0; i < m.labels.size(); ++i) out << (i ? " " : "") << m.labels[i];
    out << ")\n";
    for (std::size_t i = 0; i < m.S.rows(); ++i) {
      out << "  ";
      for (std::size_t k = 0; k < m.S.cols(); ++k) out << (k ? " " : "") << scalar_text(m.S.get(i, k));
      out << "\n";
    }
    out << "T: ";
    for (std::size_t i = 0; i < m.T.size(); ++i) out << (i ? " " : "") << scalar_text(m.T[i]);
    out << "\n  det S " << (determinant(m.S).is_zero() ? "= 0" : "!= 0") << "\n";
  }

  Json j = header("local-modules", f, *spec.group, c.seed);
  j["algebra"] = to_json(spec.data);
  j["local"] = to_json(la);
  j["passed"] = la.ok();
  emit(c, j, out);
  return la.ok() ? kPass : kCheckFailed;
}

int cmd_fpdim(const Config& c, std::ostream& out) {
  AlgebraSpec spec = load_algebra(c);
  FieldSpec f = resolve_field(c, spec.field, *spec.group);
  BuiltAlgebra B = build_A(spec.data, f);
  FpdimReport r = fpdim_checks(B, c.seed);
  out << "H = " << spec.data.H.describe() << ", N = " << spec.data.N.describe() << " over " << f.name() << "\n";
  out << "  dim A = " << r.dim_A << " (formula " << r.formula_dim << ")\n";
  out << "  FPdim Rep_A = " << r.fpdim_rep << ", FPdim Rep^loc_A = " << r.fpdim_local << "\n";
  if (r.census)
    out << "  census: " << r.simple_count << " simple modules, " << r.local_count << " local\n";
  else
    out << "  census refused: " << r.census_skipped << "\n";
  print_report(out, "FP-dimension checks", r.report);
  Json j = header("fpdim", f, *spec.group, c.seed);
  j["algebra"] = to_json(spec.data);
  j["fpdim"] = to_json(r);
  j["passed"] = r.report.ok();
  emit(c, j, out);
  return r.report.ok() ? kPass : kCheckFailed;
}

int cmd_selftest(const Config& c, std::ostream& out) {
  struct Case {
    std::string name;
    std::function<bool()> run;
  };
  auto named = [](const char* n) { return std::make_shared<FinGroup>(FinGroup::named(n)); };
  std::vector<Case> cases = {
      {"S4 / A4 / C2xC2 over F_3 is 8-dimensional and verified",
       [&] {
         auto G = named("S4");
         int a = G->find_label("(12)(34)"), b = G->find_label("(13)(24)");
         Subgroup N = generated_subgroup(G, {a, b});
         Subgroup H = generated_subgroup(G, {G->find_label("(123)"), a});
         FieldSpec f = FieldSpec::prime(3);
         BuiltAlgebra B = build_A({H, N, trivial_cocycle(N, 1), trivial_epsilon(H, N, 1)}, f);
         return B.algebra.dim() == 8 && check_rigid_frobenius(B.algebra, B.frobenius).passed &&
                well_definedness_audit(B.data, f, c.seed).ok();
       }},
      {"C2 over F_13 has 3 algebras",
       [&] { return classify(named("C2"), FieldSpec::prime(13)).entries.size() == 3; }},
      {"k(S3/C2) over F_13 has 4 simple local modules",
       [&] {
         auto G = named("S3");
         Subgroup H = generated_subgroup(G, {G->find_label("(12)")}), one = trivial_subgroup(G);
         BuiltAlgebra B = build_A({H, one, trivial_cocycle(one, 1), trivial_epsilon(H, one, 1)}, FieldSpec::prime(13));
         return simple_local_modules(make_rigid(B), c.seed).size() == 4;
       }},
      {"A(C6, C2) over F_3 has FPdim Rep^loc = 9 and no census",
       [&] {
         auto G = named("C6");
         Subgroup H = whole_group(G), N = generated_subgroup(G, {3});
         BuiltAlgebra B = build_A({H, N, trivial_cocycle(N, 1), trivial_epsilon(H, N, 1)}, FieldSpec::prime(3));
         FpdimReport r = fpdim_checks(B, c.seed);
         return check_rigid_frobenius(B.algebra, B.frobenius).passed && r.fpdim_local == 9 && !r.census;
       }},
  };
  bool ok = true;
  Json results = Json::array();
  for (const auto& t : cases) {
    bool pass = false;
    try {
      pass = t.run();
    } catch (const Error&) {
      pass = false;
    }
    ok = ok && pass;
    out << verdict(pass) << " " << t.name << "\n";
    results.push_back({{"name", t.name}, {"passed", pass}});
  }
  emit(c, {{"command", "selftest"}, {"results", results}, {"passed", ok}}, out);
  return ok ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigid Frobenius algebras in Yetter-Drinfeld modules over finite groups and their local modules", "rfa"};
  app.require_subcommand(1);
  Config c;
  auto add_common = [&](CLI::App* sub) {
    auto* fld = sub->add_option("--field", c.field_q, "finite field F_q (q prime or prime power)");
    auto* cyc = sub->add_option("--cyclotomic", c.cyclotomic, "cyclotomic field Q(zeta_m)");
    fld->excludes(cyc);
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--json", c.json_out, "write the JSON report to a file, or - for stdout");
  };
  auto* verify = app.add_subcommand("verify", "build an algebra from a spec and run every check");
  auto* cls = app.add_subcommand("classify", "enumerate and verify all algebras for a group");
  auto* local = app.add_subcommand("local-modules", "simple local modules, Mueger center, S and T");
  auto* fp = app.add_subcommand("fpdim", "formula and census FP-dimensions");
  auto* self = app.add_subcommand("selftest", "built-in smoke checks");
  for (auto* s : {verify, local, fp}) {
    add_common(s);
    s->add_option("--algebra", c.algebra, "algebra spec JSON")->required();
  }
  add_common(cls);
  add_common(self);
  cls->add_option("--group", c.group, "group JSON file or name (C4, S4, D4, Q8, C2xC2, ...)")->required();
  cls->add_option("--max-group-order", c.max_group_order, "refuse larger groups")->capture_default_str();
  cls->add_option("--max-normal-order", c.max_normal_order, "skip N above this order")->capture_default_str();
  cls->add_option("--value-order", c.value_order, "order of the cocycle value group (default |N|)");
  cls->add_option("--threads", c.threads, "worker threads (default: all cores)");
  cls->add_flag("--local", c.local, "also analyze local modules of every entry");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(c, out);
    if (*cls) return cmd_classify(c, out);
    if (*local) return cmd_local(c, out);
    if (*fp) return cmd_fpdim(c, out);
    if (*self) return cmd_selftest(c, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InternalInconsistency:
      case ErrorKind::NotRigidFrobenius:
        return kCheckFailed;
      default:
        return kUsage;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "InvalidData: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rfa::cli
