#pragma once

#include <filesystem>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpade/hpade.hpp"
#include "hpade/io.hpp"

namespace hpade::cli {

using io::json;

struct Globals {
  int digits = kDefaultDigits;
  std::string out;
  bool quiet = false;
};

inline void progress(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << "\n";
}

/// Writes to --out, or stdout when it is empty.
inline void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) std::cout << text;
  else io::write_text(g.out, text);
}

inline PowerSeries<Scalar> load_series(const std::string& path, int digits) {
  return io::series_from_json(io::read_json(path), digits);
}

inline json polys_json(const std::string& type, const std::vector<std::pair<std::string, Polynomial<Scalar>>>& polys) {
  json j;
  j["type"] = type;
  json p = json::object();
  for (const auto& [name, poly] : polys) p[name] = io::to_json(poly);
  j["polynomials"] = p;
  return j;
}

// model

struct ModelArgs {
  std::string model;
  std::string params;
  std::string A, B;
  int terms = 0;
};

inline int cmd_model(const Globals& g, const ModelArgs& a) {
  require_digits(g.digits);
  ModelSpec spec = default_model(parse_model_kind(a.model), g.digits);
  if (!a.params.empty()) {
    spec.params.clear();
    for (const auto& s : io::split_list(a.params)) spec.params.push_back(io::parse_complex(s, g.digits));
  }
  if (spec.kind == ModelKind::zhukovsky_markov) {
    if (!a.A.empty()) spec.params[0] = io::parse_complex(a.A, g.digits);
    if (!a.B.empty()) spec.params[1] = io::parse_complex(a.B, g.digits);
  }
  progress(g, "model " + std::string(to_string(spec.kind)) + ": " + std::to_string(a.terms) + " coefficients");
  const auto f = model_series(spec, a.terms, g.digits);
  json j = io::series_json(f, to_string(spec.kind));
  j["params"] = io::to_json(spec.params, g.digits);
  emit(g, io::dump(j));
  return 0;
}

// vdp

inline int cmd_vdp(const Globals& g, int order) {
  require_digits(g.digits);
  progress(g, "vdp: nu_1 .. nu_" + std::to_string(order));
  json j;
  j["type"] = "vdp";
  j["order"] = order;
  if (2 * order <= kVdpExactCeiling) {
    const auto e = vdp_expand(2 * order);
    json ex = json::array();
    for (const auto& q : e.nu) ex.push_back(q.str());
    j["nu_exact"] = ex;
  } else {
    j["nu_exact"] = nullptr;
  }
  const auto s = vdp_nu_series(order, g.digits);
  j["series"] = io::series_json(s, "vdp_nu");
  j["coefficients"] = j["series"]["coefficients"];
  j["digits"] = g.digits;
  emit(g, io::dump(j));
  return 0;
}

// pade / hp1 / hp2 / disc / komlov

inline int cmd_pade(const Globals& g, const std::string& in, int n) {
  const auto f = load_series(in, g.digits);
  progress(g, "pade [" + std::to_string(n) + "/" + std::to_string(n) + "]");
  const auto pa = pade_diagonal(f, n);
  json j = polys_json("pade", {{"P", pa.P}, {"Q", pa.Q}});
  j["n"] = n;
  j["residual_order"] = pa.residual_order;
  j["normal"] = pa.normal;
  emit(g, io::dump(j));
  return 0;
}

inline MultiIndex multi_index(const std::string& m, int n, int size) {
  if (!m.empty()) return io::parse_int_list(m);
  if (n < 0) throw error(errc::invalid_params, "give --m or --n");
  return MultiIndex(static_cast<std::size_t>(size + 1), n);
}

inline int cmd_hp1(const Globals& g, const std::string& in, const MultiIndex& m) {
  const auto f = load_series(in, g.digits);
  progress(g, "hp1 " + to_string(m));
  const auto t = hp_type1(f, m);
  std::vector<std::pair<std::string, Polynomial<Scalar>>> polys;
  for (std::size_t j = 0; j < t.Q.size(); ++j) polys.emplace_back("Q" + std::to_string(j), t.Q[j]);
  json j = polys_json("hp1", polys);
  j["m"] = m;
  j["residual_order"] = t.residual_order;
  j["required_order"] = t.required_order;
  j["normal"] = t.normal;
  emit(g, io::dump(j));
  return 0;
}

inline int cmd_hp2(const Globals& g, const std::string& in, int n, int size) {
  const auto f = load_series(in, g.digits);
  progress(g, "hp2 n=" + std::to_string(n) + " size=" + std::to_string(size));
  const auto t = hp_type2(f, n, size);
  std::vector<std::pair<std::string, Polynomial<Scalar>>> polys;
  for (std::size_t j = 0; j < t.P.size(); ++j) polys.emplace_back("P" + std::to_string(j), t.P[j]);
  json j = polys_json("hp2", polys);
  j["n"] = n;
  j["tuple_size"] = size;
  j["residual_orders"] = t.residual_orders;
  j["normal"] = t.normal;
  emit(g, io::dump(j));
  return 0;
}

/// Input is an hp1 file for [1, f, f^2] or a series together with --m.
inline int cmd_disc(const Globals& g, const std::string& in, const std::string& m) {
  const json src = io::read_json(in);
  TypeOneSystem<Scalar> t;
  if (src.value("type", "") == "hp1") {
    for (int j = 0; j < 3; ++j) t.Q.push_back(io::polynomial_from_json(src, "Q" + std::to_string(j), g.digits));
    if (src.at("polynomials").size() != 3)
      throw error(errc::dimension_mismatch, "discriminant needs a system for [1, f, f^2]");
  } else {
    t = hp_type1(io::series_from_json(src, g.digits), multi_index(m, -1, 2));
  }
  progress(g, "disc");
  json j = polys_json("disc", {{"D", discriminant(t)}});
  emit(g, io::dump(j));
  return 0;
}

inline int cmd_komlov(const Globals& g, const std::string& in, int n) {
  const auto f = load_series(in, g.digits);
  progress(g, "komlov n=" + std::to_string(n));
  const auto k = komlov_from_series(f, n);
  json j = polys_json("komlov", {{"H0", k.H0}, {"H1", k.H1}});
  j["n"] = n;
  j["normal"] = k.normal;
  emit(g, io::dump(j));
  return 0;
}

// roots / invert

inline PointTag default_tag(const std::string& type, const std::string& name) {
  if (type == "pade") return name == "Q" ? PointTag::pole : PointTag::zero;
  if (type == "hp1") return PointTag::hp1_zero;
  if (type == "hp2") return PointTag::hp2_zero;
  if (type == "disc") return PointTag::disc_zero;
  if (type == "komlov") return PointTag::komlov_zero;
  return PointTag::zero;
}

struct RootsArgs {
  std::string in;
  std::string poly;
  std::string tag;
  bool zeta = false;
  bool cloud = false;
  int max_sweeps = kDefaultMaxSweeps;
};

inline int cmd_roots(const Globals& g, const RootsArgs& a) {
  const json src = io::read_json(a.in);
  const std::string type = src.value("type", "");
  std::vector<std::string> names;
  if (!a.poly.empty()) names = io::split_list(a.poly);
  else
    for (auto it = src.at("polynomials").begin(); it != src.at("polynomials").end(); ++it) names.push_back(it.key());
  PointCloud cloud;
  cloud.source = type.empty() ? std::string("roots") : type;
  std::string table = "re,im,residual,name\n";
  for (const auto& name : names) {
    const auto p = io::polynomial_from_json(src, name, g.digits);
    if (p.degree() < 1) continue;
    progress(g, "roots of " + name + " (degree " + std::to_string(p.degree()) + ")");
    const auto rs = find_roots(p, a.max_sweeps);
    if (!rs.converged)
      throw error(errc::no_convergence, "root finder did not converge for " + name + " after " +
                                            std::to_string(rs.iterations) + " sweeps");
    cloud.add(rs.roots, a.tag.empty() ? default_tag(type, name) : parse_point_tag(a.tag));
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
      table += io::format_real(rs.roots[i].real(), g.digits) + "," + io::format_real(rs.roots[i].imag(), g.digits) + "," +
               io::format_real(rs.residuals[i], 6) + "," + name + "\n";
  }
  if (!a.cloud) {
    emit(g, table);
    return 0;
  }
  if (a.zeta) cloud = invert_plane(cloud);
  emit(g, io::cloud_csv(cloud, g.digits));
  return 0;
}

inline int cmd_invert(const Globals& g, const std::string& in) {
  const auto cloud = io::cloud_from_csv(io::read_text(in), g.digits);
  emit(g, io::cloud_csv(invert_plane(cloud), g.digits));
  return 0;
}

// rates

struct RatesArgs {
  std::string model = "zhukovsky";
  std::string A = "2", B = "3";
  std::string zeta;
  std::string mode = "pade";
  std::string orders;
};

inline int cmd_rates(const Globals& g, const RatesArgs& a) {
  if (parse_model_kind(a.model) != ModelKind::zhukovsky_markov)
    throw error(errc::invalid_params, "rate probes are defined for the zhukovsky model only");
  const Scalar zeta = io::parse_complex(a.zeta, g.digits);
  const Real A = io::parse_complex(a.A, g.digits).real(), B = io::parse_complex(a.B, g.digits).real();
  const auto orders = io::parse_int_list(a.orders);
  progress(g, "rates " + a.mode + " at " + a.zeta);
  std::vector<RateRow> rows;
  if (a.mode == "pade") rows = rate_probe_pade(A, B, zeta, orders);
  else if (a.mode == "hp") rows = rate_probe_hp(A, B, zeta, orders);
  else throw error(errc::invalid_params, "unknown mode '" + a.mode + "', expected pade or hp");
  emit(g, io::rates_csv(rows));
  return 0;
}

// katz

struct KatzArgs {
  std::string a, b;
  int budget = 0;
  double tol = 1e-8;
  int digits_required = 8;
  double radius = kClusterRadius;
};

inline int cmd_katz(const Globals& g, const KatzArgs& k) {
  const auto fa = load_series(k.a, g.digits);
  const auto fb = load_series(k.b, g.digits);
  KatzOptions opt;
  opt.tol = k.tol;
  opt.digits_required = k.digits_required;
  opt.cluster_radius = k.radius;
  progress(g, "katz N=" + std::to_string(k.budget));
  const auto r = katz_workflow(fa, fb, k.budget, opt);
  emit(g, io::dump(io::katz_json(r, g.digits)));
  return 0;
}

// run

int run_cli(const std::vector<std::string>& args);

struct ManifestStep {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::string> inputs, outputs;
};

struct RunManifest {
  int digits = kDefaultDigits;
  std::vector<ManifestStep> steps;
};

inline const std::set<std::string>& step_commands() {
  static const std::set<std::string> s{"model", "vdp", "pade", "hp1", "hp2", "disc", "komlov", "roots", "invert", "rates", "katz"};
  return s;
}

/// Parses a manifest and checks that every input exists already or is the
/// output of an earlier step. Relative paths are taken from `base`.
inline RunManifest load_manifest(const std::string& path) {
  const json j = io::read_json(path);
  const std::filesystem::path base = std::filesystem::absolute(path).parent_path();
  RunManifest m;
  try {
    m.digits = j.value("digits", kDefaultDigits);
    for (const auto& s : j.value("steps", json::array())) {
      ManifestStep st;
      st.command = s.at("command").get<std::string>();
      if (!step_commands().count(st.command)) throw error(errc::parse_error, "unknown step command '" + st.command + "'");
      st.args = s.value("args", std::vector<std::string>{});
      st.inputs = s.value("inputs", std::vector<std::string>{});
      st.outputs = s.value("outputs", std::vector<std::string>{});
      m.steps.push_back(std::move(st));
    }
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("malformed manifest: ") + e.what());
  }
  std::set<std::string> produced;
  for (std::size_t i = 0; i < m.steps.size(); ++i) {
    for (const auto& in : m.steps[i].inputs) {
      const auto p = (base / in).lexically_normal().string();
      if (!produced.count(p) && !std::filesystem::exists(p))
        throw error(errc::dangling_reference, "step " + std::to_string(i + 1) + " reads '" + in + "', which nothing provides");
    }
    for (const auto& out : m.steps[i].outputs) produced.insert((base / out).lexically_normal().string());
  }
  return m;
}

inline int cmd_run(const Globals& g, const std::string& path) {
  const RunManifest m = load_manifest(path);
  const auto saved = std::filesystem::current_path();
  std::filesystem::current_path(std::filesystem::absolute(path).parent_path());
  int status = 0;
  for (std::size_t i = 0; i < m.steps.size(); ++i) {
    const auto& st = m.steps[i];
    std::vector<std::string> argv{st.command};
    argv.insert(argv.end(), st.args.begin(), st.args.end());
    bool has_digits = false, has_out = false;
    for (const auto& a : st.args) {
      has_digits = has_digits || a == "--digits";
      has_out = has_out || a == "--out";
    }
    if (!has_digits) argv.insert(argv.end(), {"--digits", std::to_string(m.digits)});
    if (!has_out && st.outputs.size() == 1) argv.insert(argv.end(), {"--out", st.outputs.front()});
    if (g.quiet) argv.push_back("--quiet");
    progress(g, "[" + std::to_string(i + 1) + "/" + std::to_string(m.steps.size()) + "] " + st.command);
    status = run_cli(argv);
    if (status != 0) {
      std::cerr << "step " << i + 1 << " (" << st.command << ") failed\n";
      status = 2;
      break;
    }
  }
  std::filesystem::current_path(saved);
  return status;
}

/// Builds the command-line parser and dispatches one invocation; errors are
/// reported on stderr and mapped to exit codes.
inline int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Pade and Hermite-Pade analysis of power series"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&g](CLI::App* sub) {
    sub->add_option("--digits", g.digits, "working precision in decimal digits");
    sub->add_option("--out", g.out, "output file (default stdout)");
    sub->add_flag("--quiet", g.quiet, "suppress progress on stderr");
  };
  add_globals(&app);
  std::function<int()> action;

  ModelArgs ma;
  auto* model = app.add_subcommand("model", "Taylor coefficients of a model function");
  model->add_option("--kind,--model", ma.model, "six_root, sqrt_pair, log_pair, cube2021, cardano_2016_1, cardano_2016_2, zhukovsky")->required();
  model->add_option("--param,--params", ma.params, "comma separated complex parameters");
  model->add_option("--A", ma.A, "zhukovsky A");
  model->add_option("--B", ma.B, "zhukovsky B");
  model->add_option("--n,--terms", ma.terms, "number of coefficients")->required();
  add_globals(model);
  model->callback([&] { action = [&] { return cmd_model(g, ma); }; });

  int vorder = 0;
  auto* vdp = app.add_subcommand("vdp", "Van der Pol frequency coefficients");
  vdp->add_option("--order", vorder, "number of coefficients nu_1 .. nu_K")->required();
  add_globals(vdp);
  vdp->callback([&] { action = [&] { return cmd_vdp(g, vorder); }; });

  std::string in, mstr, poly_names, tag;
  int n = -1, size = 2;
  auto* pade = app.add_subcommand("pade", "diagonal Pade approximant");
  pade->add_option("--series,--in", in, "series file")->required();
  pade->add_option("--n", n, "order")->required();
  add_globals(pade);
  pade->callback([&] { action = [&] { return cmd_pade(g, in, n); }; });

  auto* hp1 = app.add_subcommand("hp1", "type I Hermite-Pade polynomials");
  hp1->add_option("--series,--in", in, "series file")->required();
  hp1->add_option("--index,--m", mstr, "multi-index, e.g. 20,20,20");
  hp1->add_option("--n", n, "diagonal index");
  hp1->add_option("--size", size, "highest power of f (with --n)");
  add_globals(hp1);
  hp1->callback([&] { action = [&] { return cmd_hp1(g, in, multi_index(mstr, n, size)); }; });

  auto* hp2 = app.add_subcommand("hp2", "type II Hermite-Pade polynomials");
  hp2->add_option("--series,--in", in, "series file")->required();
  hp2->add_option("--n", n, "order")->required();
  hp2->add_option("--tuple,--size", size, "tuple size, 2 or 3");
  add_globals(hp2);
  hp2->callback([&] { action = [&] { return cmd_hp2(g, in, n, size); }; });

  auto* disc = app.add_subcommand("disc", "discriminant of a [1, f, f^2] system");
  disc->add_option("--system,--in", in, "hp1 file, or series file with --index")->required();
  disc->add_option("--index,--m", mstr, "multi-index when the input is a series");
  add_globals(disc);
  disc->callback([&] { action = [&] { return cmd_disc(g, in, mstr); }; });

  auto* komlov = app.add_subcommand("komlov", "Komlov polynomials H0, H1");
  komlov->add_option("--series,--in", in, "series file")->required();
  komlov->add_option("--n", n, "order")->required();
  add_globals(komlov);
  komlov->callback([&] { action = [&] { return cmd_komlov(g, in, n); }; });

  RootsArgs ra;
  auto* roots = app.add_subcommand("roots", "zeros of stored polynomials as CSV");
  roots->add_option("--poly,--in", ra.in, "polynomial file")->required();
  roots->add_option("--name", ra.poly, "comma separated polynomial names (default all)");
  roots->add_flag("--cloud", ra.cloud, "emit a point cloud (re,im,tag,plane,source)");
  roots->add_option("--tag", ra.tag, "override the point tag (cloud output)");
  roots->add_flag("--zeta", ra.zeta, "cloud in the 1/z plane");
  roots->add_option("--max-sweeps", ra.max_sweeps, "Aberth sweep limit");
  add_globals(roots);
  roots->callback([&] { action = [&] { return cmd_roots(g, ra); }; });

  auto* invert = app.add_subcommand("invert", "map a point cloud through z -> 1/z");
  invert->add_option("--in", in, "point cloud CSV")->required();
  add_globals(invert);
  invert->callback([&] { action = [&] { return cmd_invert(g, in); }; });

  RatesArgs rt;
  auto* rates = app.add_subcommand("rates", "convergence rate table for the zhukovsky model");
  rates->add_option("--model", rt.model, "model (zhukovsky)");
  rates->add_option("--A", rt.A, "A");
  rates->add_option("--B", rt.B, "B");
  rates->add_option("--zeta", rt.zeta, "probe point, e.g. 0+2i")->required();
  rates->add_option("--mode", rt.mode, "pade or hp");
  rates->add_option("--orders", rt.orders, "comma separated n (pade) or m (hp)")->required();
  add_globals(rates);
  rates->callback([&] { action = [&] { return cmd_rates(g, rt); }; });

  KatzArgs ka;
  auto* katz = app.add_subcommand("katz", "two-step resonance search on two series");
  katz->add_option("--a", ka.a, "first series file")->required();
  katz->add_option("--b", ka.b, "second series file")->required();
  katz->add_option("--budget", ka.budget, "N = 2n+1 = 3m+2")->required();
  katz->add_option("--tol", ka.tol, "relative matching tolerance");
  katz->add_option("--digits-required", ka.digits_required, "stabilized digits for a candidate");
  katz->add_option("--radius", ka.radius, "clustering radius");
  add_globals(katz);
  katz->callback([&] { action = [&] { return cmd_katz(g, ka); }; });

  std::string manifest;
  auto* run = app.add_subcommand("run", "execute a JSON manifest of steps");
  run->add_option("manifest", manifest, "manifest file")->required();
  add_globals(run);
  run->callback([&] { action = [&] { return cmd_run(g, manifest); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace hpade::cli
