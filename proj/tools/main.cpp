#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ratk/config.hpp"
#include "ratk/errors.hpp"
#include "ratk/invariants.hpp"
#include "ratk/json_io.hpp"
#include "ratk/ktheory.hpp"
#include "ratk/render.hpp"
#include "ratk/shift_model.hpp"

namespace {

using ratk::Json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnresolved = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const std::string& kind, const std::string& message) {
  Json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  emit(j);
  return kExitInputError;
}

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ratk::ValidationError("cannot open '" + path + "'");
  return Json::parse(in);
}

ratk::Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw ratk::ValidationError("expected 're,im', got '" + s + "'");
  }
  return ratk::Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::vector<double> parse_doubles(const std::string& s, size_t expected) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    const std::string tok =
        (comma == std::string::npos) ? s.substr(pos) : s.substr(pos, comma - pos);
    out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected) {
    throw ratk::ValidationError("expected " + std::to_string(expected) +
                                " comma-separated values");
  }
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    const std::string tok =
        (comma == std::string::npos) ? s.substr(pos) : s.substr(pos, comma - pos);
    out.push_back(std::stol(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

ratk::Config load_config(const std::string& path, std::optional<long> max_iter) {
  ratk::Config cfg;
  if (!path.empty()) {
    const Json j = read_json(path);
    const Json tol = j.value("tolerances", Json::object());
    cfg.tol.root_cluster = tol.value("root_cluster", cfg.tol.root_cluster);
    cfg.tol.root_residual = tol.value("root_residual", cfg.tol.root_residual);
    cfg.tol.cycle_merge = tol.value("cycle_merge", cfg.tol.cycle_merge);
    cfg.tol.unit_circle = tol.value("unit_circle", cfg.tol.unit_circle);
    cfg.tol.rational_snap = tol.value("rational_snap", cfg.tol.rational_snap);
    const Json bud = j.value("budgets", Json::object());
    cfg.budget.max_iter = bud.value("max_iter", cfg.budget.max_iter);
    cfg.budget.periodic_point_cap =
        bud.value("periodic_point_cap", cfg.budget.periodic_point_cap);
    cfg.budget.shift_level_cap =
        bud.value("shift_level_cap", cfg.budget.shift_level_cap);
    if (cfg.tol.root_cluster <= 0 || cfg.tol.cycle_merge <= 0 ||
        cfg.tol.unit_circle <= 0 || cfg.tol.rational_snap <= 0) {
      throw ratk::ValidationError("tolerances must be positive");
    }
    if (cfg.budget.max_iter < 100 || cfg.budget.shift_level_cap < 1) {
      throw ratk::ValidationError("budgets below the documented minima");
    }
  }
  if (max_iter) cfg.budget.max_iter = *max_iter;
  return cfg;
}

struct AnalyzeInputs {
  std::string map_file;
  std::string quadratic_c;

  ratk::RationalMap load(const ratk::Tolerances& tol) const {
    if (!quadratic_c.empty()) {
      return ratk::RationalMap::quadratic(parse_complex(quadratic_c), tol);
    }
    if (!map_file.empty()) return ratk::map_from_json(read_json(map_file), tol);
    throw ratk::ValidationError("provide --map or --quadratic-c");
  }
};

int run_analyze(const AnalyzeInputs& in, const ratk::Config& cfg) {
  const ratk::RationalMap r = in.load(cfg.tol);
  Json report;
  report["map"] = ratk::to_json(r);

  const auto cps = ratk::critical_points(r);
  report["critical_points"] = Json::array();
  for (const auto& cp : cps) report["critical_points"].push_back(ratk::to_json(cp));

  const ratk::FatouSpec spec = ratk::fatou_census(r, cfg);
  report["fatou_spec"] = ratk::to_json(spec);

  Json k;
  k["sphere"] = ratk::to_json(ratk::k_sphere(r.degree(), static_cast<long>(cps.size())));
  k["fatou"] = ratk::to_json(ratk::k_fatou(spec.c_fatou, spec.f(), spec.h()));
  if (spec.complete) {
    k["julia"] = ratk::to_json(ratk::k_julia(spec));
  } else {
    k["julia"] = nullptr;
  }
  report["k_theory"] = std::move(k);
  report["omega"] = ratk::omega(spec);
  emit(report);
  return spec.complete ? kExitOk : kExitUnresolved;
}

int run_ktheory(const AnalyzeInputs& in, const std::string& spec_file,
                const ratk::Config& cfg) {
  ratk::FatouSpec spec;
  if (!spec_file.empty()) {
    spec = ratk::fatou_spec_from_json(read_json(spec_file));
  } else {
    spec = ratk::fatou_census(in.load(cfg.tol), cfg);
  }
  Json out;
  out["sphere"] = ratk::to_json(
      ratk::k_sphere(spec.degree, std::max<long>(2, spec.c_julia + spec.c_fatou)));
  out["fatou"] = ratk::to_json(ratk::k_fatou(spec.c_fatou, spec.f(), spec.h()));
  if (spec.provenance != ratk::Provenance::Computed || spec.complete) {
    out["julia"] = ratk::to_json(ratk::k_julia(spec));
  } else {
    out["julia"] = nullptr;
  }
  emit(out);
  return (spec.provenance != ratk::Provenance::Computed || spec.complete)
             ? kExitOk
             : kExitUnresolved;
}

int run_quad(const std::string& c_str, const ratk::Config& cfg) {
  const ratk::QuadVerdict v = ratk::classify_quadratic(parse_complex(c_str), cfg);
  emit(ratk::to_json(v));
  return v.verdict == ratk::QuadCase::Unresolved ? kExitUnresolved : kExitOk;
}

int run_graph(const std::string& graph_file, bool table) {
  if (table) {
    Json rows = Json::array();
    for (const auto& row : ratk::builtin_table()) {
      Json r;
      r["region"] = row.region;
      r["algebra"] = ratk::to_string(row.algebra);
      r["graph"] = ratk::to_json(row.graph);
      const ratk::GraphKTheory k = ratk::graph_k_theory(row.graph);
      r["k0"] = ratk::to_json(k.k0);
      r["k1"] = ratk::to_json(k.k1);
      rows.push_back(std::move(r));
    }
    emit(rows);
    return kExitOk;
  }
  if (graph_file.empty()) {
    throw ratk::ValidationError("provide --graph FILE or --table");
  }
  const ratk::DirectedGraph g = ratk::graph_from_json(read_json(graph_file));
  const ratk::GraphKTheory k = ratk::graph_k_theory(g);
  Json out;
  out["graph"] = ratk::to_json(g);
  out["k0"] = ratk::to_json(k.k0);
  out["k1"] = ratk::to_json(k.k1);
  emit(out);
  return kExitOk;
}

int run_invariants_tuple(const std::string& tuple_str, long nmax) {
  const ratk::CycleLengthTuple tuple{parse_longs(tuple_str)};
  Json out;
  out["tuple"] = tuple.entries();
  out["nmax"] = nmax;
  out["sequence"] = ratk::fatou_count_sequence(tuple, nmax);
  emit(out);
  return kExitOk;
}

int run_invariants_lemma(long max_len, long max_val) {
  const ratk::InjectivityReport report = ratk::lemma_number_bruteforce(max_len, max_val);
  Json out;
  out["tuple_count"] = report.tuple_count;
  out["injective"] = report.injective;
  out["max_distinguishing_n"] = report.max_distinguishing_n;
  out["hardest_pair"] = Json::array({report.lhs_of_worst, report.rhs_of_worst});
  emit(out);
  return kExitOk;
}

int run_shift(int level, const ratk::Config& cfg) {
  const ratk::ShiftInvariants inv = ratk::id_minus_phi_invariants(level, cfg);
  Json out;
  out["k"] = level;
  out["det"] = inv.det.fits_slong_p() ? Json(inv.det.get_si()) : Json(inv.det.get_str());
  out["kernel_rank"] = inv.kernel_rank;
  out["cokernel"] = ratk::to_json(inv.cokernel);
  emit(out);
  return kExitOk;
}

int run_render(const std::string& rect_str, long width, long height,
               const std::string& mode, const std::string& c_str, long max_iter,
               const std::string& out_path) {
  const auto rect = parse_doubles(rect_str, 4);
  ratk::RenderSpec spec;
  spec.x0 = rect[0];
  spec.y0 = rect[1];
  spec.x1 = rect[2];
  spec.y1 = rect[3];
  spec.width = width;
  spec.height = height;
  spec.max_iter = max_iter;
  if (mode == "parameter") {
    spec.mode = ratk::RenderSpec::Mode::Parameter;
  } else if (mode == "dynamic") {
    spec.mode = ratk::RenderSpec::Mode::Dynamic;
    spec.c = parse_complex(c_str.empty() ? "0,0" : c_str);
  } else {
    throw ratk::ValidationError("mode must be 'parameter' or 'dynamic'");
  }
  const std::vector<unsigned char> bytes = ratk::render_ppm(spec);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ratk::ValidationError("cannot write '" + out_path + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  Json summary;
  summary["written"] = out_path;
  summary["bytes"] = bytes.size();
  emit(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theory invariants of the C*-algebras of rational maps"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<long> max_iter;
  bool json_flag = false;
  app.add_option("--config", config_path, "JSON config with tolerances and budgets");
  app.add_option("--max-iter", max_iter, "orbit iteration budget override");
  app.add_flag("--json", json_flag, "emit JSON (always on; accepted for scripts)");

  AnalyzeInputs analyze_in;
  auto* analyze = app.add_subcommand("analyze", "full critical/Fatou/K-theory report");
  analyze->add_option("--map", analyze_in.map_file, "map JSON file ('-' for stdin)");
  analyze->add_option("--quadratic-c", analyze_in.quadratic_c, "shorthand for z^2+c");
  analyze->add_option("--max-iter", max_iter, "orbit iteration budget");

  AnalyzeInputs ktheory_in;
  std::string spec_file;
  auto* ktheory = app.add_subcommand("ktheory", "K-theory from a Fatou spec or map");
  ktheory->add_option("--spec", spec_file, "FatouSpec JSON file");
  ktheory->add_option("--map", ktheory_in.map_file, "map JSON file to census first");
  ktheory->add_option("--quadratic-c", ktheory_in.quadratic_c, "shorthand for z^2+c");

  std::string quad_c;
  auto* quad = app.add_subcommand("quad", "classify a quadratic parameter");
  quad->add_option("--c", quad_c, "parameter as re,im")->required();
  quad->add_option("--max-iter", max_iter, "orbit iteration budget");

  std::string graph_file;
  bool graph_table = false;
  auto* graph = app.add_subcommand("graph", "graph-algebra K-theory");
  graph->add_option("--graph", graph_file, "graph JSON file");
  graph->add_flag("--table", graph_table, "emit the builtin four-row table");

  std::string tuple_str;
  long nmax = 12;
  bool verify_lemma = false;
  long max_len = 3, max_val = 8;
  auto* invariants = app.add_subcommand("invariants", "cycle-length invariants");
  invariants->add_option("--tuple", tuple_str, "cycle lengths, e.g. 1,2,2");
  invariants->add_option("--nmax", nmax, "sequence horizon");
  invariants->add_flag("--verify-lemma", verify_lemma, "exhaustive injectivity check");
  invariants->add_option("--max-len", max_len, "tuple length cap for the check");
  invariants->add_option("--max-val", max_val, "entry cap for the check");
  int shift_level = 1;
  auto* shift = invariants->add_subcommand("shift", "id minus transfer at level k");
  shift->add_option("--k", shift_level, "cylinder level")->required();

  std::string rect_str = "-2.0,-1.5,1.0,1.5";
  long width = 64, height = 64;
  std::string mode = "parameter";
  std::string render_c;
  long render_iter = 256;
  std::string out_path = "render.ppm";
  auto* render = app.add_subcommand("render", "escape-time PPM image");
  render->add_option("--rect", rect_str, "x0,y0,x1,y1");
  render->add_option("--width", width, "pixels");
  render->add_option("--height", height, "pixels");
  render->add_option("--mode", mode, "parameter | dynamic");
  render->add_option("--c", render_c, "dynamic-plane parameter re,im");
  render->add_option("--iters", render_iter, "escape budget");
  render->add_option("--out", out_path, "output PPM path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const ratk::Config cfg = load_config(config_path, max_iter);
    if (analyze->parsed()) return run_analyze(analyze_in, cfg);
    if (ktheory->parsed()) return run_ktheory(ktheory_in, spec_file, cfg);
    if (quad->parsed()) return run_quad(quad_c, cfg);
    if (graph->parsed()) return run_graph(graph_file, graph_table);
    if (invariants->parsed()) {
      if (shift->parsed()) return run_shift(shift_level, cfg);
      if (verify_lemma) return run_invariants_lemma(max_len, max_val);
      if (!tuple_str.empty()) return run_invariants_tuple(tuple_str, nmax);
      throw ratk::ValidationError("provide --tuple, --verify-lemma, or the shift mode");
    }
    if (render->parsed()) {
      return run_render(rect_str, width, height, mode, render_c,
                        max_iter.value_or(render_iter), out_path);
    }
  } catch (const Json::parse_error& e) {
    return emit_error("parse", e.what());
  } catch (const ratk::IncompleteSpec& e) {
    emit_error("incomplete", e.what());
    return kExitUnresolved;
  } catch (const ratk::ValidationError& e) {
    return emit_error("validation", e.what());
  } catch (const ratk::Error& e) {
    return emit_error("computation", e.what());
  } catch (const std::exception& e) {
    return emit_error("internal", e.what());
  }
  return kExitInputError;
}
