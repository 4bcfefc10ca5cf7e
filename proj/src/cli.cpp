#include "rhombus/cli.hpp"

#include "rhombus/error.hpp"
#include "rhombus/json_io.hpp"
#include "rhombus/render.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <regex>
#include <sstream>

namespace rhombus {

namespace {

// Input problems tied to one flag; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SlopeSource {
  std::string preset;
  std::string file;

  void add(CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "golden | ammann-beenker | penrose | cubic");
    auto* f = cmd->add_option("--slope", file, "slope JSON file")->check(CLI::ExistingFile);
    p->excludes(f);
  }
  bool given() const { return !preset.empty() || !file.empty(); }
  SlopeSpec load() const {
    if (!preset.empty()) {
      try {
        return presets::by_name(preset);
      } catch (const Error& e) {
        throw UsageError("--preset: " + std::string(e.what()));
      }
    }
    if (file.empty()) throw UsageError("--preset or --slope is required");
    try {
      return slope_from_json(read_json_file(file));
    } catch (const Error& e) {
      throw UsageError("--slope: " + std::string(e.what()));
    }
  }
};

Json load_file(const std::string& flag, const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") out << text;
  else write_text_file(path, text);
}

std::vector<std::size_t> parse_indices(const std::string& flag, const std::string& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const long k = std::stol(item);
      if (k < 1 || static_cast<std::size_t>(k) > n) throw UsageError(flag + ": index " + item + " out of range");
      out.push_back(static_cast<std::size_t>(k - 1));
    } catch (const std::logic_error&) {
      throw UsageError(flag + ": cannot parse '" + text + "'");
    }
  }
  return out;
}

Eigen::VectorXd parse_offset(const std::string& text, std::size_t dim) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      xs.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw UsageError("--offset: cannot parse '" + text + "'");
    }
  }
  if (xs.size() != dim) throw UsageError("--offset: expected " + std::to_string(dim) + " values");
  return Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::vector<double> lift_norms(const SlopeSpec& s, const std::vector<ShadowPeriods>& shadows) {
  std::vector<double> out;
  for (const auto& sh : shadows)
    for (const auto& p : sh.periods) try {
        out.push_back(lift_subperiod(s, p).norm());
      } catch (const Error&) {
      }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar rhombus tilings: Grassmann algebra, subperiods, patches, thickness, atlases"};
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;

  // slope-info
  auto* info = app.add_subcommand("slope-info", "Grassmann coordinates, Plücker check, tile frequencies");
  SlopeSource info_src;
  info_src.add(info);
  std::size_t info_nfold = 0;
  info->add_option("--nfold", info_nfold, "use the n-fold slope instead")->check(CLI::Range(4, 1000));
  info->add_option("-o,--out", out_path, "output file (default stdout)");

  // subperiods
  auto* sub = app.add_subcommand("subperiods", "subperiods of every shadow, lifts, Levitov condition");
  SlopeSource sub_src;
  sub_src.add(sub);
  bool sub_numeric = false;
  int sub_bound = 6;
  sub->add_flag("--numeric", sub_numeric, "heuristic search on floating coordinates");
  sub->add_option("--bound", sub_bound, "entry bound for --numeric")->check(CLI::Range(1, 50));
  sub->add_option("-o,--out", out_path, "output file (default stdout)");

  // system
  auto* sys = app.add_subcommand("system", "classify subperiod relations plus Plücker relations");
  SlopeSource sys_src;
  sys_src.add(sys);
  std::string sys_pivot;
  sys->add_option("--pivot", sys_pivot, "free coordinate set to 1, e.g. G13");
  sys->add_option("-o,--out", out_path, "output file (default stdout)");

  // nfold
  auto* nf = app.add_subcommand("nfold", "Chebyshev analysis of the n-fold system");
  std::size_t nf_n = 0;
  nf->add_option("n", nf_n, "symmetry order")->required()->check(CLI::Range(4, 200));
  nf->add_option("-o,--out", out_path, "output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "canonical cut-and-project patch");
  SlopeSource gen_src;
  gen_src.add(gen);
  double gen_radius = 10.0;
  std::string gen_offset, gen_render;
  gen->add_option("--radius", gen_radius, "patch radius in the slope")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "seed of the window offset");
  gen->add_option("--offset", gen_offset, "explicit offset in E-perp, comma separated");
  gen->add_option("--render", gen_render, "also write an SVG");
  gen->add_option("-o,--out", out_path, "patch JSON (default stdout)");

  // thickness
  auto* th = app.add_subcommand("thickness", "thickness of a lift or cloud relative to a slope");
  SlopeSource th_src;
  th_src.add(th);
  std::string th_cloud;
  bool th_raw = false;
  th->add_option("--cloud", th_cloud, "patch JSON or array of points")->required()->check(CLI::ExistingFile);
  th->add_flag("--raw", th_raw, "treat a patch as a raw cloud (no t >= 1 floor)");
  th->add_option("-o,--out", out_path, "output file (default stdout)");

  // atlas
  auto* at = app.add_subcommand("atlas", "r-atlas of a patch, optionally a containment test");
  std::string at_patch, at_against;
  double at_r = 1.0;
  at->add_option("--patch", at_patch, "patch JSON")->required()->check(CLI::ExistingFile);
  at->add_option("--r", at_r, "disk diameter in edge lengths")->check(CLI::PositiveNumber);
  at->add_option("--contains", at_against, "patch or atlas JSON whose atlas must be contained")
      ->check(CLI::ExistingFile);
  at->add_option("-o,--out", out_path, "output file (default stdout)");

  // levitov-surface
  auto* lv = app.add_subcommand("levitov-surface", "sample the surface S_{f,g}");
  SlopeSource lv_src;
  lv_src.add(lv);
  std::string lv_other, lv_f = "cubic", lv_g = "cubic";
  std::size_t lv_root = 0;
  double lv_radius = 10.0, lv_step = 0.5;
  lv->add_option("--other", lv_other, "slope JSON for E' (default: conjugate of E)")->check(CLI::ExistingFile);
  lv->add_option("--root", lv_root, "which conjugate to use for E'");
  lv->add_option("--f", lv_f, "zero | linear | cubic | staircase");
  lv->add_option("--g", lv_g, "zero | linear | cubic | staircase");
  lv->add_option("--radius", lv_radius, "bound on |lambda|, |mu|")->check(CLI::PositiveNumber);
  lv->add_option("--step", lv_step, "grid step")->check(CLI::PositiveNumber);
  lv->add_option("-o,--out", out_path, "output file (default stdout)");

  // intersect
  auto* ix = app.add_subcommand("intersect", "vectors whose projections lie in given planes");
  SlopeSource ix_src;
  ix_src.add(ix);
  std::vector<std::string> ix_proj;
  std::string ix_file;
  ix->add_option("--project", ix_proj, "index subset of the slope, e.g. 1,2,3,5 (repeatable)");
  ix->add_option("--constraints", ix_file, "JSON [{\"indices\":[...],\"slope\":{...}}]")->check(CLI::ExistingFile);
  ix->add_option("-o,--out", out_path, "output file (default stdout)");

  // render
  auto* rd = app.add_subcommand("render", "SVG of a patch");
  std::string rd_patch;
  RenderOptions ropt;
  std::vector<double> rd_circles;
  std::vector<std::string> rd_fills;
  rd->add_option("--patch", rd_patch, "patch JSON")->required()->check(CLI::ExistingFile);
  rd->add_option("--edge-px", ropt.edge_px, "edge length in pixels")->check(CLI::PositiveNumber);
  rd->add_option("--stroke-width", ropt.stroke_width, "outline width")->check(CLI::NonNegativeNumber);
  rd->add_option("--circle", rd_circles, "overlay circle of this diameter at the origin (repeatable)")
      ->check(CLI::PositiveNumber);
  rd->add_option("--fill", rd_fills, "tile colour, e.g. 1,3=#ff8800 (repeatable)");
  rd->add_option("-o,--out", out_path, "SVG file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (info->parsed()) {
      Json j;
      SlopeSpec s;
      if (info_nfold) {
        s = nfold_slope(info_nfold).slope;
      } else {
        s = info_src.load();
      }
      const Grassmann g = grassmann(s);
      j["slope"] = to_json(s);
      j["grassmann"] = to_json(g);
      j["normalized"] = to_json(g.normalized());
      const auto viol = plucker_check(g);
      Json pl;
      pl["ok"] = viol.empty();
      Json vs = Json::array();
      for (const auto& v : viol)
        vs.push_back({{"quad", Json::array({v.quad[0] + 1, v.quad[1] + 1, v.quad[2] + 1, v.quad[3] + 1})},
                      {"residual", v.residual}});
      pl["violations"] = vs;
      j["plucker"] = pl;
      j["frequencies"] = to_json(frequencies(g), g);
      emit(j, out_path, out);
    } else if (sub->parsed()) {
      const SlopeSpec s = sub_src.load();
      Json j;
      std::vector<ShadowPeriods> shadows;
      if (sub_numeric || !s.is_exact()) {
        shadows = subperiods_numeric(s, sub_bound);
        j["heuristic"] = true;
      } else {
        shadows = subperiods(s);
      }
      j["shadows"] = subperiod_report(s, shadows);
      std::size_t total = 0;
      for (const auto& sh : shadows) total += sh.count();
      j["count"] = total;
      if (s.is_exact()) {
        const auto norms = lift_norms(s, shadows);
        if (!norms.empty()) j["max_lift_norm"] = *std::max_element(norms.begin(), norms.end());
        if (s.n == 4) {
          try {
            const LevitovVerdict v = levitov_condition(s);
            j["levitov"] = {{"holds", v.holds}, {"reason", v.reason}};
          } catch (const Error& e) {
            j["levitov"] = {{"holds", false}, {"reason", e.what()}};
          }
        }
      }
      emit(j, out_path, out);
    } else if (sys->parsed()) {
      const SlopeSpec s = sys_src.load();
      if (!s.is_exact()) throw UsageError("--slope: system needs an exact slope");
      const LinearRelationSet rel = subperiod_relations(all_subperiods(subperiods(s)), s.n);
      ReducedSystem r;
      if (!sys_pivot.empty()) {
        std::size_t pivot = pair_count(s.n);
        for (std::size_t c = 0; c < pair_count(s.n); ++c)
          if (coordinate_name(s.n, c) == sys_pivot) pivot = c;
        if (pivot == pair_count(s.n)) throw UsageError("--pivot: unknown coordinate '" + sys_pivot + "'");
        try {
          r = classify_chart(rel, pivot);
        } catch (const Error& e) {
          throw UsageError("--pivot: " + std::string(e.what()));
        }
      } else {
        r = s.n == 4 ? classify_codim2(rel) : classify(rel);
      }
      emit(to_json(r), out_path, out);
    } else if (nf->parsed()) {
      emit(to_json(nfold_system(nf_n)), out_path, out);
    } else if (gen->parsed()) {
      const SlopeSpec s = gen_src.load();
      Patch p;
      if (!gen_offset.empty()) {
        p = generate_patch(s, parse_offset(gen_offset, s.n - 2), gen_radius);
      } else {
        p = generate_patch(s, gen_radius, seed);
      }
      emit(to_json(p), out_path, out);
      if (!gen_render.empty()) write_text_file(gen_render, to_svg(p));
    } else if (th->parsed()) {
      const Json cj = load_file("--cloud", th_cloud);
      LiftCloud cloud;
      SlopeSpec s;
      bool tiling = false;
      try {
        cloud = cloud_from_json(cj);
      } catch (const Error& e) {
        throw UsageError("--cloud: " + std::string(e.what()));
      }
      if (th_src.given()) {
        s = th_src.load();
      } else if (cj.is_object() && cj.contains("slope")) {
        s = slope_from_json(cj.at("slope"));
      } else {
        throw UsageError("--preset or --slope is required for a bare cloud");
      }
      if (cj.is_object() && cj.contains("tiles")) tiling = !th_raw;
      if (cloud.n != s.n) throw UsageError("--cloud: points have dimension " + std::to_string(cloud.n) +
                                           ", slope has " + std::to_string(s.n));
      emit(to_json(thickness(cloud, s, tiling)), out_path, out);
    } else if (at->parsed()) {
      const Patch p = patch_from_json(load_file("--patch", at_patch));
      const Atlas a = r_atlas(p, at_r);
      Json j = to_json(a);
      if (!at_against.empty()) {
        const Json other = load_file("--contains", at_against);
        const Atlas b = other.contains("patterns") ? atlas_from_json(other) : r_atlas(patch_from_json(other), at_r);
        const Containment c = atlas_contains(a, b);
        Json cj;
        cj["contains"] = c.contains;
        Json miss = Json::array();
        for (const auto& m : c.missing) {
          Json tiles = Json::array();
          for (const auto& t : m.tiles) tiles.push_back(to_json(t));
          miss.push_back(tiles);
        }
        cj["missing"] = miss;
        j["containment"] = cj;
      }
      emit(j, out_path, out);
    } else if (lv->parsed()) {
      const SlopeSpec e = lv_src.load();
      const SlopeSpec ep = lv_other.empty() ? conjugate_slope(e, lv_root)
                                            : slope_from_json(load_file("--other", lv_other));
      SurfaceFunction f, g;
      try {
        f = SurfaceFunction::parse(lv_f);
      } catch (const Error& x) {
        throw UsageError("--f: " + std::string(x.what()));
      }
      try {
        g = SurfaceFunction::parse(lv_g);
      } catch (const Error& x) {
        throw UsageError("--g: " + std::string(x.what()));
      }
      const LevitovSurface surf = levitov_surface(e, ep, f, g, lv_radius, lv_step);
      Json j;
      j["f"] = surf.f.name();
      j["g"] = surf.g.name();
      j["radius"] = surf.radius;
      j["step"] = surf.step;
      Json shadows = Json::array();
      for (const auto* p : {&surf.p1, &surf.p2}) {
        const PeriodicityCheck c = check_shadow_period(surf.cloud, p->indices, p->vector);
        Json sj;
        sj["shadow"] = Json::array({p->indices[0] + 1, p->indices[1] + 1, p->indices[2] + 1});
        sj["period"] = Json::array({p->vector[0].get_si(), p->vector[1].get_si(), p->vector[2].get_si()});
        sj["matched"] = c.matched;
        sj["violations"] = c.violations;
        sj["periodic"] = c.periodic;
        shadows.push_back(sj);
      }
      j["designated_shadows"] = shadows;
      j["thickness"] = thickness(surf.cloud, e).raw;
      j["points"] = to_json(surf.cloud);
      emit(j, out_path, out);
    } else if (ix->parsed()) {
      std::vector<LiftConstraint> cons;
      std::size_t n = 0;
      if (!ix_file.empty()) {
        const Json j = load_file("--constraints", ix_file);
        if (!j.is_array()) throw UsageError("--constraints: expected an array");
        for (const auto& c : j) {
          LiftConstraint lc;
          try {
            for (const auto& k : c.at("indices")) {
              const long x = k.get<long>();
              if (x < 1) throw UsageError("--constraints: indices are 1-based");
              lc.indices.push_back(static_cast<std::size_t>(x - 1));
              n = std::max(n, static_cast<std::size_t>(x));
            }
            lc.slope = slope_from_json(c.at("slope"));
          } catch (const Json::exception& e) {
            throw UsageError("--constraints: " + std::string(e.what()));
          } catch (const Error& e) {
            throw UsageError("--constraints: " + std::string(e.what()));
          }
          cons.push_back(std::move(lc));
        }
      } else {
        const SlopeSpec s = ix_src.load();
        if (ix_proj.empty()) throw UsageError("--project is required with --preset/--slope");
        n = s.n;
        for (const auto& text : ix_proj) {
          LiftConstraint lc;
          lc.indices = parse_indices("--project", text, s.n);
          lc.slope = s.restrict_to(lc.indices);
          cons.push_back(std::move(lc));
        }
      }
      emit(to_json(intersect_lifted_slopes(n, cons)), out_path, out);
    } else if (rd->parsed()) {
      const Patch p = patch_from_json(load_file("--patch", rd_patch));
      for (double d : rd_circles) ropt.circles.push_back(Circle{Eigen::Vector2d::Zero(), d});
      static const std::regex fill_re(R"((\d+),(\d+)=(.+))");
      for (const auto& f : rd_fills) {
        std::smatch m;
        if (!std::regex_match(f, m, fill_re)) throw UsageError("--fill: expected i,j=colour, got '" + f + "'");
        const std::size_t i = std::stoul(m[1]), k = std::stoul(m[2]);
        if (i < 1 || k <= i || k > p.n) throw UsageError("--fill: (" + m[1].str() + "," + m[2].str() + ") is not a tile type");
        if (!is_color(m[3])) throw UsageError("--fill: '" + m[3].str() + "' is not a colour");
        ropt.fills[{i - 1, k - 1}] = m[3];
      }
      const std::string svg = to_svg(p, ropt);
      if (out_path.empty() || out_path == "-") out << svg;
      else write_text_file(out_path, svg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (e.code() == Errc::parse_error || e.code() == Errc::invalid_argument) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace rhombus
