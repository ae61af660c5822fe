// Command-line front end: construct, render, analyze, verify.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semijulia/semijulia.hpp"

using namespace semijulia;

namespace {

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "expected a number or re,im: '" + s + "'");
  }
}

std::vector<std::size_t> parse_prefix(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::size_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--prefix: bad index '" + item + "'");
    }
  }
  return out;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct ConstructOpts {
  std::string a = "1", b = "0.25", out;
  int k = 2, j = 2, m1 = 2, m2 = 2, depth = 12;
  int hm2 = 5, m3 = 0, m4 = 0, kk = 2;
  int nm1 = 1, nm2 = 1;
  double c = 0.1;
};

struct RenderOpts {
  std::string gens, algo = "survivor", grid, prefix, out;
  int view = 0, iters = 40, word_length = 6, word_iters = 200;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

struct AnalyzeOpts {
  std::string gens, raster, khat, anchor, out;
  int dilation = 1;
};

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(out, j);
}

int run_construct(const std::string& which, const ConstructOpts& o) {
  Json spec{{"name", which}};
  if (which == "cantor") {
    const Complex a = parse_complex(o.a), b = parse_complex(o.b);
    spec.update({{"a", complex_to_json(a)}, {"b", complex_to_json(b)}, {"k", o.k}, {"j", o.j},
                 {"m1", o.m1}, {"m2", o.m2}});
  } else if (which == "figure1") {
    spec["depth"] = o.depth;
  } else if (which == "hmin-not") {
    spec["m2"] = o.hm2;
    if (o.m3 > 0) spec["m3"] = o.m3;
  } else if (which == "k-components") {
    spec.update({{"k", o.kk}, {"m2", o.hm2}});
    if (o.m3 > 0 && o.m4 > 0) spec.update({{"m3", o.m3}, {"m4", o.m4}});
  } else {
    spec.update({{"c", o.c}, {"m1", o.nm1}, {"m2", o.nm2}});
  }
  const auto res = construction_from_json(spec);
  Json j = construction_to_json(res);
  j["parameters"] = spec;
  emit(j, o.out);
  std::cerr << res.name << ": " << res.gens.size() << " generators, "
            << res.assumption_checks.size() << " assumption checks passed\n";
  return 0;
}

int run_render(const RenderOpts& o) {
  const Json doc = read_json_file(o.gens);
  const GeneratorSet gens = generators_from_json(doc);
  GridSpec grid;
  if (!o.grid.empty()) {
    try {
      grid = parse_grid(o.grid);
    } catch (const std::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("--grid: ") + e.what());
    }
  } else {
    if (o.view <= 0 || !doc.contains("view"))
      throw Error(ErrorKind::InvalidArgument, "--grid is required unless --view is used with a construction file");
    grid = GridSpec::square(complex_from_json(doc["view"]["center"], "view.center"),
                            doc["view"]["half"].get<double>(), o.view);
  }
  RenderParams p;
  p.iters = o.iters;
  p.samples = o.samples;
  p.seed = o.seed;
  p.word_length = o.word_length;
  p.word_iters = o.word_iters;
  if (o.algo == "fiberwise") p.prefix = parse_prefix(o.prefix);
  Stopwatch sw;
  const RasterSet r = render_julia(gens, o.algo, grid, p);
  write_pgm(o.out, r);
  std::cout << "wrote " << o.out << ": " << r.count() << " pixels, grid " << format_grid(grid)
            << ", algo " << o.algo << ", iters " << p.iters << ", samples " << p.samples
            << ", seed " << p.seed << "\n";
  std::cerr << "render took " << sw.seconds() << " s\n";
  return 0;
}

int run_analyze(const std::string& what, const AnalyzeOpts& o) {
  const RasterSet julia = read_pgm(o.raster);
  const auto labels = label_components(julia);
  std::optional<GeneratorSet> gens;
  if (!o.gens.empty()) gens = generators_from_json(read_json_file(o.gens));
  auto khat = [&]() -> RasterSet {
    if (!o.khat.empty()) return read_pgm(o.khat);
    if (!gens) throw Error(ErrorKind::InvalidArgument, "this analysis needs --gens or --khat");
    return smallest_filled_julia(*gens, julia.grid(), 60);
  };
  Json j;
  if (what == "components") {
    j = components_to_json(labels);
  } else if (what == "order") {
    if (!o.anchor.empty()) {
      const auto ord = order_components(labels, parse_complex(o.anchor));
      j = components_to_json(labels, &ord);
    } else {
      const auto ext = find_jmin_jmax(labels, julia, khat());
      j = components_to_json(labels, &ext.order, &ext);
    }
  } else if (what == "classify") {
    Json list = Json::array();
    std::map<std::string, int> tally;
    for (const auto& f : classify_fatou_components(julia, o.dilation)) {
      list.push_back({{"id", f.id}, {"kind", to_string(f.kind)}, {"holes", f.holes},
                      {"unbounded", f.unbounded}, {"pixels", f.pixels}});
      ++tally[to_string(f.kind)];
    }
    j = {{"grid", format_grid(julia.grid())}, {"dilation", o.dilation}, {"counts", tally},
         {"regions", std::move(list)}};
  } else {
    if (!gens) throw Error(ErrorKind::InvalidArgument, "containment needs --gens");
    std::optional<ExtremeComponents> ext;
    try {
      ext = find_jmin_jmax(labels, julia, khat());
    } catch (const Error& e) {
      std::cerr << "J_min/J_max unavailable: " << e.what() << "\n";
    }
    const auto rep = containment_report(labels, generator_julia_rasters(*gens, julia.grid()), ext);
    Json comps = Json::array();
    for (const auto& c : rep.components) {
      Json names = Json::array();
      for (auto g : c.generators) names.push_back((*gens)[g].name);
      comps.push_back({{"id", c.id}, {"generators", names}, {"star", c.star}, {"star_lambda", c.star_lambda}});
    }
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(); };
    Json bmin = Json::array();
    for (auto g : rep.b_min) bmin.push_back((*gens)[g].name);
    j = {{"grid", format_grid(julia.grid())},
         {"components", std::move(comps)},
         {"jmin", ext ? Json(ext->jmin) : Json()},
         {"jmax", ext ? Json(ext->jmax) : Json()},
         {"m_prime_host", opt(rep.m_prime_host)},
         {"m_double_prime_host", opt(rep.m_double_prime_host)},
         {"jmin_contains_m_prime", opt(rep.jmin_contains_m_prime)},
         {"jmax_contains_m_double_prime", opt(rep.jmax_contains_m_double_prime)},
         {"b_min", std::move(bmin)}};
  }
  emit(j, o.out);
  std::cerr << what << ": " << labels.count << " components\n";
  return 0;
}

int run_verify(const std::string& config, const std::string& out) {
  Stopwatch sw;
  const Report rep = run_suite(read_json_file(config));
  if (!out.empty()) write_json_file(out, rep.to_json());
  for (const auto& c : rep.checks)
    std::cerr << "  " << to_string(c.verdict) << "  " << c.name << "  metric " << c.metric
              << " threshold " << c.threshold << "  (" << c.elapsed_s << " s)\n";
  std::cout << "suite " << rep.suite << ": " << (rep.pass() ? "pass" : "fail") << " ("
            << rep.checks.size() << " checks, " << sw.seconds() << " s)\n";
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Julia sets of finitely generated polynomial semigroups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker cap (0 = all cores)");

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build a generator set and write its JSON");
  construct->require_subcommand(1);
  std::string construct_kind;
  auto* cantor = construct->add_subcommand("cantor", "two monomials with round nested Julia circles");
  cantor->add_option("--a", co.a, "coefficient of f1 (re or re,im)");
  cantor->add_option("--b", co.b, "coefficient of f2 (re or re,im)");
  cantor->add_option("--k", co.k, "degree of f1");
  cantor->add_option("--j", co.j, "degree of f2");
  cantor->add_option("--m1", co.m1, "iterate of f1");
  cantor->add_option("--m2", co.m2, "iterate of f2");
  auto* fig1 = construct->add_subcommand("figure1", "quartic pair with a disconnected Julia set");
  fig1->add_option("--depth", co.depth, "postcritical check depth");
  auto* hmin = construct->add_subcommand("hmin-not", "three maps where J_min holds no generator Julia set");
  hmin->add_option("--m2", co.hm2, "iterate of z^2/sqrt(2)");
  hmin->add_option("--m3", co.m3, "iterate of the circle map (0 = smallest that works)");
  auto* kcomp = construct->add_subcommand("k-components", "four maps with exactly k Julia components");
  kcomp->add_option("--k", co.kk, "number of components (>= 2)");
  kcomp->add_option("--m2", co.hm2, "iterate of z^2/sqrt(2)");
  kcomp->add_option("--m3", co.m3, "iterate of h3 (0 = sweep)");
  kcomp->add_option("--m4", co.m4, "iterate of h4 (0 = sweep)");
  auto* nothyp = construct->add_subcommand("nothyp", "pair whose critical value lies on a Julia set");
  nothyp->add_option("--c", co.c, "parameter in (0, 1/4)");
  nothyp->add_option("--m1", co.nm1, "iterate of z^2 + c");
  nothyp->add_option("--m2", co.nm2, "iterate of the circle map");
  for (auto* sub : {cantor, fig1, hmin, kcomp, nothyp}) {
    sub->add_option("-o,--output", co.out, "output JSON (default stdout)");
    sub->callback([sub, &construct_kind] { construct_kind = sub->get_name(); });
  }

  RenderOpts ro;
  auto* render = app.add_subcommand("render", "rasterize J(G)");
  render->add_option("--gens", ro.gens, "generator JSON")->required()->check(CLI::ExistingFile);
  render->add_option("--algo", ro.algo, "survivor | chaos | word-union | fiberwise")
      ->check(CLI::IsMember({"survivor", "chaos", "word-union", "fiberwise"}));
  render->add_option("--grid", ro.grid, "xmin:ymin:xmax:ymax:width");
  render->add_option("--view", ro.view, "square grid of this size over the construction's view");
  render->add_option("--iters", ro.iters, "survivor iterations");
  render->add_option("--samples", ro.samples, "chaos samples");
  render->add_option("--seed", ro.seed, "chaos seed");
  render->add_option("--word-length", ro.word_length, "longest word for word-union");
  render->add_option("--word-iters", ro.word_iters, "escape-time cap per word");
  render->add_option("--prefix", ro.prefix, "fiberwise generator indices, comma separated");
  render->add_option("-o,--output", ro.out, "output PGM")->required();

  AnalyzeOpts ao;
  auto* analyze = app.add_subcommand("analyze", "topology of a J raster");
  std::string analysis;
  analyze->add_option("what", analysis, "components | order | classify | containment")
      ->required()
      ->check(CLI::IsMember({"components", "order", "classify", "containment"}));
  analyze->add_option("--raster", ao.raster, "J raster (PGM)")->required()->check(CLI::ExistingFile);
  analyze->add_option("--gens", ao.gens, "generator JSON")->check(CLI::ExistingFile);
  analyze->add_option("--khat", ao.khat, "K-hat raster (PGM)")->check(CLI::ExistingFile);
  analyze->add_option("--anchor", ao.anchor, "order anchor re,im (default: K-hat centroid)");
  analyze->add_option("--dilation", ao.dilation, "dilation before Fatou classification");
  analyze->add_option("-o,--output", ao.out, "output JSON (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  std::string config, report_out;
  auto* suite = verify->add_subcommand("suite", "run the checks of a suite config");
  suite->add_option("--config", config, "suite JSON")->required()->check(CLI::ExistingFile);
  suite->add_option("-o,--output", report_out, "report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    set_thread_limit(threads);
    if (construct->parsed()) return run_construct(construct_kind, co);
    if (render->parsed()) return run_render(ro);
    if (analyze->parsed()) return run_analyze(analysis, ao);
    return run_verify(config, report_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
