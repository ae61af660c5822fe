#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semijulia/json_io.hpp"
#include "semijulia/raster_dynamics.hpp"
#include "semijulia/topology.hpp"

namespace semijulia {

enum class Verdict { Pass, Fail, Skip };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Skip;
  double metric = 0.0;
  double threshold = 0.0;
  std::string detail;
  Json witness;            // null when there is nothing to point at
  double elapsed_s = 0.0;  // not serialized, so reports stay byte-identical
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return false;
    return true;
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  Json to_json() const {
    Json list = Json::array();
    for (const auto& c : checks) {
      Json e{{"name", c.name},
             {"verdict", to_string(c.verdict)},
             {"metric", c.metric},
             {"threshold", c.threshold}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      if (!c.witness.is_null()) e["witness"] = c.witness;
      list.push_back(std::move(e));
    }
    return Json{{"suite", suite}, {"verdict", pass() ? "pass" : "fail"}, {"checks", std::move(list)}};
  }
};

namespace detail {

/// Runs `body`, timing it; a thrown library error becomes a failed check.
inline CheckResult timed_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const Error& e) {
    c.verdict = Verdict::Fail;
    c.detail = e.what();
    c.metric = e.metric();
  }
  c.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline Verdict at_most(double metric, double threshold) {
  return metric <= threshold ? Verdict::Pass : Verdict::Fail;
}

inline Json pixel_witness(const GridSpec& g, std::size_t idx) {
  const Complex z = g.center(idx);
  return Json{{"col", idx % static_cast<std::size_t>(g.width)},
              {"row", idx / static_cast<std::size_t>(g.width)},
              {"z", complex_to_json(z)}};
}

/// First pixel of `a` farthest from `b` (pixel index), for witnesses.
inline std::optional<std::size_t> farthest_pixel(const RasterSet& a, const RasterSet& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  const auto d = squared_distance_transform(b);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && (!best || d[i] > d[*best])) best = i;
  return best;
}

}  // namespace detail

// ---- invariance -----------------------------------------------------------

/// Each preimage raster lies within tol_px of J, and J is within tol_px of the
/// union of its preimages.
inline Report check_invariance(const GeneratorSet& gens, const RasterSet& julia, double tol_px = 2.0) {
  if (julia.empty()) throw Error(ErrorKind::InvalidArgument, "Julia raster is empty");
  Report rep;
  rep.suite = "invariance";
  RasterSet uni(julia.grid());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const RasterSet pre = preimage_raster(gens[i], julia, julia.grid());
    uni |= pre;
    rep.checks.push_back(detail::timed_check(
        "preimage under " + gens[i].name + " inside J", [&](CheckResult& c) {
          c.threshold = tol_px;
          c.metric = pre.empty() ? 0.0 : directed_hausdorff_px(pre, julia);
          c.verdict = detail::at_most(c.metric, tol_px);
          if (c.verdict == Verdict::Fail)
            if (auto w = detail::farthest_pixel(pre, julia)) c.witness = detail::pixel_witness(julia.grid(), *w);
        }));
  }
  rep.checks.push_back(detail::timed_check("backward self-similarity", [&](CheckResult& c) {
    c.threshold = tol_px;
    c.metric = uni.empty() ? INFINITY : hausdorff_px(julia, uni);
    c.verdict = detail::at_most(c.metric, tol_px);
    if (c.verdict == Verdict::Fail && !uni.empty()) {
      auto w = detail::farthest_pixel(julia, uni);
      if (!w || directed_hausdorff_px(julia, uni) < directed_hausdorff_px(uni, julia))
        w = detail::farthest_pixel(uni, julia);
      if (w) c.witness = detail::pixel_witness(julia.grid(), *w);
    }
  }));
  return rep;
}

// ---- structure ------------------------------------------------------------

/// Generator Julia rasters on the grid of `julia`.
inline std::vector<RasterSet> generator_julia_rasters(const GeneratorSet& gens, const GridSpec& grid) {
  std::vector<RasterSet> out;
  for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(generator_julia(gens, i, grid));
  return out;
}

inline Report check_structure(const GeneratorSet& gens, const RasterSet& julia, const RasterSet& khat,
                              std::optional<int> expected_components = {}, double tol_px = 2.0) {
  julia.check_same(khat);
  Report rep;
  rep.suite = "structure";
  const auto labels = label_components(julia);
  if (expected_components)
    rep.checks.push_back(detail::timed_check("component count", [&](CheckResult& c) {
      c.metric = labels.count;
      c.threshold = *expected_components;
      c.verdict = labels.count == *expected_components ? Verdict::Pass : Verdict::Fail;
    }));
  rep.checks.push_back(detail::timed_check("components totally ordered", [&](CheckResult& c) {
    const auto ord = order_components(labels, detail::raster_centroid(khat));
    c.metric = ord.total ? 1.0 : 0.0;
    c.threshold = 1.0;
    c.verdict = ord.total ? Verdict::Pass : Verdict::Fail;
    if (ord.violation) {
      c.detail = std::string("adjacent pair is ") + to_string(*ord.violation_relation);
      c.witness = Json::array({ord.violation->first, ord.violation->second});
    }
  }));
  rep.checks.push_back(detail::timed_check("Fatou components simply or doubly connected",
                                           [&](CheckResult& c) {
    int other = 0;
    std::optional<int> first;
    for (const auto& f : classify_fatou_components(julia))
      if (f.kind == FatouClass::Other) {
        ++other;
        if (!first) first = f.id;
      }
    c.metric = other;
    c.threshold = 0.0;
    c.verdict = other == 0 ? Verdict::Pass : Verdict::Fail;
    if (first) c.witness = Json{{"region", *first}};
  }));
  std::optional<ExtremeComponents> ext;
  rep.checks.push_back(detail::timed_check("J_min contains the boundary of K-hat", [&](CheckResult& c) {
    c.threshold = tol_px;
    ext = find_jmin_jmax(labels, julia, khat);
    const RasterSet edge = boundary4(khat);
    const RasterSet jmin = labels.component(ext->jmin);
    c.metric = directed_hausdorff_px(edge, jmin);
    c.verdict = detail::at_most(c.metric, tol_px);
    if (c.verdict == Verdict::Fail)
      if (auto w = detail::farthest_pixel(edge, jmin)) c.witness = detail::pixel_witness(julia.grid(), *w);
  }));
  rep.checks.push_back(detail::timed_check("J_min holds M' and J_max holds M''", [&](CheckResult& c) {
    c.threshold = 1.0;
    if (!ext) {
      c.verdict = Verdict::Skip;
      c.detail = "J_min / J_max unavailable";
      return;
    }
    const auto cr = containment_report(labels, generator_julia_rasters(gens, julia.grid()), ext);
    if (!cr.m_prime || !cr.m_double_prime) {
      c.verdict = Verdict::Skip;
      c.detail = "generator Julia rasters have no surrounding extremes";
      return;
    }
    const bool ok = cr.jmin_contains_m_prime.value_or(false) && cr.jmax_contains_m_double_prime.value_or(false);
    c.metric = ok ? 1.0 : 0.0;
    c.verdict = ok ? Verdict::Pass : Verdict::Fail;
    c.witness = Json{{"jmin", ext->jmin},
                     {"jmax", ext->jmax},
                     {"m_prime_host", cr.m_prime_host ? Json(*cr.m_prime_host) : Json()},
                     {"m_double_prime_host", cr.m_double_prime_host ? Json(*cr.m_double_prime_host) : Json()}};
  }));
  return rep;
}

// ---- hyperbolicity --------------------------------------------------------

/// Smallest pixel distance from a postcritical sample point to the J raster.
inline Report check_hyperbolic(const GeneratorSet& gens, const RasterSet& julia, int depth = 12,
                               double min_dist_px = 2.0) {
  Report rep;
  rep.suite = "hyperbolic";
  rep.checks.push_back(detail::timed_check("postcritical set away from J", [&](CheckResult& c) {
    c.threshold = min_dist_px;
    const auto pc = postcritical_bounded_check(gens, depth);
    if (!pc.bounded()) {
      c.verdict = Verdict::Skip;
      c.detail = "postcritical orbit escapes; the semigroup is not postcritically bounded";
      return;
    }
    if (julia.empty()) throw Error(ErrorKind::InvalidArgument, "Julia raster is empty");
    const GridSpec& g = julia.grid();
    const DistanceField field(julia);
    std::vector<std::size_t> jpix;
    for (std::size_t i = 0; i < julia.size(); ++i)
      if (julia[i]) jpix.push_back(i);
    auto exact = [&](Complex z, std::size_t* nearest) {
      const auto [fx, fy] = g.to_pixel(z);
      double best = INFINITY;
      for (auto i : jpix) {
        const double dx = fx - (static_cast<double>(i % g.width) + 0.5);
        const double dy = fy - (static_cast<double>(i / g.width) + 0.5);
        if (const double d = std::hypot(dx, dy); d < best) {
          best = d;
          *nearest = i;
        }
      }
      return best;
    };
    double best = INFINITY;
    std::optional<Complex> witness;
    for (auto z : pc.sample.points) {
      const auto [fx, fy] = g.to_pixel(z);
      const bool inside = fx >= 0 && fy >= 0 && fx < g.width && fy < g.height;
      double d;
      if (inside) {
        d = field.sample(fx, fy);
      } else {
        // Distance to the window is a lower bound; refine only when it matters.
        const double ox = std::max({0.0, -fx, fx - g.width}), oy = std::max({0.0, -fy, fy - g.height});
        if (std::hypot(ox, oy) >= best) continue;
        std::size_t dummy = 0;
        d = exact(z, &dummy);
      }
      if (d < best) {
        best = d;
        witness = z;
      }
    }
    c.metric = best;
    c.verdict = best >= min_dist_px ? Verdict::Pass : Verdict::Fail;
    if (witness) {
      std::size_t nearest = 0;
      c.metric = exact(*witness, &nearest);
      c.verdict = c.metric >= min_dist_px ? Verdict::Pass : Verdict::Fail;
      c.witness = Json{{"postcritical_point", complex_to_json(*witness)},
                       {"nearest_julia_pixel", detail::pixel_witness(g, nearest)}};
    }
    c.detail = std::to_string(pc.sample.points.size()) + " postcritical points at depth " +
               std::to_string(depth);
  }));
  return rep;
}

// ---- fiberwise Cantor structure -------------------------------------------

/// For every prefix of length N the boundary of the fiberwise filled set; the
/// 2^N curves must be Jordan, pairwise disjoint after 1-px dilation and
/// totally ordered.
inline Report check_fiberwise_cantor(const GeneratorSet& gens, int prefix_depth, const GridSpec& grid) {
  Report rep;
  rep.suite = "fiberwise-cantor";
  rep.checks.push_back(detail::timed_check("fiberwise curves form a nested Cantor family",
                                           [&](CheckResult& c) {
    if (prefix_depth < 1 || prefix_depth > 12)
      throw Error(ErrorKind::InvalidArgument, "prefix depth must be in 1..12");
    const auto count = std::size_t{1} << prefix_depth;
    c.threshold = static_cast<double>(count);
    if (gens.size() != 2) {
      c.verdict = Verdict::Skip;
      c.detail = "needs exactly two generators";
      return;
    }
    const auto gj = generator_julia_rasters(gens, grid);
    if (gj[0].empty() || gj[1].empty()) {
      c.verdict = Verdict::Skip;
      c.detail = "a generator Julia set misses the window";
      return;
    }
    const auto rel = surrounding_compare(gj[0], gj[1]).relation;
    if (rel != OrderRelation::Less && rel != OrderRelation::Greater) {
      c.verdict = Verdict::Skip;
      c.detail = std::string("generator Julia sets are not nested (") + to_string(rel) + ")";
      return;
    }
    std::vector<RasterSet> curves;
    RasterSet all(grid), innermost_filled(grid);
    std::size_t smallest = SIZE_MAX;
    for (std::size_t mask = 0; mask < count; ++mask) {
      TrajectoryPrefix x;
      for (int k = 0; k < prefix_depth; ++k) x.indices.push_back((mask >> (prefix_depth - 1 - k)) & 1U);
      const RasterSet filled = fiberwise_filled(gens, x, grid);
      if (filled.count() < smallest && !filled.empty()) {
        smallest = filled.count();
        innermost_filled = filled;
      }
      curves.push_back(boundary4(filled));
      all |= curves.back();
    }
    int jordan = 0;
    for (const auto& cv : curves) jordan += is_jordan_curve(cv) ? 1 : 0;
    std::optional<std::pair<std::size_t, std::size_t>> clash;
    for (std::size_t a = 0; a < count && !clash; ++a) {
      const RasterSet grown = dilate(curves[a], 1);
      for (std::size_t b = a + 1; b < count && !clash; ++b) {
        RasterSet meet = grown;
        meet &= curves[b];
        if (!meet.empty()) clash = std::make_pair(a, b);
      }
    }
    const auto labels = label_components(all);
    bool total = false;
    if (labels.count == static_cast<int>(count) && !innermost_filled.empty())
      total = order_components(labels, detail::raster_centroid(innermost_filled)).total;
    c.metric = jordan;
    const bool ok = jordan == static_cast<int>(count) && !clash && total;
    c.verdict = ok ? Verdict::Pass : Verdict::Fail;
    c.detail = std::to_string(jordan) + " Jordan curves, " + std::to_string(labels.count) +
               " components, " + (clash ? "overlapping pair" : "disjoint") + ", " +
               (total ? "totally ordered" : "not totally ordered");
    if (clash) c.witness = Json::array({clash->first, clash->second});
  }));
  return rep;
}

// ---- rendering ------------------------------------------------------------

struct RenderParams {
  int iters = 40;                     // survivor
  std::int64_t samples = 1'000'000;   // chaos
  std::uint64_t seed = 1;             // chaos
  int word_length = 6;                // word union
  int word_iters = 200;               // word union
  std::vector<std::size_t> prefix;    // fiberwise
};

inline RasterSet render_julia(const GeneratorSet& gens, const std::string& algo, const GridSpec& grid,
                              const RenderParams& p = {}) {
  if (algo == "survivor") return julia_survivor(gens, grid, default_survivor_seed(gens, grid), p.iters);
  if (algo == "chaos") return julia_chaos(gens, std::nullopt, p.samples, grid, p.seed);
  if (algo == "word-union") return julia_word_union(gens, p.word_length, grid, p.word_iters);
  if (algo == "fiberwise") return boundary4(fiberwise_filled(gens, TrajectoryPrefix{p.prefix}, grid));
  throw Error(ErrorKind::InvalidArgument, "unknown algorithm '" + algo + "'");
}

inline CheckResult check_cross_algorithm(const std::vector<std::pair<std::string, RasterSet>>& rasters,
                                         double tol_px = 3.0) {
  return detail::timed_check("cross-algorithm Hausdorff", [&](CheckResult& c) {
    c.threshold = tol_px;
    if (rasters.size() < 2) {
      c.verdict = Verdict::Skip;
      c.detail = "needs two algorithms";
      return;
    }
    Json pairs = Json::object();
    for (std::size_t a = 0; a < rasters.size(); ++a)
      for (std::size_t b = a + 1; b < rasters.size(); ++b) {
        const double h = hausdorff_px(rasters[a].second, rasters[b].second);
        pairs[rasters[a].first + "/" + rasters[b].first] = h;
        c.metric = std::max(c.metric, h);
      }
    c.verdict = detail::at_most(c.metric, tol_px);
    c.witness = std::move(pairs);
  });
}

// ---- suites ---------------------------------------------------------------

/// Suite config keys: name, construction, grid ("x0:y0:x1:y1:w" or
/// {"size": n} for the construction's view), algorithms (first one is the J
/// raster the checks use), params, checks, thresholds, artifacts (directory).
inline Report run_suite(const Json& config) {
  if (!config.is_object()) throw Error(ErrorKind::Parse, "suite: expected a JSON object");
  auto section = [&](const char* key) {
    if (!config.contains(key)) return Json::object();
    if (!config[key].is_object()) throw Error(ErrorKind::Parse, "suite." + std::string(key) + ": expected an object");
    return config[key];
  };
  const Json params = section("params"), thresholds = section("thresholds");
  auto number = [](const Json& j, const char* key, double fallback, const std::string& where) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw Error(ErrorKind::Parse, where + "." + key + ": expected a number");
    return j[key].get<double>();
  };
  Report rep;
  rep.suite = config.value("name", "suite");
  if (!config.contains("construction")) throw Error(ErrorKind::Parse, "suite.construction: missing");
  const ConstructionResult cons = construction_from_json(config["construction"]);

  GridSpec grid;
  if (config.contains("grid") && config["grid"].is_string()) {
    try {
      grid = parse_grid(config["grid"].get<std::string>());
    } catch (const std::exception& e) {
      throw Error(ErrorKind::Parse, std::string("suite.grid: ") + e.what());
    }
  } else {
    const Json g = section("grid");
    grid = cons.view_grid(static_cast<int>(number(g, "size", 1024, "suite.grid")));
  }

  RenderParams rp;
  rp.iters = static_cast<int>(number(params, "iters", 40, "suite.params"));
  rp.samples = static_cast<std::int64_t>(number(params, "samples", 1e6, "suite.params"));
  rp.seed = static_cast<std::uint64_t>(number(params, "seed", 1, "suite.params"));
  rp.word_length = static_cast<int>(number(params, "word_length", 6, "suite.params"));
  const int depth = static_cast<int>(number(params, "depth", 12, "suite.params"));
  const int khat_iters = static_cast<int>(number(params, "khat_iters", 60, "suite.params"));
  const double contain_px = number(thresholds, "containment_px", 2.0, "suite.thresholds");
  const double hausdorff_tol = number(thresholds, "hausdorff_px", 3.0, "suite.thresholds");
  const double min_dist = number(thresholds, "min_dist_px", 2.0, "suite.thresholds");

  std::vector<std::string> algos{"survivor"};
  if (config.contains("algorithms")) {
    if (!config["algorithms"].is_array() || config["algorithms"].empty())
      throw Error(ErrorKind::Parse, "suite.algorithms: expected a nonempty array");
    algos.clear();
    for (const auto& a : config["algorithms"]) {
      if (!a.is_string()) throw Error(ErrorKind::Parse, "suite.algorithms: expected strings");
      algos.push_back(a.get<std::string>());
      if (algos.back() != "survivor" && algos.back() != "chaos" && algos.back() != "word-union")
        throw Error(ErrorKind::Parse, "suite.algorithms: unknown algorithm '" + algos.back() + "'");
    }
  }
  if (!config.contains("checks") || !config["checks"].is_array())
    throw Error(ErrorKind::Parse, "suite.checks: expected an array");

  // Validate every check entry before the expensive work starts.
  struct Planned {
    std::string kind;
    Json spec;
  };
  std::vector<Planned> planned;
  for (std::size_t i = 0; i < config["checks"].size(); ++i) {
    const Json& e = config["checks"][i];
    const std::string where = "suite.checks[" + std::to_string(i) + "]";
    Planned p;
    if (e.is_string()) {
      p.kind = e.get<std::string>();
      p.spec = Json::object();
    } else if (e.is_object() && e.contains("check") && e["check"].is_string()) {
      p.kind = e["check"].get<std::string>();
      p.spec = e;
    } else {
      throw Error(ErrorKind::Parse, where + ": expected a name or an object with \"check\"");
    }
    static const std::vector<std::string> known{"invariance", "structure", "hyperbolic",
                                                "fiberwise-cantor", "cross-algorithm"};
    if (std::find(known.begin(), known.end(), p.kind) == known.end())
      throw Error(ErrorKind::Parse, where + ": unknown check '" + p.kind + "'");
    planned.push_back(std::move(p));
  }

  std::vector<std::pair<std::string, RasterSet>> rasters;
  for (const auto& a : algos) rasters.emplace_back(a, render_julia(cons.gens, a, grid, rp));
  const RasterSet& julia = rasters.front().second;
  if (config.contains("artifacts")) {
    const std::filesystem::path dir = config["artifacts"].get<std::string>();
    std::filesystem::create_directories(dir);
    for (const auto& [a, r] : rasters) write_pgm((dir / (rep.suite + "_" + a + ".pgm")).string(), r);
  }
  std::optional<RasterSet> khat;
  auto get_khat = [&]() -> const RasterSet& {
    if (!khat) khat = smallest_filled_julia(cons.gens, grid, khat_iters);
    return *khat;
  };

  for (const auto& p : planned) {
    // Optional generator subset, by name.
    GeneratorSet gens = cons.gens;
    const RasterSet* jr = &julia;
    std::optional<RasterSet> sub_julia;
    std::string label;
    if (p.spec.contains("generators")) {
      std::vector<Generator> picked;
      for (const auto& n : p.spec["generators"]) {
        bool found = false;
        for (std::size_t i = 0; i < cons.gens.size(); ++i)
          if (cons.gens[i].name == n.get<std::string>()) {
            picked.push_back(cons.gens[i]);
            found = true;
          }
        if (!found) throw Error(ErrorKind::Parse, "suite.checks: unknown generator " + n.dump());
        label += (label.empty() ? "" : ",") + n.get<std::string>();
      }
      gens = GeneratorSet(std::move(picked));
      sub_julia = render_julia(gens, "survivor", grid, rp);
      jr = &*sub_julia;
      label = " <" + label + ">";
    }
    Report part;
    if (p.kind == "invariance") {
      part = check_invariance(gens, *jr, number(p.spec, "tol_px", contain_px, "check"));
    } else if (p.kind == "structure") {
      std::optional<int> expected;
      if (p.spec.contains("expected_components")) expected = p.spec["expected_components"].get<int>();
      const RasterSet kh = sub_julia ? smallest_filled_julia(gens, grid, khat_iters) : get_khat();
      part = check_structure(gens, *jr, kh, expected, contain_px);
    } else if (p.kind == "hyperbolic") {
      part = check_hyperbolic(gens, *jr, static_cast<int>(number(p.spec, "depth", depth, "check")),
                              number(p.spec, "min_dist_px", min_dist, "check"));
    } else if (p.kind == "fiberwise-cantor") {
      part = check_fiberwise_cantor(gens, static_cast<int>(number(p.spec, "prefix_depth", 4, "check")), grid);
    } else {
      part.checks.push_back(check_cross_algorithm(rasters, hausdorff_tol));
    }
    const bool expect_fail = p.spec.value("expect", std::string("pass")) == "fail";
    for (auto& c : part.checks) {
      c.name += label;
      if (expect_fail && c.verdict != Verdict::Skip) {
        c.name += " (expected to fail)";
        c.verdict = c.verdict == Verdict::Fail ? Verdict::Pass : Verdict::Fail;
      }
    }
    rep.append(part);
  }
  return rep;
}

/// 0 = pass, 1 = some check failed; errors are the caller's 2.
inline int exit_code(const Report& r) { return r.pass() ? 0 : 1; }

}  // namespace semijulia
