#include "gonet/turing.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "gonet/rng.hpp"

namespace gonet {

const char* sample_mode_name(SampleMode m) {
  return m == SampleMode::Redraw ? "redraw" : "split";
}

SampleMode sample_mode_from_name(std::string_view name) {
  if (name == "redraw") return SampleMode::Redraw;
  if (name == "split") return SampleMode::DisjointSplit;
  throw std::invalid_argument("unknown sample mode '" + std::string(name) + "'");
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::SameSource: return "same-source";
    case Decision::DifferentSource: return "different-source";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

TuringVerdict verdict(const IndicatorPoint& within, const IndicatorPoint& between,
                      double k) {
  constexpr double eps = 1e-12;
  auto separation = [&](double mw, double sw, double mb, double sb) {
    return std::abs(mb - mw) / (sb + sw + eps);
  };
  TuringVerdict v;
  v.sep_f = separation(within.f_mean, within.f_sd, between.f_mean, between.f_sd);
  v.sep_sn = separation(within.sn_mean, within.sn_sd, between.sn_mean, between.sn_sd);
  v.sep_sigma = separation(within.sigma_mean, within.sigma_sd,
                           between.sigma_mean, between.sigma_sd);
  int above_k = (v.sep_f > k) + (v.sep_sn > k) + (v.sep_sigma > k);
  if (above_k >= 2)
    v.decision = Decision::DifferentSource;
  else if (v.sep_f < 1 && v.sep_sn < 1 && v.sep_sigma < 1)
    v.decision = Decision::SameSource;
  else
    v.decision = Decision::Inconclusive;
  return v;
}

namespace {

struct DrawPlan {
  std::vector<std::vector<int>> instances;  // game indices per instance
};

// All draws derive from the scheme seed before any evaluation happens, so
// evaluation order can never change the sample.
DrawPlan make_plan(size_t db_size, const SubsampleScheme& scheme, SplitMix64& master) {
  if (scheme.group_size < 1 ||
      static_cast<size_t>(scheme.group_size) > db_size)
    throw InsufficientGames("group_size " + std::to_string(scheme.group_size) +
                            " exceeds database of " + std::to_string(db_size));
  DrawPlan plan;
  if (scheme.mode == SampleMode::Redraw) {
    for (int i = 0; i < scheme.n_instances; ++i) {
      SplitMix64 rng(master.next());
      std::vector<int> all(db_size);
      std::iota(all.begin(), all.end(), 0);
      rng.shuffle(all);
      all.resize(scheme.group_size);
      plan.instances.push_back(std::move(all));
    }
  } else {
    SplitMix64 rng(master.next());
    std::vector<int> all(db_size);
    std::iota(all.begin(), all.end(), 0);
    rng.shuffle(all);
    int chunks = static_cast<int>(db_size) / scheme.group_size;
    int n = std::min(scheme.n_instances, chunks);
    for (int i = 0; i < n; ++i)
      plan.instances.emplace_back(all.begin() + i * scheme.group_size,
                                  all.begin() + (i + 1) * scheme.group_size);
  }
  return plan;
}

std::vector<GameRecord> pick(const std::vector<GameRecord>& db,
                             const std::vector<int>& indices) {
  std::vector<GameRecord> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(db[i]);
  return out;
}

struct Accumulator {
  std::vector<double> f, sn, sigma;

  void add(double fv, double snv, double sv) {
    f.push_back(fv);
    sn.push_back(snv);
    sigma.push_back(sv);
  }
  static std::pair<double, double> mean_sd(const std::vector<double>& xs) {
    if (xs.empty()) return {0, 0};
    double mean = std::accumulate(xs.begin(), xs.end(), 0.0) /
                  static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size());
    return {mean, std::sqrt(var)};
  }
  IndicatorPoint finish(std::string label, const SubsampleScheme& scheme) const {
    IndicatorPoint pt;
    pt.label = std::move(label);
    pt.group_size = scheme.group_size;
    pt.n_instances = static_cast<int>(f.size());
    std::tie(pt.f_mean, pt.f_sd) = mean_sd(f);
    std::tie(pt.sn_mean, pt.sn_sd) = mean_sd(sn);
    std::tie(pt.sigma_mean, pt.sigma_sd) = mean_sd(sigma);
    return pt;
  }
};

struct Reference {
  std::vector<double> p;
  RankingVector ranking;
};

Reference full_reference(const std::vector<GameRecord>& db,
                         const AnalysisOptions& options) {
  if (db.empty()) throw InsufficientGames("empty database");
  PatternNetwork net = build_network(db, options.build);
  GoogleMatrix g(net, options.alpha);
  Reference ref;
  ref.p = pagerank(g, options.pagerank_tol, options.pagerank_max_iter).p;
  ref.ranking = ranking_vector(std::span<const double>(ref.p));
  return ref;
}

IndicatorPoint evaluate_point(const Reference& ref,
                              const std::vector<GameRecord>& db,
                              const DrawPlan& plan, std::string label,
                              const SubsampleScheme& scheme,
                              const AnalysisOptions& options) {
  Accumulator acc;
  for (const std::vector<int>& indices : plan.instances) {
    PatternNetwork net = build_network(pick(db, indices), options.build);
    GoogleMatrix g(net, options.alpha);
    std::vector<double> p = pagerank(g, options.pagerank_tol,
                                     options.pagerank_max_iter).p;
    RankingVector ranking = ranking_vector(std::span<const double>(p));
    acc.add(fidelity(std::span<const double>(ref.p), std::span<const double>(p)),
            nonordered_similarity(ref.ranking, ranking, options.window),
            dispersion_sym(ref.ranking, ranking, options.half));
  }
  return acc.finish(std::move(label), scheme);
}

}  // namespace

std::vector<IndicatorPoint> indicator_points(const std::vector<GameRecord>& db_a,
                                             const std::vector<GameRecord>& db_b,
                                             const SubsampleScheme& scheme,
                                             const AnalysisOptions& options) {
  if (scheme.n_instances <= 0) return {};
  if (db_a.empty() || db_b.empty()) throw InsufficientGames("empty database");
  // Fixed derivation order for the three plans keeps reports seed-stable.
  SplitMix64 master(scheme.rng_seed);
  DrawPlan plan_aa = make_plan(db_a.size(), scheme, master);
  DrawPlan plan_ab = make_plan(db_b.size(), scheme, master);
  DrawPlan plan_bb = make_plan(db_b.size(), scheme, master);

  Reference ref_a = full_reference(db_a, options);
  Reference ref_b = full_reference(db_b, options);

  std::vector<IndicatorPoint> points;
  points.push_back(evaluate_point(ref_a, db_a, plan_aa, "A|A", scheme, options));
  points.push_back(evaluate_point(ref_a, db_b, plan_ab, "A|B", scheme, options));
  points.push_back(evaluate_point(ref_b, db_b, plan_bb, "B|B", scheme, options));
  return points;
}

TuringReport run_turing(const std::vector<GameRecord>& db_a,
                        const std::vector<GameRecord>& db_b,
                        const SubsampleScheme& scheme,
                        const AnalysisOptions& options, double threshold_k) {
  std::vector<IndicatorPoint> points = indicator_points(db_a, db_b, scheme, options);
  if (points.size() != 3) throw InsufficientGames("scheme produced no instances");
  TuringReport report;
  report.scheme = scheme;
  report.alpha = options.alpha;
  report.threshold_k = threshold_k;
  report.within_a = points[0];
  report.between = points[1];
  report.within_b = points[2];
  report.verdict_a = verdict(report.within_a, report.between, threshold_k);
  report.verdict_b = verdict(report.within_b, report.between, threshold_k);
  if (report.verdict_a.decision == report.verdict_b.decision)
    report.overall = report.verdict_a.decision;
  else
    report.overall = Decision::Inconclusive;
  return report;
}

std::vector<EigenvectorProfilePoint> eigenvector_profile(
    const std::vector<GameRecord>& db_a, const std::vector<GameRecord>& db_b,
    const SubsampleScheme& scheme, const AnalysisOptions& options,
    int n_eigenvectors) {
  if (scheme.n_instances <= 0 || n_eigenvectors < 1) return {};
  if (db_a.empty() || db_b.empty()) throw InsufficientGames("empty database");
  SplitMix64 master(scheme.rng_seed);
  DrawPlan plan_a = make_plan(db_a.size(), scheme, master);
  DrawPlan plan_b = make_plan(db_b.size(), scheme, master);
  size_t n_pairs = std::min(plan_a.instances.size(), plan_b.instances.size());

  std::vector<std::vector<double>> f(n_eigenvectors), so(n_eigenvectors),
      sn(n_eigenvectors);
  for (size_t i = 0; i < n_pairs; ++i) {
    PatternNetwork net_a = build_network(pick(db_a, plan_a.instances[i]), options.build);
    PatternNetwork net_b = build_network(pick(db_b, plan_b.instances[i]), options.build);
    SpectrumResult spec_a =
        full_spectrum(GoogleMatrix(net_a, options.alpha), n_eigenvectors);
    SpectrumResult spec_b =
        full_spectrum(GoogleMatrix(net_b, options.alpha), n_eigenvectors);
    for (int r = 0; r < n_eigenvectors; ++r) {
      const auto& va = spec_a.top_vectors[r].vector;
      const auto& vb = spec_b.top_vectors[r].vector;
      RankingVector ra = ranking_vector(std::span<const std::complex<double>>(va));
      RankingVector rb = ranking_vector(std::span<const std::complex<double>>(vb));
      f[r].push_back(fidelity(std::span<const std::complex<double>>(va),
                              std::span<const std::complex<double>>(vb)));
      so[r].push_back(ordered_similarity(ra, rb, options.window));
      sn[r].push_back(nonordered_similarity(ra, rb, options.window));
    }
  }

  std::vector<EigenvectorProfilePoint> profile;
  for (int r = 0; r < n_eigenvectors; ++r) {
    EigenvectorProfilePoint pt;
    pt.rank = r + 1;
    std::tie(pt.f_mean, pt.f_sd) = Accumulator::mean_sd(f[r]);
    std::tie(pt.so_mean, pt.so_sd) = Accumulator::mean_sd(so[r]);
    std::tie(pt.sn_mean, pt.sn_sd) = Accumulator::mean_sd(sn[r]);
    profile.push_back(pt);
  }
  return profile;
}

namespace {

nlohmann::json point_json(const IndicatorPoint& pt) {
  return {{"label", pt.label},
          {"group_size", pt.group_size},
          {"n_instances", pt.n_instances},
          {"f_mean", pt.f_mean},
          {"f_sd", pt.f_sd},
          {"sn_mean", pt.sn_mean},
          {"sn_sd", pt.sn_sd},
          {"sigma_mean", pt.sigma_mean},
          {"sigma_sd", pt.sigma_sd}};
}

nlohmann::json verdict_json(const TuringVerdict& v) {
  return {{"decision", decision_name(v.decision)},
          {"separation_f", v.sep_f},
          {"separation_sn", v.sep_sn},
          {"separation_sigma", v.sep_sigma}};
}

}  // namespace

void write_report_json(std::ostream& out, const TuringReport& report) {
  nlohmann::json j = {
      {"scheme",
       {{"group_size", report.scheme.group_size},
        {"n_instances", report.scheme.n_instances},
        {"rng_seed", report.scheme.rng_seed},
        {"mode", sample_mode_name(report.scheme.mode)}}},
      {"alpha", report.alpha},
      {"threshold_k", report.threshold_k},
      {"points", {point_json(report.within_a), point_json(report.between),
                  point_json(report.within_b)}},
      {"verdict_within_a", verdict_json(report.verdict_a)},
      {"verdict_within_b", verdict_json(report.verdict_b)},
      // The numeric rule is this tool's stand-in for a by-eye comparison of
      // indicator plots; thresholds are configurable, not canonical.
      {"decision_rule", "2-of-3 separations > k for different-source; all < 1 for same-source"},
      {"overall", decision_name(report.overall)}};
  out << j.dump(2) << '\n';
}

void write_scatter_csv(std::ostream& out, const TuringReport& report) {
  out << "label,group_size,n_instances,f_mean,f_sd,sn_mean,sn_sd,sigma_mean,sigma_sd\n";
  out << std::setprecision(12);
  for (const IndicatorPoint* pt :
       {&report.within_a, &report.between, &report.within_b}) {
    out << pt->label << ',' << pt->group_size << ',' << pt->n_instances << ','
        << pt->f_mean << ',' << pt->f_sd << ',' << pt->sn_mean << ',' << pt->sn_sd
        << ',' << pt->sigma_mean << ',' << pt->sigma_sd << '\n';
  }
}

void write_profile_csv(std::ostream& out,
                       const std::vector<EigenvectorProfilePoint>& profile) {
  out << "rank,f_mean,f_sd,so_mean,so_sd,sn_mean,sn_sd\n";
  out << std::setprecision(12);
  for (const EigenvectorProfilePoint& pt : profile)
    out << pt.rank << ',' << pt.f_mean << ',' << pt.f_sd << ',' << pt.so_mean
        << ',' << pt.so_sd << ',' << pt.sn_mean << ',' << pt.sn_sd << '\n';
}

}  // namespace gonet
