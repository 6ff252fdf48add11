#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>
#include <sstream>

#include "gonet/network.hpp"
#include "gonet/playout.hpp"
#include "gonet/sgf.hpp"
#include "gonet/spectral.hpp"
#include "gonet/turing.hpp"

namespace py = pybind11;
using namespace gonet;

namespace {

py::dict point_dict(const IndicatorPoint& pt) {
  py::dict d;
  d["label"] = pt.label;
  d["group_size"] = pt.group_size;
  d["n_instances"] = pt.n_instances;
  d["f_mean"] = pt.f_mean;
  d["f_sd"] = pt.f_sd;
  d["sn_mean"] = pt.sn_mean;
  d["sn_sd"] = pt.sn_sd;
  d["sigma_mean"] = pt.sigma_mean;
  d["sigma_sd"] = pt.sigma_sd;
  return d;
}

py::dict verdict_dict(const TuringVerdict& v) {
  py::dict d;
  d["decision"] = decision_name(v.decision);
  d["separation_f"] = v.sep_f;
  d["separation_sn"] = v.sep_sn;
  d["separation_sigma"] = v.sep_sigma;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gonet, m) {
  m.doc() = "go pattern-network construction, Google-matrix spectral "
            "statistics and same-source testing";
  m.attr("__version__") = "0.1.0";
  m.attr("NUM_PATTERN_CLASSES") = kNumPatternClasses;

  py::class_<GameRecord>(m, "GameRecord")
      .def_readonly("board_size", &GameRecord::board_size)
      .def_readonly("source_id", &GameRecord::source_id)
      .def_property_readonly("n_moves",
                             [](const GameRecord& g) { return g.moves.size(); })
      .def_property_readonly("moves", [](const GameRecord& g) {
        py::list out;
        for (const MoveAction& mv : g.moves)
          out.append(py::make_tuple(mv.color == StoneColor::Black ? "B" : "W",
                                    mv.pass ? -1 : mv.point.x,
                                    mv.pass ? -1 : mv.point.y, mv.pass));
        return out;
      })
      .def("__repr__", [](const GameRecord& g) {
        return "<GameRecord '" + g.source_id + "', " +
               std::to_string(g.moves.size()) + " moves>";
      });

  m.def("parse_sgf",
        [](const std::string& text) { return parse_sgf(text).games; },
        py::arg("text"), "Parse an SGF collection, main variations only.");
  m.def("load_database",
        [](const std::filesystem::path& path) {
          return load_database(path).games;
        },
        py::arg("path"), "Load every *.sgf under a path.");
  m.def("to_sgf", &to_sgf, py::arg("game"));
  m.def("generate_games",
        [](const std::string& policy, int n_games, uint64_t seed, int max_moves) {
          return generate_games({policy_from_name(policy), max_moves, seed},
                                n_games);
        },
        py::arg("policy"), py::arg("n_games"), py::arg("seed") = 0,
        py::arg("max_moves") = 250,
        "Deterministic synthetic games ('uniform' or 'greedy').");

  m.def("catalog_size",
        []() { return PatternCatalog::instance().size(); });
  m.def("catalog_breakdown", []() {
    const PatternCatalog& c = PatternCatalog::instance();
    py::dict d;
    d["interior"] = c.count(PatternGeometry::Interior);
    d["edge"] = c.count(PatternGeometry::Edge);
    d["corner"] = c.count(PatternGeometry::Corner);
    return d;
  });
  m.def("render_pattern", [](int id) {
    return render_pattern(PatternCatalog::instance().representative(id));
  }, py::arg("pattern_id"));

  py::class_<PatternNetwork>(m, "PatternNetwork")
      .def(py::init([](int n_nodes) {
             PatternNetwork net;
             net.n_nodes = n_nodes;
             return net;
           }),
           py::arg("n_nodes") = kNumPatternClasses)
      .def_readonly("n_nodes", &PatternNetwork::n_nodes)
      .def_readonly("k_tot", &PatternNetwork::k_tot)
      .def_readonly("games_used", &PatternNetwork::games_used)
      .def("add_link", &PatternNetwork::add_link, py::arg("from_id"),
           py::arg("to_id"), py::arg("count") = 1)
      .def("weight", &PatternNetwork::weight, py::arg("from_id"), py::arg("to_id"))
      .def("in_degrees", &PatternNetwork::in_degrees)
      .def("out_degrees", &PatternNetwork::out_degrees)
      .def("save_tsv",
           [](const PatternNetwork& net, const std::filesystem::path& path) {
             std::ofstream out(path, std::ios::binary);
             if (!out) throw IoError("cannot write " + path.string());
             net.save_tsv(out);
           })
      .def_static("load_tsv", [](const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read " + path.string());
        return PatternNetwork::load_tsv(in);
      })
      .def("__repr__", [](const PatternNetwork& net) {
        return "<PatternNetwork n=" + std::to_string(net.n_nodes) +
               " k_tot=" + std::to_string(net.k_tot) + ">";
      });

  m.def("build_network",
        [](const std::vector<GameRecord>& games, double ds,
           const std::string& metric) {
          return build_network(games, {ds, metric_from_name(metric)});
        },
        py::arg("games"), py::arg("ds") = 4.0, py::arg("metric") = "euclidean");
  m.def("merge", &merge, py::arg("networks"));

  m.def("pagerank",
        [](const PatternNetwork& net, double alpha, double tol, int max_iter) {
          return pagerank(GoogleMatrix(net, alpha), tol, max_iter).p;
        },
        py::arg("network"), py::arg("alpha") = 0.85, py::arg("tol") = 1e-12,
        py::arg("max_iter") = 10000);
  m.def("spectrum",
        [](const PatternNetwork& net, double alpha, int n_vectors) {
          SpectrumResult s = full_spectrum(GoogleMatrix(net, alpha), n_vectors);
          py::dict d;
          d["eigenvalues"] = s.eigenvalues;
          py::list vecs;
          for (const EigenPair& pair : s.top_vectors) {
            py::dict e;
            e["value"] = pair.value;
            e["vector"] = pair.vector;
            vecs.append(e);
          }
          d["top_vectors"] = vecs;
          return d;
        },
        py::arg("network"), py::arg("alpha") = 1.0, py::arg("n_vectors") = 0);
  m.def("lambda_c",
        [](const std::vector<std::complex<double>>& eigenvalues, double x,
           bool include_unit) {
          SpectrumResult s;
          s.eigenvalues = eigenvalues;
          return lambda_c(s, x, include_unit);
        },
        py::arg("eigenvalues"), py::arg("x"), py::arg("include_unit") = true);

  py::class_<RankingVector>(m, "RankingVector")
      .def_readonly("order", &RankingVector::order)
      .def_readonly("rank", &RankingVector::rank)
      .def("__len__", &RankingVector::size);
  m.def("ranking_vector", [](const std::vector<std::complex<double>>& v) {
    return ranking_vector(std::span<const std::complex<double>>(v));
  });
  m.def("dispersion", &dispersion, py::arg("a"), py::arg("b"), py::arg("half") = 0);
  m.def("dispersion_sym", &dispersion_sym, py::arg("a"), py::arg("b"),
        py::arg("half") = 0);
  m.def("fidelity",
        [](const std::vector<std::complex<double>>& phi,
           const std::vector<std::complex<double>>& psi) {
          return fidelity(std::span<const std::complex<double>>(phi),
                          std::span<const std::complex<double>>(psi));
        });
  m.def("ordered_similarity", &ordered_similarity, py::arg("a"), py::arg("b"),
        py::arg("window") = 30);
  m.def("nonordered_similarity", &nonordered_similarity, py::arg("a"),
        py::arg("b"), py::arg("window") = 30);

  m.def("run_turing",
        [](const std::vector<GameRecord>& db_a,
           const std::vector<GameRecord>& db_b, int group_size, int n_instances,
           uint64_t seed, const std::string& mode, double alpha, double ds,
           const std::string& metric, int window, int half, double threshold_k) {
          SubsampleScheme scheme{group_size, n_instances, seed,
                                 sample_mode_from_name(mode)};
          AnalysisOptions options;
          options.build = {ds, metric_from_name(metric)};
          options.alpha = alpha;
          options.window = window;
          options.half = half;
          TuringReport r = run_turing(db_a, db_b, scheme, options, threshold_k);
          py::dict d;
          d["decision"] = decision_name(r.overall);
          d["within_a"] = point_dict(r.within_a);
          d["between"] = point_dict(r.between);
          d["within_b"] = point_dict(r.within_b);
          d["verdict_within_a"] = verdict_dict(r.verdict_a);
          d["verdict_within_b"] = verdict_dict(r.verdict_b);
          return d;
        },
        py::arg("db_a"), py::arg("db_b"), py::arg("group_size"),
        py::arg("n_instances") = 10, py::arg("seed") = 0,
        py::arg("mode") = "redraw", py::arg("alpha") = 0.85,
        py::arg("ds") = 4.0, py::arg("metric") = "euclidean",
        py::arg("window") = 30, py::arg("half") = 0,
        py::arg("threshold_k") = 2.0);

  m.def("eigenvector_profile",
        [](const std::vector<GameRecord>& db_a,
           const std::vector<GameRecord>& db_b, int group_size, int n_instances,
           uint64_t seed, double alpha, int n_eigenvectors) {
          SubsampleScheme scheme{group_size, n_instances, seed, SampleMode::Redraw};
          AnalysisOptions options;
          options.alpha = alpha;
          py::list out;
          for (const EigenvectorProfilePoint& pt :
               eigenvector_profile(db_a, db_b, scheme, options, n_eigenvectors)) {
            py::dict d;
            d["rank"] = pt.rank;
            d["f_mean"] = pt.f_mean;
            d["f_sd"] = pt.f_sd;
            d["so_mean"] = pt.so_mean;
            d["so_sd"] = pt.so_sd;
            d["sn_mean"] = pt.sn_mean;
            d["sn_sd"] = pt.sn_sd;
            out.append(d);
          }
          return out;
        },
        py::arg("db_a"), py::arg("db_b"), py::arg("group_size"),
        py::arg("n_instances") = 4, py::arg("seed") = 0, py::arg("alpha") = 0.85,
        py::arg("n_eigenvectors") = 7);

  py::register_exception<IoError>(m, "IoError");
  py::register_exception<InsufficientGames>(m, "InsufficientGames");
  py::register_exception<NoConvergence>(m, "NoConvergence");
  py::register_exception<EigensolverFailure>(m, "EigensolverFailure");
  py::register_exception<NetworkFormatError>(m, "NetworkFormatError");
}
