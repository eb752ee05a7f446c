#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tegdet/data.hpp"
#include "tegdet/detector.hpp"
#include "tegdet/error.hpp"
#include "tegdet/graph.hpp"
#include "tegdet/metrics.hpp"
#include "tegdet/model_io.hpp"
#include "tegdet/results.hpp"

namespace py = pybind11;
using namespace tegdet;

namespace {

template <typename T>
std::vector<T> to_vector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Time-evolving graph anomaly detection (C++ core)";

  auto error = py::register_exception<Error>(m, "Error");
  auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  auto data_error = py::register_exception<DataError>(m, "DataError", error.ptr());
  auto format_error = py::register_exception<FormatError>(m, "FormatError", data_error.ptr());
  py::register_exception<VersionError>(m, "VersionError", format_error.ptr());
  (void)invalid;

  py::class_<TimeSeries>(m, "TimeSeries")
      .def(py::init<std::vector<std::string>, std::vector<double>>(), py::arg("timestamps"),
           py::arg("values"))
      .def_static("from_values", &TimeSeries::from_values)
      .def("__len__", &TimeSeries::size)
      .def_property_readonly("values", [](const TimeSeries& t) { return to_vector(t.values()); })
      .def_property_readonly("timestamps",
                             [](const TimeSeries& t) { return to_vector(t.timestamps()); });

  py::class_<DiscreteSeries>(m, "DiscreteSeries")
      .def("__len__", &DiscreteSeries::size)
      .def_property_readonly("levels", [](const DiscreteSeries& d) { return to_vector(d.levels()); });

  py::class_<Discretizer>(m, "Discretizer")
      .def(py::init<double, double, int>(), py::arg("min"), py::arg("max"), py::arg("n_levels"))
      .def_static("fit", &Discretizer::fit, py::arg("train"), py::arg("n_bins"))
      .def_property_readonly("min", &Discretizer::min)
      .def_property_readonly("max", &Discretizer::max)
      .def_property_readonly("n_levels", &Discretizer::n_levels)
      .def("level", &Discretizer::level)
      .def("apply", &Discretizer::apply)
      .def(py::self == py::self);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::vector<Level>, std::vector<Count>, std::vector<Count>>(), py::arg("levels"),
           py::arg("weights"), py::arg("adjacency"))
      .def_property_readonly("levels", [](const Graph& g) { return to_vector(g.levels()); })
      .def_property_readonly("weights", [](const Graph& g) { return to_vector(g.weights()); })
      .def_property_readonly("adjacency", [](const Graph& g) { return to_vector(g.adjacency()); })
      .def("__len__", &Graph::size)
      .def("has_wildcards", &Graph::has_wildcards)
      .def(py::self == py::self);

  m.def("load_dataset", &load_dataset, py::arg("path"));
  m.def("generate_graph", [](const std::vector<Level>& l) { return generate_graph(l); });
  m.def("discover_tegs",
        [](const std::vector<Level>& l, std::size_t s) { return discover_tegs(l, s); },
        py::arg("levels"), py::arg("obs_per_epoch"));
  m.def("sum_graphs", &sum_graphs);
  m.def("global_graph", [](const std::vector<Graph>& g) { return global_graph(g); });
  m.def("resize", [](const Graph& g, const std::vector<Level>& l) { return resize(g, l); });

  m.def("list_metrics", &list_metrics);
  m.def("vectorize", [](const Graph& epoch, const Graph& global, const std::string& metric) {
    auto v = vectorize(epoch, global, parse_metric(metric));
    return py::make_tuple(v.p, v.q);
  });
  m.def("dissimilarity",
        [](const std::string& metric, const std::vector<double>& p, const std::vector<double>& q) {
          return dissimilarity(parse_metric(metric), p, q);
        },
        py::arg("metric"), py::arg("p"), py::arg("q"));

  py::class_<DetectorParams>(m, "DetectorParams")
      .def(py::init([](const std::string& metric, int n_bins, int n_obs_per_period, int alpha) {
             DetectorParams p{parse_metric(metric), n_bins, n_obs_per_period, alpha};
             p.validate();
             return p;
           }),
           py::arg("metric"), py::arg("n_bins") = 30, py::arg("n_obs_per_period") = 336,
           py::arg("alpha") = 5)
      .def_property_readonly("metric", [](const DetectorParams& p) { return std::string(metric_name(p.metric)); })
      .def_readonly("n_bins", &DetectorParams::n_bins)
      .def_readonly("n_obs_per_period", &DetectorParams::n_obs_per_period)
      .def_readonly("alpha", &DetectorParams::alpha);

  py::class_<Model>(m, "Model")
      .def_readonly("params", &Model::params)
      .def_readonly("discretizer", &Model::discretizer)
      .def_readonly("global_graph", &Model::global)
      .def_readonly("baseline", &Model::baseline)
      .def_readonly("time_to_build", &Model::time_to_build)
      .def(py::self == py::self);

  py::class_<DetectionOutcome>(m, "DetectionOutcome")
      .def_readonly("outliers", &DetectionOutcome::outliers)
      .def_readonly("n_periods", &DetectionOutcome::n_periods)
      .def_readonly("dissimilarities", &DetectionOutcome::dissimilarities)
      .def_readonly("threshold", &DetectionOutcome::threshold)
      .def_readonly("time_to_predict", &DetectionOutcome::time_to_predict);

  py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
      .def(py::init<long long, long long, long long, long long>(), py::arg("tp") = 0,
           py::arg("tn") = 0, py::arg("fp") = 0, py::arg("fn") = 0)
      .def_readonly("tp", &ConfusionMatrix::tp)
      .def_readonly("tn", &ConfusionMatrix::tn)
      .def_readonly("fp", &ConfusionMatrix::fp)
      .def_readonly("fn", &ConfusionMatrix::fn)
      .def("as_dict", [](const ConfusionMatrix& c) {
        py::dict d;
        d["tp"] = c.tp;
        d["tn"] = c.tn;
        d["fp"] = c.fp;
        d["fn"] = c.fn;
        return d;
      })
      .def(py::self + py::self)
      .def(py::self == py::self);

  m.def("build_model", &build_model, py::arg("train"), py::arg("params"));
  m.def("predict", &predict, py::arg("model"), py::arg("test"));
  m.def("threshold", [](const std::vector<double>& b, int alpha) { return threshold(b, alpha); },
        py::arg("baseline"), py::arg("alpha"));
  m.def("compute_confusion_matrix",
        [](const std::vector<int>& g, const std::vector<int>& p) { return compute_confusion_matrix(g, p); },
        py::arg("ground_truth"), py::arg("predictions"));
  m.def("accuracy", &accuracy);
  m.def("save_model", &save_model, py::arg("model"), py::arg("path"));
  m.def("load_model", &load_model, py::arg("path"));
  m.attr("RESULTS_HEADER") = std::string(kResultsHeader);
}
