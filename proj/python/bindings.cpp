#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dfm/classify.hpp"
#include "dfm/matrix_io.hpp"
#include "dfm/report.hpp"
#include "dfm/wronski.hpp"

namespace py = pybind11;
using namespace dfm;

namespace {

using Grid = std::vector<std::vector<std::string>>;

MatF from_grid(const Grid& g) {
  Json j = Json::array();
  for (const auto& row : g) j.push_back(row);
  return parse_matrix_json(j.dump());
}

Grid to_grid(const MatF& m) {
  Grid g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i].push_back(m(i, j).str());
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Q(t) matrix analysis; reports are returned as JSON text.";

  // translators run newest first, so the base class goes first
  py::register_exception<Error>(m, "DomainError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);

  m.def("parse_matrix", [](const std::string& text) { return to_grid(parse_matrix_json(text)); },
        "Parse matrix-file JSON text; returns canonical entry strings.");
  m.def("canonical", [](const Grid& g) { return to_grid(from_grid(g)); });
  m.def("check_commute", [](const Grid& g) { return commutes_with_derivative(from_grid(g)); });
  m.def("classify", [](const Grid& g) { return to_json(classify(from_grid(g))).dump(); });
  m.def(
      "decompose",
      [](const Grid& g, std::optional<int> bound) {
        MatF mf = from_grid(g);
        const int b = bound.value_or(default_root_bound(mf));
        Json j = to_json(block_decompose(mf, b));
        j["root_bound"] = b;
        return j.dump();
      },
      py::arg("entries"), py::arg("root_bound") = py::none());
  m.def(
      "diagonalize",
      [](const Grid& g, std::optional<int> bound) {
        MatF mf = from_grid(g);
        const int b = bound.value_or(default_root_bound(mf));
        return diagonalization_json(k_diagonalize(mf, b), b).dump();
      },
      py::arg("entries"), py::arg("root_bound") = py::none());
  m.def("wronskian", [](const std::vector<std::string>& exprs) {
    std::vector<RatFunc> fs;
    for (const auto& e : exprs) fs.push_back(parse_ratfunc(e));
    return to_json(constant_rank(fs), fs).dump();
  });
  m.def(
      "make_type2",
      [](const std::vector<std::string>& f, std::uint64_t seed) {
        VecF v;
        for (const auto& e : f) v.push_back(parse_ratfunc(e));
        return to_grid(make_type2(v, seed));
      },
      py::arg("f"), py::arg("seed") = 0);
  m.def(
      "newton_experiment",
      [](std::size_t n, std::size_t r, std::size_t trials, std::uint64_t seed, bool near_type2, int max_iters,
         double residual_tol, double commute_tol, double damping, double perturbation, bool verbose) {
        newton::NewtonConfig cfg;
        cfg.seed = seed;
        cfg.max_iters = max_iters;
        cfg.residual_tol = residual_tol;
        cfg.commute_tol = commute_tol;
        cfg.step_damping = damping;
        newton::ExperimentOptions o;
        o.near_type2 = near_type2;
        o.perturbation = perturbation;
        o.keep_trials = verbose;
        py::gil_scoped_release release;
        return to_json(newton::run_experiment(n, r, trials, cfg, o)).dump();
      },
      py::arg("n"), py::arg("r"), py::arg("trials"), py::arg("seed") = 0, py::arg("near_type2") = false,
      py::arg("max_iters") = 100, py::arg("residual_tol") = 1e-10, py::arg("commute_tol") = 1e-6,
      py::arg("damping") = 1.0, py::arg("perturbation") = 1e-2, py::arg("verbose") = false);
}
