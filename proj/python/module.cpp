#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boolinfo/chordcheck.hpp"
#include "boolinfo/compression.hpp"
#include "boolinfo/infomeasure.hpp"
#include "boolinfo/talpha.hpp"
#include "boolinfo/verify.hpp"

namespace py = pybind11;
using namespace boolinfo;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

/// Runs fn without the GIL and converts its JSON result with the GIL held.
template <class Fn>
py::object released(Fn&& fn) {
  nlohmann::ordered_json j;
  {
    py::gil_scoped_release release;
    j = fn();
  }
  return to_python(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mutual information of Boolean functions under a binary symmetric channel";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<TruthTable>(m, "TruthTable")
      .def(py::init<int>(), py::arg("n"), "Empty zero set (b == 1) on n inputs.")
      .def_static("from_hex", [](const std::string& s) { return from_hex(s); })
      .def_static("from_points",
                  [](int n, const std::vector<Point>& pts) { return TruthTable::from_points(n, pts); },
                  py::arg("n"), py::arg("points"))
      .def_static("initial_segment", &initial_segment, py::arg("n"), py::arg("size"))
      .def_property_readonly("arity", &TruthTable::arity)
      .def_property_readonly("hex", [](const TruthTable& t) { return to_hex(t); })
      .def("count", &TruthTable::count)
      .def("points", &TruthTable::points)
      .def("contains", &TruthTable::contains)
      .def("complement", &TruthTable::complement)
      .def("is_lex", [](const TruthTable& t) { return is_lex(t); })
      .def("__eq__", [](const TruthTable& a, const TruthTable& b) { return a == b; })
      .def("__hash__", [](const TruthTable& t) { return py::hash(py::str(to_hex(t))); })
      .def("__len__", &TruthTable::count)
      .def("__repr__", [](const TruthTable& t) { return "TruthTable('" + to_hex(t) + "')"; });

  m.def("binary_entropy", &binary_entropy, py::arg("p"));

  m.def(
      "posterior",
      [](const TruthTable& b, double alpha, bool naive) {
        const ChannelParam ch(alpha);
        return (naive ? posterior_naive(b, ch) : posterior_transform(b, ch)).values;
      },
      py::arg("table"), py::arg("alpha"), py::arg("naive") = false,
      "Pr{b = 0 | Y^n = y} for every y, indexed like the truth table.");
  m.def(
      "cond_entropy", [](const TruthTable& b, double alpha) { return cond_entropy(b, ChannelParam(alpha)); },
      py::arg("table"), py::arg("alpha"));
  m.def(
      "mutual_info", [](const TruthTable& b, double alpha) { return mutual_info(b, ChannelParam(alpha)); },
      py::arg("table"), py::arg("alpha"));
  m.def(
      "mutual_info_single",
      [](const TruthTable& b, double alpha, int i) { return mutual_info_single(b, ChannelParam(alpha), i); },
      py::arg("table"), py::arg("alpha"), py::arg("coordinate"));
  m.def(
      "sum_single_mi", [](const TruthTable& b, double alpha) { return sum_single_mi(b, ChannelParam(alpha)); },
      py::arg("table"), py::arg("alpha"));
  m.def("edge_boundary", &edge_boundary, py::arg("table"));

  m.def(
      "compress", [](const TruthTable& b, const std::vector<int>& coords) { return compress(b, CoordSet(coords)); },
      py::arg("table"), py::arg("coords"), "Coordinates are 1-based and strictly increasing.");
  m.def(
      "is_compressed",
      [](const TruthTable& b, const std::vector<int>& coords) { return is_compressed(b, CoordSet(coords)); },
      py::arg("table"), py::arg("coords"));
  m.def("in_compressed_family", &in_compressed_family, py::arg("table"));
  m.def("two_compress_fixpoint", &two_compress_fixpoint, py::arg("table"));
  m.def("enumerate_sn", &enumerate_sn, py::arg("n"), py::arg("max_arity") = kMaxEnumerationArity,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "find_triple_counterexample",
      [](int n, double alpha) -> py::object {
        std::optional<TripleCounterexample> hit;
        {
          py::gil_scoped_release release;
          hit = find_triple_counterexample(n, ChannelParam(alpha));
        }
        if (!hit) return py::none();
        std::vector<int> coords(hit->coords.begin(), hit->coords.end());
        return py::make_tuple(hit->table, coords, hit->delta);
      },
      py::arg("n"), py::arg("alpha"), "(table, coords, entropy increase) or None.");

  m.def(
      "t_alpha", [](int depth, std::uint64_t k, double alpha) { return t_alpha(LexSpec(depth, k), ChannelParam(alpha)); },
      py::arg("depth"), py::arg("k"), py::arg("alpha"), "T_alpha at p = k / 2^depth.");
  m.def(
      "takagi", [](int depth, std::uint64_t k) { return takagi(LexSpec(depth, k)); }, py::arg("depth"), py::arg("k"));
  m.def(
      "takagi_limit_gap",
      [](int depth, std::uint64_t k, double alpha) { return takagi_limit_gap(LexSpec(depth, k), ChannelParam(alpha)); },
      py::arg("depth"), py::arg("k"), py::arg("alpha"));

  m.def(
      "test_inequality",
      [](double alpha, int depth_cap, double epsilon) {
        return released([&] { return to_json(test_inequality(ChannelParam(alpha), depth_cap, epsilon)); });
      },
      py::arg("alpha"), py::arg("depth_cap") = kDefaultChordDepthCap, py::arg("epsilon") = kDefaultChordEpsilon,
      "Chord certificate as a dict.");
  m.def(
      "sweep",
      [](double start, double end, double step, int depth_cap, double epsilon, int threads) {
        return released([&] {
          auto out = nlohmann::ordered_json::array();
          for (const auto& cert : sweep(start, end, step, depth_cap, epsilon, threads)) out.push_back(to_json(cert));
          return out;
        });
      },
      py::arg("alpha_start"), py::arg("alpha_end"), py::arg("alpha_step"),
      py::arg("depth_cap") = kDefaultChordDepthCap, py::arg("epsilon") = kDefaultChordEpsilon, py::arg("threads") = 1);

  auto grid_or_default = [](std::optional<std::vector<double>> alphas) {
    return alphas ? *alphas : default_alpha_grid();
  };
  m.def(
      "verify_conj1",
      [=](int n, std::optional<std::vector<double>> alphas, double tolerance, int threads, bool timing) {
        const auto grid = grid_or_default(alphas);
        return released([&] { return to_json(verify_conj1(n, grid, {tolerance, threads}), timing); });
      },
      py::arg("n"), py::arg("alphas") = py::none(), py::arg("tolerance") = 1e-9, py::arg("threads") = 0,
      py::arg("timing") = false);
  m.def(
      "verify_conj2",
      [=](int n, std::optional<std::vector<double>> alphas, double tolerance, int threads, bool timing) {
        const auto grid = grid_or_default(alphas);
        return released([&] { return to_json(verify_conj2(n, grid, {tolerance, threads}), timing); });
      },
      py::arg("n"), py::arg("alphas") = py::none(), py::arg("tolerance") = 1e-9, py::arg("threads") = 0,
      py::arg("timing") = false);
  m.def(
      "verify_sum_inequality",
      [=](int n, std::optional<std::vector<double>> alphas, const std::string& mode, double tolerance, int threads,
          bool timing) {
        if (mode != "exhaustive" && mode != "compressed") throw py::value_error("mode is 'exhaustive' or 'compressed'");
        const auto grid = grid_or_default(alphas);
        const auto sum_mode = mode == "exhaustive" ? SumMode::Exhaustive : SumMode::Compressed;
        return released([&] { return to_json(verify_sum_inequality(n, grid, sum_mode, {tolerance, threads}), timing); });
      },
      py::arg("n"), py::arg("alphas") = py::none(), py::arg("mode") = "exhaustive", py::arg("tolerance") = 1e-9,
      py::arg("threads") = 0, py::arg("timing") = false);
  m.def(
      "verify_harper",
      [](int n, int threads, bool timing) {
        return released([&] { return to_json(verify_harper(n, {0.0, threads}), timing); });
      },
      py::arg("n"), py::arg("threads") = 0, py::arg("timing") = false);
  m.def(
      "verify_triple_counterexample",
      [](std::vector<double> alphas, int n_min, int n_max, int threads, bool timing) {
        return released(
            [&] { return to_json(verify_triple_counterexample(alphas, n_min, n_max, {1e-9, threads}), timing); });
      },
      py::arg("alphas") = std::vector<double>{0.05, 0.1, 0.2, 0.3}, py::arg("n_min") = 3, py::arg("n_max") = 5,
      py::arg("threads") = 0, py::arg("timing") = false);
}
