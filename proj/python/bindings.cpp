// Python bindings for the core library (module bezier_ifs._core).

#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/ifs.hpp"
#include "bezier_ifs/metrics.hpp"
#include "bezier_ifs/orbits.hpp"
#include "bezier_ifs/scaling.hpp"
#include "bezier_ifs/takagi.hpp"
#include "bezier_ifs/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bezier_ifs;

namespace {

using CArray = py::array_t<std::complex<double>>;

CArray to_array(const std::vector<Complex>& pts) {
  return CArray(static_cast<py::ssize_t>(pts.size()), pts.data());
}

PointCloud to_cloud(const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
  PointCloud c;
  const std::complex<double>* p = a.data();
  c.points.assign(p, p + a.size());
  return c;
}

std::vector<std::vector<Complex>> to_rows(const Matrix<Complex>& m) {
  std::vector<std::vector<Complex>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return rows;
}

// (numerator, exponent) pairs; the Python side builds Fractions.
std::vector<std::pair<py::int_, std::uint32_t>> to_pairs(const IBetaPoly& p) {
  std::vector<std::pair<py::int_, std::uint32_t>> out;
  for (const Dyadic& c : p.coeffs())
    out.emplace_back(py::int_(py::str(c.numerator().str())), c.exponent());
  return out;
}

DigitSeq parse_word(const std::string& bits) { return DigitSeq::parse(bits); }

py::dict row_dict(const ConvergenceRow& r) {
  py::dict d;
  d["beta"] = r.beta;
  d["m"] = r.m;
  d["depth"] = r.depth;
  d["grid"] = r.grid;
  d["d_H"] = r.d_H;
  d["envelope"] = r.envelope;
  d["allowance"] = r.allowance;
  d["envelope_defined"] = r.envelope_defined;
  d["pass"] = r.pass;
  d["points"] = r.points;
  d["subsampled"] = r.subsampled;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Attractors of complex de Casteljau subdivision and the Takagi limit";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<CanonicalizationError>(m, "CanonicalizationError", PyExc_ValueError);

  m.def("is_hyperbolic", &is_hyperbolic, py::arg("t"));
  m.def("joint_spectral_radius", &joint_spectral_radius, py::arg("t"));

  m.def(
      "eval_point",
      [](const std::vector<Complex>& controls, Complex t) { return eval_point<Complex>(controls, t); },
      py::arg("controls"), py::arg("t"));
  m.def(
      "subdivide",
      [](const std::vector<Complex>& controls, Complex t) {
        auto s = subdivide<Complex>(controls, t);
        return py::make_tuple(s.left, s.right);
      },
      py::arg("controls"), py::arg("t"));
  m.def(
      "triangular_forms",
      [](int n, Complex t) {
        const auto f = triangular_forms(n, t);
        return py::make_tuple(to_rows(f.D), to_rows(f.T));
      },
      py::arg("n"), py::arg("t"), "(D, T): the binomial conjugates of L(t) and R(t) as nested lists.");

  m.def(
      "control_attractor",
      [](const std::vector<Complex>& controls, Complex t, int depth, std::size_t budget, unsigned threads) {
        IterateOptions opt;
        opt.budget = budget;
        opt.threads = threads;
        AttractorResult r;
        {
          py::gil_scoped_release release;
          r = control_attractor(controls, t, depth, opt);
        }
        return to_array(r.projected.points);
      },
      py::arg("controls"), py::arg("t"), py::arg("depth") = 20, py::arg("budget") = kDefaultBudget,
      py::arg("threads") = 0);
  m.def(
      "scaled_attractor",
      [](double beta, int depth, std::size_t budget, unsigned threads) {
        AttractorCloud a;
        {
          py::gil_scoped_release release;
          a = scaled_attractor(beta, depth, budget, threads);
        }
        return to_array(a.cloud.points);
      },
      py::arg("beta"), py::arg("depth") = 15, py::arg("budget") = kDefaultBudget, py::arg("threads") = 0);

  m.def("takagi", py::overload_cast<double, int>(&takagi), py::arg("x"), py::arg("depth") = kTakagiDepth);
  m.def(
      "takagi_graph", [](int grid) { return to_array(takagi_graph(grid).points); }, py::arg("grid"));
  m.def("takagi_envelope", &takagi_envelope, py::arg("beta"));
  m.def(
      "convergence_sweep",
      [](std::vector<double> betas, int depth, int grid, std::size_t budget, int degree) {
        SweepOptions opt;
        opt.depth = depth;
        opt.grid = grid;
        opt.budget = budget;
        std::vector<ConvergenceRow> rows;
        {
          py::gil_scoped_release release;
          rows = degree_m_sweep(degree, std::move(betas), opt);
        }
        py::list out;
        for (const auto& r : rows) out.append(row_dict(r));
        return out;
      },
      py::arg("betas"), py::arg("depth") = 15, py::arg("grid") = 12, py::arg("budget") = kDefaultBudget,
      py::arg("m") = 1);

  m.def(
      "hausdorff",
      [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a,
         const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& b) {
        const auto r = hausdorff(to_cloud(a), to_cloud(b));
        py::dict d;
        d["d_AB"] = r.d_AB;
        d["d_BA"] = r.d_BA;
        d["d_H"] = r.d_H;
        d["witness"] = py::make_tuple(r.witness_a, r.witness_b);
        return d;
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "z_poly_pairs", [](const std::string& word, std::size_t n) { return to_pairs(z_poly(parse_word(word), n)); },
      py::arg("word"), py::arg("n"));
  m.def(
      "vector_field_v", [](double alpha, std::size_t n) { return vector_field_v(alpha, n); }, py::arg("alpha"),
      py::arg("n") = 16);
  m.def(
      "vector_field_vm", [](double x, int degree, std::size_t n) { return vector_field_vm(x, degree, n); },
      py::arg("x"), py::arg("m"), py::arg("n") = 16);

  m.def(
      "verify",
      [](int n, int word_length, bool exact, int samples, std::uint64_t seed, const std::string& perturb) {
        VerifyOptions opt;
        opt.n = n;
        opt.word_length = word_length;
        opt.exact = exact;
        opt.samples = samples;
        opt.seed = seed;
        opt.perturb = parse_perturb(perturb);
        std::vector<CheckResult> checks;
        {
          py::gil_scoped_release release;
          checks = run_verify(opt);
        }
        py::list out;
        for (const auto& c : checks) out.append(py::make_tuple(c.id, c.pass, c.detail));
        return out;
      },
      py::arg("n") = 6, py::arg("word_length") = 10, py::arg("exact") = true, py::arg("samples") = 20,
      py::arg("seed") = 1, py::arg("perturb") = "none");
}
