#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <tuple>
#include <vector>

#include "qdmaps/cli.hpp"
#include "qdmaps/mapfile.hpp"
#include "qdmaps/markov.hpp"

namespace py = pybind11;

namespace {

using qdmaps::AMap;
using qdmaps::BMap;
using qdmaps::Complex;
using qdmaps::ComplexMatrix;

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from(const ComplexArray& arr) {
  if (arr.ndim() != 2) throw qdmaps::DimensionMismatch("expected a 2-D array");
  const auto r = arr.unchecked<2>();
  ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
  for (py::ssize_t i = 0; i < arr.shape(0); ++i)
    for (py::ssize_t j = 0; j < arr.shape(1); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
  return m;
}

py::array_t<Complex> array_from(const ComplexMatrix& m) {
  py::array_t<Complex> arr({m.nrows(), m.ncols()});
  auto w = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
  return arr;
}

// d of a d^2 x d^2 map matrix.
std::size_t map_dim(const ComplexMatrix& m) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(m.nrows()))));
  if (d < 2 || d * d != m.nrows() || m.nrows() != m.ncols())
    throw qdmaps::DimensionMismatch("map matrix must be d^2 x d^2 with d >= 2");
  return d;
}

AMap amap_from(const ComplexArray& arr) {
  ComplexMatrix m = matrix_from(arr);
  const std::size_t d = map_dim(m);
  return AMap(d, std::move(m));
}

BMap bmap_from(const ComplexArray& arr) {
  ComplexMatrix m = matrix_from(arr);
  const std::size_t d = map_dim(m);
  return BMap(d, std::move(m));
}

qdmaps::Subsystem subsystem_from(const std::string& which) {
  if (which == "first") return qdmaps::Subsystem::first;
  if (which == "second") return qdmaps::Subsystem::second;
  throw qdmaps::DomainError("subsystem must be 'first' or 'second'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum dynamical maps: A/B forms, CP witnesses, Markovianity, concurrence";

  const auto base = py::register_exception<qdmaps::Error>(m, "Error");
  py::register_exception<qdmaps::DimensionMismatch>(m, "DimensionMismatchError", base.ptr());
  py::register_exception<qdmaps::DomainError>(m, "DomainValueError", base.ptr());
  py::register_exception<qdmaps::SingularMatrix>(m, "SingularMatrixError", base.ptr());
  py::register_exception<qdmaps::NotHermitian>(m, "NotHermitianError", base.ptr());
  py::register_exception<qdmaps::SingularIntermediateMap>(m, "SingularIntermediateMapError",
                                                          base.ptr());
  py::register_exception<qdmaps::NotCP>(m, "NotCPError", base.ptr());
  py::register_exception<qdmaps::InvalidState>(m, "InvalidStateError", base.ptr());
  py::register_exception<qdmaps::InconsistentFlags>(m, "InconsistentFlagsError", base.ptr());
  py::register_exception<qdmaps::ParseError>(m, "MapParseError", base.ptr());

  // matcore surface
  m.def(
      "hermitian_eigs",
      [](const ComplexArray& a, double herm_tol) {
        const qdmaps::HermitianEigenResult res = qdmaps::hermitian_eigs(matrix_from(a), herm_tol);
        py::array_t<double> vals(res.eigenvalues.size());
        auto w = vals.mutable_unchecked<1>();
        for (std::size_t i = 0; i < res.eigenvalues.size(); ++i)
          w(static_cast<py::ssize_t>(i)) = res.eigenvalues[i];
        return py::make_tuple(vals, array_from(res.eigenvectors));
      },
      py::arg("a"), py::arg("herm_tol") = 1e-9,
      "Ascending eigenvalues and orthonormal eigenvector columns of a Hermitian matrix.");
  m.def(
      "partial_trace",
      [](const ComplexArray& a, std::size_t d1, std::size_t d2, const std::string& which) {
        return array_from(qdmaps::partial_trace(matrix_from(a), d1, d2, subsystem_from(which)));
      },
      py::arg("m"), py::arg("d1"), py::arg("d2"), py::arg("which") = "second");
  m.def(
      "realign",
      [](const ComplexArray& a, std::size_t d) {
        return array_from(qdmaps::realign(matrix_from(a), d));
      },
      py::arg("m"), py::arg("d"));
  m.def(
      "expm_hermitian_generator",
      [](const ComplexArray& h, double t) {
        return array_from(qdmaps::expm_hermitian_generator(matrix_from(h), t));
      },
      py::arg("h"), py::arg("t"), "U = exp(-i h t) for Hermitian h.");
  m.def("pauli_x", [] { return array_from(qdmaps::pauli_x()); });
  m.def("pauli_y", [] { return array_from(qdmaps::pauli_y()); });
  m.def("pauli_z", [] { return array_from(qdmaps::pauli_z()); });
  m.def(
      "max_entangled_projector",
      [](std::size_t d) { return array_from(qdmaps::max_entangled_projector(d)); },
      py::arg("d") = 2);

  // dynmaps surface: maps travel as d^2 x d^2 arrays
  m.def(
      "identity_amap", [](std::size_t d) { return array_from(qdmaps::identity_amap(d).m); },
      py::arg("d") = 2);
  m.def(
      "apply_amap",
      [](const ComplexArray& a, const ComplexArray& rho) {
        return array_from(qdmaps::apply_amap(amap_from(a), matrix_from(rho)));
      },
      py::arg("a"), py::arg("rho"));
  m.def(
      "a_to_b", [](const ComplexArray& a) { return array_from(qdmaps::a_to_b(amap_from(a)).m); },
      py::arg("a"));
  m.def(
      "b_to_a", [](const ComplexArray& b) { return array_from(qdmaps::b_to_a(bmap_from(b)).m); },
      py::arg("b"));
  m.def(
      "compose",
      [](const ComplexArray& a2, const ComplexArray& a1) {
        return array_from(qdmaps::compose(amap_from(a2), amap_from(a1)).m);
      },
      py::arg("a2"), py::arg("a1"), "Map product: a1 acts first.");
  m.def(
      "intermediate_amap",
      [](const ComplexArray& a_t2, const ComplexArray& a_t1, double singular_tol) {
        return array_from(
            qdmaps::intermediate_amap(amap_from(a_t2), amap_from(a_t1), singular_tol).m);
      },
      py::arg("a_t2"), py::arg("a_t1"), py::arg("singular_tol") = 1e-12,
      "A(t2,t1) = A(t2,0) A(t1,0)^-1.");
  m.def(
      "choi_from_action",
      [](const std::function<py::object(py::array_t<Complex>)>& action, std::size_t d,
         double linearity_tol) {
        const qdmaps::MapAction wrapped = [&action](const ComplexMatrix& rho) {
          const py::object out = action(array_from(rho));
          return matrix_from(out.cast<ComplexArray>());
        };
        return array_from(qdmaps::choi_from_action(wrapped, d, linearity_tol).m);
      },
      py::arg("action"), py::arg("d"), py::arg("linearity_tol") = 1e-8,
      "B matrix of a linear map given only its action on density matrices.");
  m.def(
      "min_choi_eigenvalue",
      [](const ComplexArray& a) { return qdmaps::min_choi_eigenvalue(amap_from(a)); },
      py::arg("a"));
  m.def(
      "diagnose",
      [](const ComplexArray& a, double cp_tol, int n_samples, std::uint64_t seed) {
        return qdmaps::diagnose(amap_from(a), cp_tol, n_samples, seed);
      },
      py::arg("a"), py::arg("cp_tol") = 1e-10, py::arg("n_samples") = 10000,
      py::arg("seed") = 12345);
  m.def(
      "kraus_from_bmap",
      [](const ComplexArray& b, double cp_tol) {
        std::vector<py::array_t<Complex>> out;
        for (const ComplexMatrix& k : qdmaps::kraus_from_bmap(bmap_from(b), cp_tol))
          out.push_back(array_from(k));
        return out;
      },
      py::arg("b"), py::arg("cp_tol") = 1e-10);

  py::class_<qdmaps::MapDiagnostics>(m, "MapDiagnostics")
      .def_readonly("tp_defect", &qdmaps::MapDiagnostics::tp_defect)
      .def_readonly("herm_defect", &qdmaps::MapDiagnostics::herm_defect)
      .def_readonly("min_choi_eig", &qdmaps::MapDiagnostics::min_choi_eig)
      .def_readonly("block_pos_min", &qdmaps::MapDiagnostics::block_pos_min)
      .def_readonly("is_cp", &qdmaps::MapDiagnostics::is_cp)
      .def_readonly("is_tp", &qdmaps::MapDiagnostics::is_tp)
      .def("__repr__", [](const qdmaps::MapDiagnostics& d) {
        return "MapDiagnostics(tp_defect=" + std::to_string(d.tp_defect) +
               ", herm_defect=" + std::to_string(d.herm_defect) +
               ", min_choi_eig=" + std::to_string(d.min_choi_eig) +
               ", block_pos_min=" + std::to_string(d.block_pos_min) +
               ", is_cp=" + (d.is_cp ? "True" : "False") +
               ", is_tp=" + (d.is_tp ? "True" : "False") + ")";
      });

  // map files
  m.def(
      "read_map_file",
      [](const std::string& path) {
        const qdmaps::MapFile mf = qdmaps::read_map_file(path);
        return py::make_tuple(mf.kind == qdmaps::MapKind::A ? "A" : "B", mf.d, array_from(mf.m));
      },
      py::arg("path"), "Returns (kind, d, matrix).");
  m.def(
      "write_map_file",
      [](const std::string& path, const ComplexArray& arr, const std::string& kind) {
        if (kind == "A")
          qdmaps::write_map_file(path, amap_from(arr));
        else if (kind == "B")
          qdmaps::write_map_file(path, bmap_from(arr));
        else
          throw qdmaps::DomainError("kind must be 'A' or 'B'");
      },
      py::arg("path"), py::arg("m"), py::arg("kind"));

  // models surface
  py::class_<qdmaps::PFunction>(m, "PFunction")
      .def_static("exponential", &qdmaps::PFunction::exponential, py::arg("alpha"))
      .def_static("stretched", &qdmaps::PFunction::stretched, py::arg("alpha"), py::arg("beta"))
      .def_static("cospower", &qdmaps::PFunction::cospower, py::arg("a"), py::arg("n"));
  m.def("p_eval", &qdmaps::p_eval, py::arg("f"), py::arg("t"));

  m.def(
      "werner_bmap", [](double p) { return array_from(qdmaps::werner_bmap(p).m); }, py::arg("p"));
  m.def(
      "werner_amap", [](double p) { return array_from(qdmaps::werner_amap(p).m); }, py::arg("p"));
  m.def(
      "werner_intermediate_bmap",
      [](double p1, double p2, double singular_tol) {
        return array_from(qdmaps::werner_intermediate_bmap(p1, p2, singular_tol).m);
      },
      py::arg("p1"), py::arg("p2"), py::arg("singular_tol") = 1e-12);
  m.def(
      "spinstar_amap",
      [](double g, int n, double t) {
        return array_from(qdmaps::spinstar_amap(qdmaps::SpinStarModel{g, n}, t).m);
      },
      py::arg("g"), py::arg("n"), py::arg("t"));
  m.def(
      "spinstar_amap_dilation",
      [](double g, int n, double t) {
        return array_from(qdmaps::spinstar_amap_dilation(qdmaps::SpinStarModel{g, n}, t).m);
      },
      py::arg("g"), py::arg("n"), py::arg("t"));
  m.def(
      "spinstar_intermediate_bmap",
      [](double g, int n, double t1, double t2, double singular_tol) {
        return array_from(
            qdmaps::spinstar_intermediate_bmap(qdmaps::SpinStarModel{g, n}, t1, t2, singular_tol)
                .m);
      },
      py::arg("g"), py::arg("n"), py::arg("t1"), py::arg("t2"), py::arg("singular_tol") = 1e-12);
  m.def(
      "sigmazx_amap",
      [](double omega, double t) {
        return array_from(qdmaps::sigmazx_amap(qdmaps::SigmaZXModel{omega}, t).m);
      },
      py::arg("omega"), py::arg("t"));
  m.def(
      "sigmazx_amap_dilation",
      [](double omega, double t) {
        return array_from(qdmaps::sigmazx_amap_dilation(qdmaps::SigmaZXModel{omega}, t).m);
      },
      py::arg("omega"), py::arg("t"));
  m.def(
      "sigmazx_intermediate_bmap",
      [](double omega, double t1, double t2, double singular_tol) {
        return array_from(
            qdmaps::sigmazx_intermediate_bmap(qdmaps::SigmaZXModel{omega}, t1, t2, singular_tol)
                .m);
      },
      py::arg("omega"), py::arg("t1"), py::arg("t2"), py::arg("singular_tol") = 1e-12);

  py::class_<qdmaps::ModelFamily>(m, "ModelFamily")
      .def_static("werner", &qdmaps::ModelFamily::werner, py::arg("p"))
      .def_static(
          "spinstar",
          [](double g, int n) { return qdmaps::ModelFamily::spinstar(qdmaps::SpinStarModel{g, n}); },
          py::arg("g"), py::arg("n"))
      .def_static(
          "sigmazx",
          [](double omega) { return qdmaps::ModelFamily::sigmazx(qdmaps::SigmaZXModel{omega}); },
          py::arg("omega"))
      .def(
          "amap_at",
          [](const qdmaps::ModelFamily& f, double t) { return array_from(f.amap_at(t).m); },
          py::arg("t"))
      .def(
          "intermediate_bmap_at",
          [](const qdmaps::ModelFamily& f, double t1, double t2, double singular_tol) {
            return array_from(f.intermediate_bmap_at(t1, t2, singular_tol).m);
          },
          py::arg("t1"), py::arg("t2"), py::arg("singular_tol") = 1e-12);

  // markov surface
  py::enum_<qdmaps::Verdict>(m, "Verdict")
      .value("Markov", qdmaps::Verdict::Markov)
      .value("NonMarkov", qdmaps::Verdict::NonMarkov)
      .value("NonMarkovInitialCorrelations", qdmaps::Verdict::NonMarkovInitialCorrelations);

  py::class_<qdmaps::ClassificationRecord>(m, "ClassificationRecord")
      .def_readonly("cp_t1", &qdmaps::ClassificationRecord::cp_t1)
      .def_readonly("cp_t2", &qdmaps::ClassificationRecord::cp_t2)
      .def_readonly("cp_intermediate", &qdmaps::ClassificationRecord::cp_intermediate)
      .def_readonly("verdict", &qdmaps::ClassificationRecord::verdict)
      .def("__repr__", [](const qdmaps::ClassificationRecord& r) {
        std::string inter = r.cp_intermediate ? (*r.cp_intermediate ? "True" : "False") : "None";
        return std::string("ClassificationRecord(cp_t1=") + (r.cp_t1 ? "True" : "False") +
               ", cp_t2=" + (r.cp_t2 ? "True" : "False") + ", cp_intermediate=" + inter +
               ", verdict=" + qdmaps::verdict_name(r.verdict) + ")";
      });

  m.def("classify", &qdmaps::classify, py::arg("cp_t1"), py::arg("cp_t2"),
        py::arg("cp_intermediate"));
  m.def(
      "scan_divisibility",
      [](const qdmaps::ModelFamily& family, const std::vector<double>& grid, double cp_tol,
         double singular_tol) {
        std::vector<std::tuple<double, double, double, std::optional<bool>, double>> rows;
        for (const qdmaps::ScanRow& r :
             qdmaps::scan_divisibility(family, grid, cp_tol, singular_tol).rows)
          rows.emplace_back(r.t1, r.t2, r.min_choi_eig, r.cp, r.semigroup_defect);
        return rows;
      },
      py::arg("family"), py::arg("grid"), py::arg("cp_tol") = 1e-10,
      py::arg("singular_tol") = 1e-12,
      "Rows (t1, t2, min_choi_eig, cp, semigroup_defect); cp is None on singular pairs.");
  m.def(
      "concurrence",
      [](const ComplexArray& rho, double state_tol) {
        return qdmaps::concurrence(matrix_from(rho), state_tol);
      },
      py::arg("rho"), py::arg("state_tol") = 1e-8);
  m.def(
      "concurrence_trajectory",
      [](const qdmaps::PFunction& f, const std::vector<double>& times) {
        std::vector<std::tuple<double, double, double>> rows;
        for (const qdmaps::ConcurrencePoint& p : qdmaps::concurrence_trajectory(f, times).rows)
          rows.emplace_back(p.t, p.p, p.concurrence);
        return rows;
      },
      py::arg("f"), py::arg("times"), "Rows (t, p, concurrence).");
}
