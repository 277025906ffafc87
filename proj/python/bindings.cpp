#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatsp/covers.hpp"
#include "quatsp/errors.hpp"
#include "quatsp/relsvd.hpp"
#include "quatsp/spectral.hpp"
#include "quatsp/stiefel.hpp"
#include "quatsp/study.hpp"

namespace py = pybind11;
using namespace quatsp;

namespace {

// Matrices cross the boundary as float64 arrays of shape (rows, cols, 4),
// the last axis holding the [w, x, y, z] components.
QMatrix from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 3 || a.shape(2) != 4)
        throw py::value_error("expected an array of shape (rows, cols, 4)");
    QMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    auto r = a.unchecked<3>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i)
        for (py::ssize_t j = 0; j < a.shape(1); ++j)
            m(i, j) = Quaternion{r(i, j, 0), r(i, j, 1), r(i, j, 2), r(i, j, 3)};
    return m;
}

py::array_t<double> to_array(const QMatrix& m) {
    py::array_t<double> a({m.rows(), m.cols(), std::size_t{4}});
    auto w = a.mutable_unchecked<3>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m(i, j);
            w(i, j, 0) = q.w;
            w(i, j, 1) = q.x;
            w(i, j, 2) = q.y;
            w(i, j, 3) = q.z;
        }
    return a;
}

py::dict relsvd_dict(const RelativeSvd& d) {
    py::dict out;
    out["n"] = d.n;
    out["k"] = d.k;
    out["a"] = to_array(d.a);
    out["b"] = to_array(d.b);
    out["m"] = to_array(d.m);
    out["l"] = to_array(d.l);
    out["thetas"] = d.thetas;
    out["ones"] = d.ones;
    out["zeros"] = d.zeros;
    return out;
}

RelativeSvd relsvd_from_dict(const py::dict& d) {
    RelativeSvd out{d["n"].cast<std::size_t>(),      d["k"].cast<std::size_t>(),
                    from_array(d["a"].cast<py::array_t<double>>()),
                    from_array(d["b"].cast<py::array_t<double>>()),
                    from_array(d["m"].cast<py::array_t<double>>()),
                    from_array(d["l"].cast<py::array_t<double>>()),
                    d["thetas"].cast<std::vector<double>>(),
                    d["ones"].cast<std::size_t>(),   d["zeros"].cast<std::size_t>()};
    return out;
}

py::dict cover_dict(const CoverReport& rep) {
    py::dict out;
    out["samples"] = rep.samples;
    out["probes"] = rep.probes;
    out["uncovered"] = rep.uncovered;
    out["min_best_margin"] = rep.min_best_margin;
    out["witness"] =
        rep.witness ? py::object(to_array(rep.witness->stacked())) : py::object(py::none());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Quaternionic symplectic matrix toolkit";

    py::register_exception<NumericalError>(mod, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<NotSymplecticError>(mod, "NotSymplecticError", PyExc_ValueError);

    mod.def("study_det", [](const py::array_t<double>& m) { return study_det(from_array(m)); },
            py::arg("m"), "Study determinant of a square quaternionic matrix.");

    mod.def(
        "is_invertible",
        [](const py::array_t<double>& m, double tol) {
            Invertibility v = is_invertible(from_array(m), tol);
            return py::make_tuple(v.invertible, v.margin);
        },
        py::arg("m"), py::arg("tol") = 1e-9,
        "(invertible, margin): margin is the relative smallest singular value.");

    mod.def(
        "svd",
        [](const py::array_t<double>& m) {
            QSvd s = qsvd(from_array(m));
            return py::make_tuple(to_array(s.u), s.sigma, to_array(s.v));
        },
        py::arg("m"), "Quaternionic SVD (u, sigma, v) with m = u @ diag(sigma) @ v*.");

    mod.def(
        "herm_eig",
        [](const py::array_t<double>& m, double tol) {
            HermEig e = herm_eig(from_array(m), tol);
            return py::make_tuple(e.values, to_array(e.q));
        },
        py::arg("m"), py::arg("tol") = 1e-9,
        "Real eigenvalues (descending) and symplectic eigenvectors of a Hermitian matrix.");

    mod.def(
        "is_admissible",
        [](const py::array_t<double>& p, std::size_t n, double tol) {
            AdmissibilityReport r = is_admissible(from_array(p), n, tol);
            py::dict out;
            out["admissible"] = r.admissible;
            out["excess"] = r.excess;
            out["ones"] = r.classes.ones;
            out["interior"] = r.classes.interior;
            out["zeros"] = r.classes.zeros;
            return out;
        },
        py::arg("p"), py::arg("n"), py::arg("tol") = 1e-9,
        "Can the square block p be completed to an orthonormal frame in H^n?");

    mod.def(
        "complete",
        [](const py::array_t<double>& p, std::size_t n, double tol) {
            return to_array(complete(from_array(p), n, tol).stacked());
        },
        py::arg("p"), py::arg("n"), py::arg("tol") = 1e-9,
        "Canonical completion of an admissible block to a stacked n x k frame.");

    mod.def(
        "decompose",
        [](const py::array_t<double>& a, std::size_t k, double tol) {
            return relsvd_dict(decompose(from_array(a), k, tol));
        },
        py::arg("a"), py::arg("k"), py::arg("tol") = 1e-9,
        "Relative SVD of a symplectic matrix; returns the factor dictionary.");

    mod.def("rebuild", [](const py::dict& d) { return to_array(rebuild(relsvd_from_dict(d))); },
            py::arg("d"), "Reassemble the matrix from a decompose() dictionary.");

    mod.def(
        "sample_sp",
        [](std::size_t n, std::uint64_t seed) { return to_array(sample_sp(n, seed)); },
        py::arg("n"), py::arg("seed") = 0, "Haar-distributed symplectic matrix.");

    mod.def(
        "sample_stiefel",
        [](std::size_t n, std::size_t k, std::uint64_t seed) {
            return to_array(sample_stiefel(n, k, seed).stacked());
        },
        py::arg("n"), py::arg("k"), py::arg("seed") = 0,
        "Uniform orthonormal k-frame in H^n, stacked as an n x k matrix.");

    mod.def(
        "verify_cover",
        [](std::size_t k, std::size_t j, std::size_t samples, std::uint64_t seed, double tol) {
            return cover_dict(
                verify_cover(spk_cover(k, j), SamplerKind::sp_k_embedded, samples, seed, tol));
        },
        py::arg("k"), py::arg("j"), py::arg("samples") = 10000, py::arg("seed") = 0,
        py::arg("tol") = 1e-12, "Monte Carlo check of the deficiency-j Cayley cover of Sp(k).");

    mod.def(
        "verify_sp2_cover",
        [](std::size_t samples, std::uint64_t seed, double tol) {
            return cover_dict(
                verify_cover(sp2_cover(), SamplerKind::sp_k_embedded, samples, seed, tol));
        },
        py::arg("samples") = 10000, py::arg("seed") = 0, py::arg("tol") = 1e-12,
        "Monte Carlo check of the four-set Cayley cover of Sp(2).");

    mod.def(
        "ls_bounds",
        [](std::size_t n, std::size_t k) {
            LsBounds b = ls_bounds(n, k);
            py::dict out;
            out["n"] = b.n;
            out["k"] = b.k;
            out["lower"] = b.lower;
            out["upper_dim"] = b.upper_dim;
            out["exact"] = b.exact ? py::object(py::int_(*b.exact)) : py::object(py::none());
            return out;
        },
        py::arg("n"), py::arg("k"), "Category bounds for k-frames in H^n.");
}
