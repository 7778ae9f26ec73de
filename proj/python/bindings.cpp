#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cubecover/bounds.hpp"
#include "cubecover/covering.hpp"
#include "cubecover/polychromatic.hpp"
#include "cubecover/solver.hpp"
#include "cubecover/subcube.hpp"

namespace py = pybind11;
using namespace cubecover;

namespace {

// Subcubes cross the boundary as {0,1,*} strings; covers and reports as
// plain dicts, matching the CLI's JSON schemas.

std::vector<std::string> member_list(const CoveringSet& cs) {
  std::vector<std::string> out;
  out.reserve(cs.members.size());
  for (const Subcube& q : cs.members) out.push_back(format_subcube(q));
  return out;
}

py::dict cover_dict(const CoveringSet& cs) {
  py::dict d;
  d["n"] = cs.params.n;
  d["d"] = cs.params.d;
  d["l"] = cs.params.l;
  d["members"] = member_list(cs);
  return d;
}

CoveringSet cover_from_dict(const py::dict& d) {
  CoveringSet cs;
  cs.params.n = d["n"].cast<int>();
  cs.params.d = d["d"].cast<int>();
  cs.params.l = d["l"].cast<int>();
  for (const auto& item : d["members"].cast<py::list>()) {
    cs.members.push_back(parse_subcube(item.cast<std::string>()));
  }
  return cs;
}

}  // namespace

PYBIND11_MODULE(_cubecover, m) {
  m.doc() = "Subcube covering and polychromatic coloring toolkit";

  m.def(
      "enumerate_subcubes",
      [](int n, int dim) {
        std::vector<std::string> out;
        for (const Subcube& q : enumerate_subcubes(n, dim)) {
          out.push_back(format_subcube(q));
        }
        return out;
      },
      py::arg("n"), py::arg("dim"),
      "All dimension-dim subcubes of Q_n in canonical order");

  m.def(
      "covers",
      [](const std::string& lower, const std::string& upper) {
        return covers(parse_subcube(lower), parse_subcube(upper));
      },
      py::arg("lower"), py::arg("upper"),
      "True iff lower's vertex set is contained in upper's");

  m.def(
      "signature",
      [](const std::string& q) { return signature(parse_subcube(q)); },
      py::arg("subcube"), "One-counts in the gaps around the free coordinates");

  m.def(
      "scheme",
      [](int d, int l) {
        ColorScheme s = scheme(d, l);
        py::dict out;
        out["d"] = s.d;
        out["l"] = s.l;
        out["r"] = s.r;
        out["k"] = s.k;
        out["kprime"] = s.kprime;
        out["palette"] = palette_size(s);
        return out;
      },
      py::arg("d"), py::arg("l"), "Residue coloring parameters");

  m.def(
      "color_of",
      [](const std::string& q, int d, int l) {
        return color_of(parse_subcube(q), scheme(d, l));
      },
      py::arg("subcube"), py::arg("d"), py::arg("l"));

  m.def(
      "find_colored_subcube",
      [](const std::string& c, const ColorTuple& target, int d, int l) {
        return format_subcube(
            find_colored_subcube(parse_subcube(c), target, scheme(d, l)));
      },
      py::arg("cube"), py::arg("target"), py::arg("d"), py::arg("l"),
      "A dimension-l subcube of cube carrying the target color");

  m.def(
      "verify_polychromatic",
      [](int n, int d, int l) {
        PolychromaticReport report = verify_residue_coloring(n, scheme(d, l));
        py::dict out;
        out["ok"] = report.ok;
        if (report.witness) {
          out["witness_cube"] = format_subcube(report.witness->first);
          out["missing_color"] = report.witness->second;
        }
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("l"),
      "Check that every d-cube contains every color of the residue coloring");

  m.def(
      "color_class",
      [](int n, int d, int l, const ColorTuple& t) {
        return cover_dict(color_class(n, scheme(d, l), t));
      },
      py::arg("n"), py::arg("d"), py::arg("l"), py::arg("color"));

  m.def(
      "facet_cover",
      [](int n, int l) { return cover_dict(construct_facet_cover(n, l)); },
      py::arg("n"), py::arg("l"),
      "Optimal cover of all facets by l-cubes, size ceil(2n/(n-l))");

  m.def(
      "pipeline_cover",
      [](int n, int d, int l, std::uint64_t seed) {
        return cover_dict(construct_pipeline_cover(n, d, l, seed));
      },
      py::arg("n"), py::arg("d"), py::arg("l"), py::arg("seed") = 0,
      "Covering design plus random cut covers, deterministic per seed");

  m.def(
      "verify_covering",
      [](const py::dict& cover) {
        CoverReport report = verify_covering(cover_from_dict(cover));
        py::dict out;
        out["ok"] = report.ok;
        out["targets_checked"] = report.targets_checked;
        if (report.witness) out["witness"] = format_subcube(*report.witness);
        return out;
      },
      py::arg("cover"));

  m.def(
      "solve_min_cover",
      [](int n, int d, int l, std::uint64_t budget) {
        SolveResult result =
            solve_min_cover(build_incidence(Params{n, d, l}), SolveBudget{budget});
        py::dict out;
        out["n"] = n;
        out["d"] = d;
        out["l"] = l;
        out["f"] = result.size;
        out["cover"] = member_list(result.cover);
        out["proved_optimal"] = result.proved_optimal;
        out["nodes_explored"] = result.nodes_explored;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("l"),
      py::arg("budget") = SolveBudget{}.max_nodes,
      "Exact minimum (d,l)-covering size by branch and bound");

  m.def(
      "brute_force_min_cover",
      [](int n, int d, int l, std::size_t max_size) -> py::object {
        auto cover = brute_force_min_cover(build_incidence(Params{n, d, l}), max_size);
        if (!cover) return py::none();
        return cover_dict(*cover);
      },
      py::arg("n"), py::arg("d"), py::arg("l"), py::arg("max_size"));

  m.def(
      "lower_bound_f",
      [](int n, int d, int l) { return lower_bound_f(Params{n, d, l}); },
      py::arg("n"), py::arg("d"), py::arg("l"));

  m.def("bounds_pc", &bounds_pc, py::arg("d"), py::arg("l"));

  m.def(
      "bounds_c",
      [](int d, int l) {
        auto [lo, hi] = bounds_c(d, l);
        return std::make_pair(rational_to_string(lo), rational_to_string(hi));
      },
      py::arg("d"), py::arg("l"), "Exact rational density bounds as p/q strings");

  m.def(
      "bound_report",
      [](int n, int d, int l) {
        BoundReport report = bound_report(Params{n, d, l});
        py::dict out;
        out["n"] = n;
        out["d"] = d;
        out["l"] = l;
        out["f_lower"] = report.f_lower;
        out["c_lower"] = rational_to_string(report.c_lower);
        out["c_upper"] = rational_to_string(report.c_upper);
        out["pc_lower"] = report.pc_lower;
        out["pc_upper"] = report.pc_upper;
        if (report.c_codim_upper) {
          out["c_codim_upper"] = rational_to_string(*report.c_codim_upper);
        }
        if (report.ex_upper) out["ex_upper"] = *report.ex_upper;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("l"));

  m.def("turan_relation", &turan_relation, py::arg("n"), py::arg("d"),
        py::arg("f1"));

  m.def("verify_binomial_identity", &verify_binomial_identity, py::arg("n"),
        py::arg("d"), py::arg("l"));

  py::register_exception<ParseError>(m, "SubcubeParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceLimitError", PyExc_RuntimeError);
}
