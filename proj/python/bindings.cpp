// Thin Python binding: structured values cross the boundary as JSON text,
// which the package wrapper turns into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "singlink/cli.hpp"
#include "singlink/cover.hpp"
#include "singlink/errors.hpp"
#include "singlink/io.hpp"
#include "singlink/lens.hpp"

namespace py = pybind11;
using namespace singlink;

namespace {

SelectionPolicy policy_from(const std::string& name, std::uint64_t seed) {
  if (name == "lowest") return SelectionPolicy::lowest();
  if (name == "highest") return SelectionPolicy::highest();
  if (name == "random") return SelectionPolicy::random(seed);
  fail(ErrorCode::ParseError, "unknown policy '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resolution graphs of surface singularities";

  static py::exception<Error> error(m, "SinglinkError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::tuple args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("hj_expand", [](std::int64_t n, std::int64_t q) { return hj_expand(n, q).weights; });
  m.def("hj_evaluate", [](const std::vector<std::int64_t>& w) { return hj_evaluate(HJBamboo{w}); });
  m.def("resolve_quasi_ordinary", [](std::int64_t n, std::int64_t q) { return resolve_quasi_ordinary(n, q).weights; });
  m.def("lens_of_quasi_ordinary", [](std::int64_t n, std::int64_t q) {
    const LensParams l = lens_of_quasi_ordinary(n, q);
    return std::pair{l.n, l.q};
  });
  m.def(
      "lens_equivalent",
      [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b, bool oriented) {
        return lens_equivalent(make_lens(a.first, a.second), make_lens(b.first, b.second), oriented);
      },
      py::arg("a"), py::arg("b"), py::arg("oriented") = true);

  m.def("check_graph", [](const std::string& graph) {
    const PlumbingGraph g = graph_from_json(parse_json(graph));
    Json j;
    j["determinant"] = big_to_json(determinant(g));
    j["negative_definite"] = is_negative_definite(g);
    j["bamboo"] = is_bamboo(g);
    j["tree"] = is_tree(g);
    j["cycle_rank"] = cycle_rank(g);
    return j.dump();
  });

  m.def(
      "minimize",
      [](const std::string& graph, const std::string& policy, std::uint64_t seed) {
        const MinimizeResult r = minimize(graph_from_json(parse_json(graph)), policy_from(policy, seed));
        Json certs = Json::array();
        for (const auto& c : r.certificates) certs.push_back(to_json(c));
        Json j;
        j["graph"] = to_json(r.graph);
        j["certificates"] = std::move(certs);
        return j.dump();
      },
      py::arg("graph"), py::arg("policy") = "lowest", py::arg("seed") = 0);

  m.def(
      "resolve_curve",
      [](const std::string& branches, bool merge) {
        CurveOptions opts;
        opts.merge_duplicates = merge;
        return to_json(resolve_curve(branches_from_json(parse_json(branches)), opts)).dump();
      },
      py::arg("branches"), py::arg("merge_duplicates") = false);

  m.def(
      "resolve_cyclic",
      [](const std::string& branches, std::int64_t d, bool minimize) {
        PipelineOptions opts;
        opts.minimize = minimize;
        const auto bs = branches_from_json(parse_json(branches));
        py::gil_scoped_release release;
        return to_json(resolve_cyclic(bs, d, opts)).dump();
      },
      py::arg("branches"), py::arg("d"), py::arg("minimize") = true);

  m.def(
      "resolve_from_covering",
      [](const std::string& covering, bool minimize) {
        PipelineOptions opts;
        opts.minimize = minimize;
        return to_json(resolve_from_covering(covering_from_json(parse_json(covering)), opts)).dump();
      },
      py::arg("covering"), py::arg("minimize") = true);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "singlink");
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
