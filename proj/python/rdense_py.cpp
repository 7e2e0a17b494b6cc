#include "rdense/bidensity.hpp"
#include "rdense/cli.hpp"
#include "rdense/embedder.hpp"
#include "rdense/graph_io.hpp"
#include "rdense/json_io.hpp"
#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rdense;

namespace
{
    auto to_python(const json::Json & j) -> py::object
    {
        return py::module_::import("json").attr("loads")(j.dump());
    }

    auto cli_run(const std::vector<std::string> & args) -> py::tuple
    {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }

    auto bound(const std::string & theorem, std::optional<std::string> t, std::optional<std::string> rho,
               std::optional<std::string> s, std::optional<std::string> m) -> py::object
    {
        std::vector<std::string> args = {"bounds", "--theorem", theorem};
        for (auto [flag, value] : {std::pair{"--t", &t}, {"--rho", &rho}, {"--s", &s}, {"--m", &m}})
            if (*value)
            {
                args.emplace_back(flag);
                args.push_back(**value);
            }
        std::ostringstream out, err;
        if (cli::run(args, out, err) != 0)
            throw py::value_error(err.str());
        auto doc = json::Json::parse(out.str());
        doc.erase("manifest");
        return to_python(doc);
    }

    auto search_config(double rho, std::uint64_t seed, std::uint64_t budget) -> search::SearchConfig
    {
        search::SearchConfig config;
        config.rho = rho;
        config.seed = seed;
        config.node_budget = budget;
        return config;
    }

    auto outcome_json(const Coloring & c, const Graph & h, std::size_t s, const search::SearchOutcome & o) -> py::object
    {
        auto verification = o.found() ? search::verify_outcome(c, h, s, o) : std::string();
        return to_python(json::to_json(o, verification, false));
    }
}

PYBIND11_MODULE(_rdense, m)
{
    m.doc() = "Ramsey bounds, embeddings and certified searches for dense graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("t"))
        .def_static("from_edges",
                    [](std::size_t t, const std::vector<Edge> & edges) { return Graph::from_edges(t, edges); })
        .def_static("complete", &Graph::complete)
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def_static("parse", [](const std::string & text) { return parse_graph(text); })
        .def_static("load", &cli::load_graph, "Graph from a shorthand (k5, c4, gnp:t:rho:seed) or a file path")
        .def("serialize", [](const Graph & g) { return serialize_graph(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("complement", &Graph::complement)
        .def("stats", [](const Graph & g) { return to_python(json::to_json(graph_stats(g))); })
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph & g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Coloring>(m, "Coloring")
        .def(py::init<Graph>(), py::arg("red"), "Colouring whose red class is `red`")
        .def_static("load", &cli::load_coloring, "Colouring from red:<graph>, blue:<graph>, rand:n:p:seed or a file")
        .def_property_readonly("order", &Coloring::order)
        .def("color", [](const Coloring & c, Vertex u, Vertex v) { return std::string(1, color_letter(c.color(u, v))); })
        .def_property_readonly("red", [](const Coloring & c) { return c.graph(Color::Red); })
        .def_property_readonly("blue", [](const Coloring & c) { return c.graph(Color::Blue); })
        .def("serialize", [](const Coloring & c) { return serialize_coloring(c, ColoringFormat::Hex); });

    m.def("cli", &cli_run, py::arg("args"), "Runs the command-line router; returns (exit_code, stdout, stderr)");

    m.def("bound", &bound, py::arg("theorem"), py::arg("t") = py::none(), py::arg("rho") = py::none(),
          py::arg("s") = py::none(), py::arg("m") = py::none(), "Bound report as a dict; numbers are passed as strings");

    m.def(
        "embed",
        [](const Graph & pattern, const Graph & host, double delta) -> std::optional<std::vector<Vertex>> {
            auto r = embedder::embed_greedy(pattern, host, delta);
            if (! r.success())
                return std::nullopt;
            return r.embedding->image;
        },
        py::arg("pattern"), py::arg("host"), py::arg("delta"));

    m.def(
        "check_bidense",
        [](const Graph & host, double sigma, double delta, std::uint64_t budget) {
            return to_python(json::to_json(embedder::check_bidense_exact(host, sigma, delta, budget)));
        },
        py::arg("host"), py::arg("sigma"), py::arg("delta"), py::arg("budget") = 1'000'000'000ull);

    m.def(
        "ramsey_exact",
        [](const Graph & h1, const Graph & h2, std::size_t n_max) {
            return to_python(json::to_json(oracle::ramsey_number_exact(h1, h2, n_max)));
        },
        py::arg("h1"), py::arg("h2"), py::arg("n_max") = 8);

    m.def(
        "find_mono",
        [](const Coloring & c, const Graph & h, double rho, std::uint64_t seed, std::uint64_t budget) {
            auto o = search::find_mono_H(c, h, search_config(rho, seed, budget));
            return outcome_json(c, h, 0, o);
        },
        py::arg("coloring"), py::arg("pattern"), py::arg("rho") = 0.05, py::arg("seed") = 0,
        py::arg("budget") = 2000);

    m.def(
        "find_red_or_blue_clique",
        [](const Coloring & c, const Graph & h, std::size_t s, double rho, std::uint64_t seed, std::uint64_t budget) {
            auto o = search::find_red_H_or_blue_clique(c, h, s, search_config(rho, seed, budget));
            return outcome_json(c, h, s, o);
        },
        py::arg("coloring"), py::arg("pattern"), py::arg("s"), py::arg("rho") = 0.05, py::arg("seed") = 0,
        py::arg("budget") = 2000);

    m.def("sample_gnp", &random_lab::sample_gnp, py::arg("t"), py::arg("rho"), py::arg("seed"));
    m.def("sample_coloring", &random_lab::sample_coloring, py::arg("n"), py::arg("p_red"), py::arg("seed"));
    m.def("chernoff_tail", &random_lab::chernoff_tail, py::arg("n"), py::arg("p"), py::arg("theta"));
    m.def(
        "judicious_partition",
        [](const Graph & h, std::uint64_t max_tries, std::uint64_t seed) {
            return to_python(json::to_json(random_lab::judicious_partition(h, max_tries, seed)));
        },
        py::arg("graph"), py::arg("max_tries") = 64, py::arg("seed") = 0);
}
