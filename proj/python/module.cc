// Copyright 2026 The Erasure Threshold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "erasure/circuits.h"
#include "erasure/cli.h"
#include "erasure/erasure_model.h"
#include "erasure/markov.h"
#include "erasure/montecarlo.h"
#include "erasure/threshold.h"

namespace py = pybind11;
using namespace erasure;

namespace {

CircuitConfig config_from(const std::string &json_text) {
    return json_text.empty() ? CircuitConfig() : CircuitConfig::from_json(nlohmann::json::parse(json_text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and sampled erasure thresholds of the seven-qubit Steane code.";
    m.attr("__version__") = tool_version();

    py::register_exception<NoSignChange>(m, "NoSignChange", PyExc_ValueError);
    py::register_exception<ClassUnsound>(m, "ClassUnsound", PyExc_RuntimeError);

    m.def(
        "classify",
        [](const std::string &pattern) {
            return classify(ErasurePattern::from_string(pattern)) == Correctability::Correctable ? "Correctable"
                                                                                                 : "ProcedureFail";
        },
        py::arg("pattern"));

    m.def(
        "census",
        [](const std::string &model) {
            auto c = enumerate_patterns(parse_model(model));
            py::dict d;
            d["total"] = c.total;
            d["by_weight"] = std::vector<size_t>(c.by_weight.begin(), c.by_weight.end());
            d["correctable"] = c.correctable;
            d["procedure_fail"] = c.procedure_fail;
            return d;
        },
        py::arg("model"));

    m.def(
        "series",
        [](const std::string &model, unsigned order, const std::string &config) {
            Poly s = recursion_series(parse_model(model), order, config_from(config));
            std::vector<std::string> coefficients;
            for (unsigned k = 0; k <= order; k++) {
                coefficients.push_back(to_string(s.coefficient(k)));
            }
            return coefficients;
        },
        py::arg("model"), py::arg("order") = 7, py::arg("config") = "");

    m.def(
        "measurement_recursion",
        [](const std::string &delta) { return to_string(measurement_recursion(parse_rational(delta))); },
        py::arg("delta"));

    m.def(
        "encoded_failure",
        [](const std::string &model, const std::string &eps, const std::string &delta, const std::string &config) {
            EncodedChain chain(parse_model(model), config_from(config));
            py::gil_scoped_release release;
            return to_string(chain.encoded_failure(parse_rational(eps), parse_rational(delta)));
        },
        py::arg("model"), py::arg("eps"), py::arg("delta") = "0", py::arg("config") = "");

    m.def(
        "simulate",
        [](const std::string &model, double eps, double delta, std::uint64_t trials, std::uint64_t seed,
           unsigned threads, const std::string &config) {
            McOptions options{trials, seed, threads};
            McEstimate est;
            {
                py::gil_scoped_release release;
                est = simulate(parse_model(model), eps, delta, options, config_from(config));
            }
            py::dict d;
            d["mean"] = est.mean;
            d["stderr"] = est.std_error;
            d["trials"] = est.trials;
            d["failures"] = est.failures;
            d["seed"] = est.seed;
            return d;
        },
        py::arg("model"), py::arg("eps"), py::arg("delta") = 0.0, py::arg("trials") = 100000, py::arg("seed") = 1,
        py::arg("threads") = 0, py::arg("config") = "");

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
