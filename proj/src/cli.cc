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

#include "erasure/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "erasure/classes.h"
#include "erasure/markov.h"
#include "erasure/montecarlo.h"
#include "erasure/threshold.h"

#ifndef ERASURE_VERSION
#define ERASURE_VERSION "0.0.0"
#endif

namespace erasure {

using nlohmann::json;

std::string tool_version() {
    return ERASURE_VERSION;
}

nlohmann::json RunManifest::to_json() const {
    return {
        {"command", command},
        {"model", model},
        {"parameters", parameters},
        {"circuit_config_hash", circuit_config_hash},
        {"tool_version", tool_version},
        {"timestamp", timestamp},
    };
}

std::vector<Rational> parse_grid(const std::string &text) {
    std::vector<Rational> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() != 3) {
            throw std::invalid_argument("range grid must be lo:hi:step, got '" + text + "'");
        }
        Rational lo = parse_rational(parts[0]);
        Rational hi = parse_rational(parts[1]);
        Rational step = parse_rational(parts[2]);
        if (step <= 0) {
            throw std::invalid_argument("grid step must be positive");
        }
        if (hi < lo) {
            throw std::invalid_argument("grid range has hi < lo");
        }
        for (Rational x = lo; x <= hi; x += step) {
            out.push_back(x);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_rational(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty grid");
    }
    return out;
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string now_timestamp() {
    std::time_t t;
    if (const char *sde = std::getenv("SOURCE_DATE_EPOCH"); sde != nullptr && *sde != '\0') {
        t = static_cast<std::time_t>(std::strtoll(sde, nullptr, 10));
    } else {
        t = std::time(nullptr);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string sig_figs(const Rational &r, int figures) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", figures, to_double(r));
    return buf;
}

json rational_json(const Rational &r) {
    return {{"exact", to_string(r)}, {"value", to_double(r)}};
}

/// Shortest text that round-trips the double.
std::string csv_number(double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, res.ptr);
}

std::string csv_number(const Rational &r) {
    return csv_number(to_double(r));
}

enum class Target { Ideal, Lossy, Measurement };

Target parse_target(const std::string &name) {
    if (name == "measurement") {
        return Target::Measurement;
    }
    return parse_model(name) == Model::Ideal ? Target::Ideal : Target::Lossy;
}

Model gate_model(Target t, const std::string &name) {
    if (t == Target::Measurement) {
        throw UsageError("model '" + name + "' is not a gate model here (expected ideal or lossy)");
    }
    return t == Target::Ideal ? Model::Ideal : Model::Lossy;
}

struct Options {
    std::string model;  // empty: ideal, or inferred from the pattern
    std::string eps;
    std::string delta;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string tol = "1/1000000";
    unsigned order = 7;
    std::string fixture = "full-chain";
    std::string format = "json";
    std::string circuit_config;
    std::string lo;
    std::string hi;
    unsigned levels = 3;
    std::string out_path;
    std::string pattern;
};

/// Everything a command produces: the JSON document, or the CSV body.
struct Output {
    json document;
    std::string csv;
};

class Runner {
   public:
    Runner(const Options &opt, std::string command) : opt_(opt) {
        if (!opt.circuit_config.empty()) {
            config_ = CircuitConfig::load(opt.circuit_config);
        }
        if (opt.format != "json" && opt.format != "csv") {
            throw UsageError("--format must be json or csv");
        }
        manifest_.command = std::move(command);
        manifest_.model = model_flag();
        manifest_.circuit_config_hash = config_.hash();
        manifest_.tool_version = tool_version();
        manifest_.timestamp = now_timestamp();
    }

    std::string model_flag() const {
        return opt_.model.empty() ? "ideal" : opt_.model;
    }

    Target target() const {
        return parse_target(model_flag());
    }

    Model gate() const {
        return gate_model(target(), model_flag());
    }

    bool csv() const {
        return opt_.format == "csv";
    }

    RunManifest &manifest() {
        return manifest_;
    }

    const CircuitConfig &config() const {
        return config_;
    }

    const EncodedChain &chain(Model m) {
        auto &slot = chains_[static_cast<int>(m)];
        if (!slot) {
            slot = std::make_unique<EncodedChain>(m, config_);
        }
        return *slot;
    }

    Output classify();
    Output classes();
    Output chain_cmd();
    Output series();
    Output threshold();
    Output sweep();
    Output mc();
    Output concat();

   private:
    struct RecursionSpec {
        Recursion f;
        BreakEvenKind kind;
        std::string provenance;
        Rational lo;
        Rational hi;
    };

    RecursionSpec recursion_for(Target t);
    Rational required(const std::string &value, const std::string &flag) const {
        if (value.empty()) {
            throw UsageError("missing required flag " + flag);
        }
        return parse_rational(value);
    }

    const Options &opt_;
    CircuitConfig config_;
    RunManifest manifest_;
    std::unique_ptr<EncodedChain> chains_[2];
};

std::string correctability_name(const ErasurePattern &p) {
    if (p.weight() == 0) {
        return "Done";
    }
    return classify(p) == Correctability::Correctable ? "Correctable" : "ProcedureFail";
}

Output Runner::classify() {
    auto p = ErasurePattern::from_string(opt_.pattern);
    Model m = p.model_of(Model::Ideal);
    if (!opt_.model.empty()) {
        Model given = gate();
        if (p.model_of(given) != given) {
            throw UsageError("pattern '" + p.str() + "' does not belong to the " + model_name(given) + " model");
        }
        m = given;
    }
    manifest_.model = model_name(m);
    manifest_.parameters = {{"pattern", p.str()}};
    const auto &table = chain(m).chain().classes;
    const auto &cls = table[static_cast<size_t>(table.class_of(p))];
    auto [full, z] = composition(p);
    std::string status = correctability_name(p);

    Output o;
    if (csv()) {
        o.csv = "pattern,model,weight,correctability,class_label\n" + p.str() + "," + model_name(m) + "," +
                std::to_string(p.weight()) + "," + status + "," + cls.label + "\n";
    } else {
        o.document = {
            {"pattern", p.str()},
            {"model", model_name(m)},
            {"weight", p.weight()},
            {"composition", {{"full_or_measured", full}, {"z_type", z}}},
            {"correctability", status},
            {"supports_logical", p.weight() == 3 && supports_logical(p.support())},
            {"class", {{"id", cls.id}, {"label", cls.label}, {"size", cls.size()}}},
        };
    }
    return o;
}

std::string kind_name(ClassKind k) {
    switch (k) {
        case ClassKind::Done:
            return "done";
        case ClassKind::Transient:
            return "transient";
        case ClassKind::Fail:
            return "fail";
    }
    return "?";
}

Output Runner::classes() {
    Model m = gate();
    const auto &table = chain(m).chain().classes;
    Output o;
    if (csv()) {
        std::string s = "id,label,kind,size,representative\n";
        for (const auto &c : table.classes()) {
            s += std::to_string(c.id) + "," + c.label + "," + kind_name(c.kind) + "," + std::to_string(c.size()) +
                 "," + c.representative.str() + "\n";
        }
        o.csv = s;
    } else {
        o.document = class_table_to_json(table);
        o.document["pattern_count"] = all_patterns(m).size();
    }
    return o;
}

Output Runner::chain_cmd() {
    Model m = gate();
    const auto &ec = chain(m);
    const auto &tm = ec.chain();
    std::optional<Rational> eps;
    Rational delta(0);
    if (!opt_.eps.empty()) {
        eps = parse_rational(opt_.eps);
        delta = opt_.delta.empty() ? (m == Model::Lossy ? *eps : Rational(0)) : parse_rational(opt_.delta);
        ModelParams::at(m, *eps, delta);
        manifest_.parameters = {{"eps", to_string(*eps)}, {"delta", to_string(delta)}};
    }
    Output o;
    if (csv()) {
        std::string s = eps ? "from,to,from_label,to_label,probability,value\n" : "from,to,from_label,to_label,probability\n";
        for (size_t i = 0; i < tm.rows.size(); i++) {
            for (const auto &[j, p] : tm.rows[i]) {
                s += std::to_string(i) + "," + std::to_string(j) + "," + tm.classes[i].label + "," +
                     tm.classes[static_cast<size_t>(j)].label + "," + p.str();
                if (eps) {
                    s += "," + csv_number(p.eval(*eps, delta));
                }
                s += "\n";
            }
        }
        o.csv = s;
        return o;
    }
    o.document = chain_to_json(tm);
    json init = json::array();
    for (const auto &p : ec.initial()) {
        init.push_back({{"probability", poly_to_json(p)}, {"text", p.str()}});
    }
    o.document["initial"] = init;
    if (eps) {
        o.document["evaluated_at"] = {{"eps", rational_json(*eps)}, {"delta", rational_json(delta)}};
        o.document["encoded_failure"] = rational_json(ec.encoded_failure(*eps, delta));
    }
    return o;
}

struct PublishedSeries {
    const char *name;
    Poly series;
};

PublishedSeries published_series(Model m) {
    return m == Model::Ideal ? PublishedSeries{"paper-eq9", reference_ideal_series()}
                             : PublishedSeries{"paper-eq10", reference_lossy_series()};
}

void check_fixture(const std::string &fixture, Target t) {
    if (fixture == "full-chain") {
        return;
    }
    if (fixture == "paper-eq9" && t == Target::Ideal) {
        return;
    }
    if (fixture == "paper-eq10" && t == Target::Lossy) {
        return;
    }
    if (fixture != "paper-eq9" && fixture != "paper-eq10") {
        throw UsageError("--fixture must be full-chain, paper-eq9 or paper-eq10");
    }
    throw UsageError("fixture " + fixture + " does not apply to this model (paper-eq9: ideal, paper-eq10: lossy)");
}

Output Runner::series() {
    Target t = target();
    Model m = gate();
    check_fixture(opt_.fixture, t);
    if (opt_.order > static_cast<unsigned>(kNumQubits)) {
        throw UsageError("--order must be at most 7");
    }
    manifest_.parameters = {{"order", opt_.order}, {"fixture", opt_.fixture}};
    auto ref = published_series(m);
    Poly computed = opt_.fixture == "full-chain" ? chain(m).series(opt_.order) : ref.series.truncated(opt_.order);

    Output o;
    std::string s = "order,coefficient,value,published,deviation\n";
    json coeffs = json::array();
    for (unsigned k = 0; k <= opt_.order; k++) {
        Rational c = computed.coefficient(static_cast<int>(k), 0);
        Rational published = ref.series.coefficient(static_cast<int>(k), 0);
        bool has_published = k >= 3 && k <= 6;
        json entry = {{"order", k}, {"coefficient", rational_json(c)}};
        if (has_published) {
            entry["published"] = to_string(published);
            entry["deviation"] = rational_json(c - published);
            if (published != 0) {
                entry["relative_deviation"] = to_double(Rational((c - published) / published));
            }
        }
        coeffs.push_back(entry);
        s += std::to_string(k) + "," + to_string(c) + "," + csv_number(c) + "," +
             (has_published ? to_string(published) : "") + "," + (has_published ? to_string(Rational(c - published)) : "") + "\n";
    }
    if (csv()) {
        o.csv = s;
    } else {
        o.document = {
            {"variable", m == Model::Lossy ? "eps (delta = eps)" : "eps"},
            {"order", opt_.order},
            {"recursion", opt_.fixture},
            {"series", computed.str()},
            {"coefficients", coeffs},
            {"published_reference", ref.name},
        };
    }
    return o;
}

Runner::RecursionSpec Runner::recursion_for(Target t) {
    RecursionSpec spec;
    switch (t) {
        case Target::Measurement:
            if (opt_.fixture != "full-chain") {
                throw UsageError("fixtures do not apply to the measurement model");
            }
            spec = {measurement_recursion, BreakEvenKind::Measurement, "measurement-binomial", Rational(1, 10),
                    Rational(2, 5)};
            return spec;
        case Target::Ideal:
        case Target::Lossy: {
            Model m = t == Target::Ideal ? Model::Ideal : Model::Lossy;
            check_fixture(opt_.fixture, t);
            spec.kind = m == Model::Ideal ? BreakEvenKind::IdealGate : BreakEvenKind::LossyGate;
            spec.lo = Rational(1, 1000);
            spec.hi = m == Model::Ideal ? Rational(1, 5) : Rational(1, 10);
            spec.provenance = opt_.fixture;
            if (opt_.fixture == "paper-eq10") {
                // The truncated series turns back down past ~0.06 (large
                // negative sixth-order term), so keep the bracket below that.
                spec.hi = Rational(1, 20);
            }
            if (opt_.fixture == "full-chain") {
                const EncodedChain *ec = &chain(m);
                spec.f = [ec](const Rational &x) { return ec->encoded_failure_on_diagonal(x); };
            } else {
                spec.f = polynomial_recursion(published_series(m).series);
            }
            return spec;
        }
    }
    return spec;
}

struct PublishedThreshold {
    const char *value;
    const char *note;
};

PublishedThreshold published_threshold(Target t) {
    switch (t) {
        case Target::Ideal:
            return {"0.115", "published full-chain ideal threshold"};
        case Target::Lossy:
            return {"0.0178", "published full-chain lossy threshold"};
        case Target::Measurement:
            return {"0.25", "published figure is rounded to two significant figures; the exact fixed point differs"};
    }
    return {"", ""};
}

json threshold_json(const ThresholdResult &r) {
    return {
        {"root", sig_figs(r.root, 4)},
        {"root_exact", rational_json(r.root)},
        {"bracket", {rational_json(r.lo), rational_json(r.hi)}},
        {"width", to_double(Rational(r.hi - r.lo))},
        {"iterations", r.iterations},
    };
}

Output Runner::threshold() {
    Target t = target();
    auto spec = recursion_for(t);
    Rational lo = opt_.lo.empty() ? spec.lo : parse_rational(opt_.lo);
    Rational hi = opt_.hi.empty() ? spec.hi : parse_rational(opt_.hi);
    Rational tol = parse_rational(opt_.tol);
    manifest_.parameters = {{"fixture", opt_.fixture}, {"lo", to_string(lo)}, {"hi", to_string(hi)},
                            {"tol", to_string(tol)}};

    ThresholdResult r = solve_break_even(spec.f, spec.kind, lo, hi, tol);
    auto published = published_threshold(t);
    Rational reference_value = parse_rational(published.value);
    json doc = threshold_json(r);
    doc["condition"] = break_even_name(spec.kind);
    doc["recursion"] = spec.provenance;
    doc["circuit_config_hash"] = config_.hash();
    doc["published_reference"] = {
        {"value", published.value},
        {"deviation", to_double(Rational(r.root - reference_value))},
        {"flag", std::abs(to_double(Rational(r.root - reference_value))) > 5e-4},
        {"note", published.note},
    };
    if (t == Target::Lossy) {
        auto m = solve_break_even(measurement_recursion, BreakEvenKind::Measurement, Rational(1, 10), Rational(2, 5),
                                  tol);
        doc["measurement_root"] = sig_figs(m.root, 4);
        doc["below_measurement_threshold"] = r.root < m.root;
    }

    Output o;
    if (csv()) {
        o.csv = "condition,recursion,root,lo,hi,iterations,published_reference\n" + break_even_name(spec.kind) + "," +
                spec.provenance + "," + csv_number(r.root) + "," + csv_number(r.lo) + "," + csv_number(r.hi) + "," +
                std::to_string(r.iterations) + "," + published.value + "\n";
    } else {
        o.document = doc;
    }
    return o;
}

Output Runner::sweep() {
    Model m = gate();
    auto grid = parse_grid(opt_.eps);
    for (const auto &x : grid) {
        if (x < 0 || x > Rational(1, 2)) {
            throw UsageError("grid values must lie in [0, 0.5], got " + to_decimal(x, 6));
        }
    }
    std::optional<Rational> fixed_delta;
    if (!opt_.delta.empty()) {
        fixed_delta = parse_rational(opt_.delta);
    }
    manifest_.parameters = {{"eps", opt_.eps}, {"trials", opt_.trials}, {"seed", opt_.seed}};
    if (fixed_delta) {
        manifest_.parameters["delta"] = to_string(*fixed_delta);
    }

    const auto &ec = chain(m);
    std::string s = "eps,encoded_failure_exact,mc_mean,mc_stderr\n";
    json rows = json::array();
    for (const auto &x : grid) {
        Rational d = fixed_delta ? *fixed_delta : (m == Model::Lossy ? x : Rational(0));
        Rational exact = ec.encoded_failure(x, d);
        json row = {{"eps", rational_json(x)}, {"delta", rational_json(d)}, {"encoded_failure_exact", rational_json(exact)}};
        s += csv_number(x) + "," + csv_number(exact);
        if (opt_.trials > 0) {
            McOptions mo{opt_.trials, opt_.seed, opt_.threads};
            auto est = simulate(m, to_double(x), to_double(d), mo, config_);
            row["mc_mean"] = est.mean;
            row["mc_stderr"] = est.std_error;
            s += "," + csv_number(est.mean) + "," + csv_number(est.std_error) + "\n";
        } else {
            s += ",,\n";
        }
        rows.push_back(row);
    }
    Output o;
    if (csv()) {
        o.csv = s;
    } else {
        o.document = {{"rows", rows}};
    }
    return o;
}

Output Runner::mc() {
    Model m = gate();
    Rational eps = required(opt_.eps, "--eps");
    Rational delta = opt_.delta.empty() ? (m == Model::Lossy ? eps : Rational(0)) : parse_rational(opt_.delta);
    ModelParams::at(m, eps, delta);
    manifest_.parameters = {{"eps", to_string(eps)}, {"delta", to_string(delta)}, {"trials", opt_.trials},
                            {"seed", opt_.seed}};

    Rational exact = chain(m).encoded_failure(eps, delta);
    McOptions mo{opt_.trials, opt_.seed, opt_.threads};
    auto est = simulate(m, to_double(eps), to_double(delta), mo, config_);
    std::optional<ZReport> z;
    if (est.std_error > 0) {
        z = compare(exact, est);
    }

    Output o;
    if (csv()) {
        o.csv = "eps,delta,trials,mean,stderr,z_vs_exact\n" + csv_number(eps) + "," + csv_number(delta) + "," +
                std::to_string(est.trials) + "," + csv_number(est.mean) + "," + csv_number(est.std_error) + "," +
                (z ? csv_number(z->z) : "") + "\n";
    } else {
        o.document = {
            {"eps", rational_json(eps)},
            {"delta", rational_json(delta)},
            {"trials", est.trials},
            {"failures", est.failures},
            {"seed", est.seed},
            {"mean", est.mean},
            {"stderr", est.std_error},
            {"exact", rational_json(exact)},
            {"z_vs_exact", z ? json(z->z) : json(nullptr)},
            {"pass", z ? json(z->pass) : json(nullptr)},
        };
    }
    return o;
}

Output Runner::concat() {
    Target t = target();
    if (opt_.levels > 10) {
        throw UsageError("--levels must be at most 10");
    }
    std::string rate_flag = t == Target::Measurement && !opt_.delta.empty() ? opt_.delta : opt_.eps;
    Rational eps0 = required(rate_flag, t == Target::Measurement ? "--delta" : "--eps");
    if (eps0 < 0 || eps0 > 1) {
        throw UsageError("starting rate must lie in [0, 1]");
    }
    if (t == Target::Lossy && eps0 > Rational(1, 2)) {
        throw UsageError("lossy starting rate must lie in [0, 1/2] so that delta = eps is a valid pair");
    }
    auto spec = recursion_for(t);
    manifest_.parameters = {{"eps0", to_string(eps0)}, {"levels", opt_.levels}, {"fixture", opt_.fixture}};
    auto rates = concat_projection(spec.f, eps0, opt_.levels);

    Output o;
    std::string s = "level,rate\n";
    json rows = json::array();
    for (size_t k = 0; k < rates.size(); k++) {
        s += std::to_string(k + 1) + "," + csv_number(rates[k]) + "\n";
        rows.push_back({{"level", k + 1}, {"rate", sig_figs(rates[k], 6)}, {"rate_exact", rational_json(rates[k])}});
    }
    if (csv()) {
        o.csv = s;
    } else {
        o.document = {{"recursion", spec.provenance}, {"eps0", rational_json(eps0)}, {"levels", rows}};
    }
    return o;
}

void write_error(std::ostream &err, const std::string &kind, const std::string &message, json extra = json::object()) {
    json e = {{"error", kind}, {"message", message}};
    for (auto &[k, v] : extra.items()) {
        e[k] = v;
    }
    err << e.dump() << "\n";
}

void emit(const Output &o, Runner &runner, const Options &opt, std::ostream &out) {
    std::string body;
    if (runner.csv()) {
        body = o.csv;
    } else {
        json doc = o.document;
        doc["manifest"] = runner.manifest().to_json();
        body = doc.dump(2) + "\n";
    }
    if (opt.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    f << body;
    if (!f) {
        throw std::ios_base::failure("cannot write " + opt.out_path);
    }
    if (runner.csv()) {
        std::ofstream mf(opt.out_path + ".manifest.json", std::ios::binary);
        mf << runner.manifest().to_json().dump(2) << "\n";
        if (!mf) {
            throw std::ios_base::failure("cannot write " + opt.out_path + ".manifest.json");
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Exact and Monte Carlo erasure thresholds for the seven-qubit Steane code", "erasure-threshold"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", opt.format, "json (default) or csv");
        sub->add_option("--circuit-config", opt.circuit_config, "JSON fault-location inventory");
        sub->add_option("--out", opt.out_path, "Write output to this path instead of stdout");
    };
    auto add_model = [&](CLI::App *sub) {
        sub->add_option("--model", opt.model, "ideal, lossy or measurement");
    };

    auto *classify = app.add_subcommand("classify", "Weight, correctability and class of an erasure pattern");
    classify->add_option("pattern", opt.pattern, "Seven characters from . M Z E")->required();
    add_model(classify);
    add_common(classify);

    auto *classes = app.add_subcommand("classes", "Equivalence classes of the reduced chain");
    add_model(classes);
    add_common(classes);

    auto *chain = app.add_subcommand("chain", "Symbolic transition matrix between classes");
    add_model(chain);
    chain->add_option("--eps", opt.eps, "Also evaluate the chain at this eps");
    chain->add_option("--delta", opt.delta, "Detector loss rate (lossy default: eps)");
    add_common(chain);

    auto *series = app.add_subcommand("series", "Truncated series of the encoded failure rate");
    add_model(series);
    series->add_option("--order", opt.order, "Truncation order (<= 7)");
    series->add_option("--fixture", opt.fixture, "full-chain, paper-eq9 or paper-eq10");
    add_common(series);

    auto *threshold = app.add_subcommand("threshold", "Break-even threshold by exact bisection");
    add_model(threshold);
    threshold->add_option("--tol", opt.tol, "Bracket width tolerance");
    threshold->add_option("--fixture", opt.fixture, "full-chain, paper-eq9 or paper-eq10");
    threshold->add_option("--lo", opt.lo, "Bracket lower end");
    threshold->add_option("--hi", opt.hi, "Bracket upper end");
    add_common(threshold);

    auto *sweep = app.add_subcommand("sweep", "Exact encoded failure over an eps grid with a Monte Carlo overlay");
    add_model(sweep);
    sweep->add_option("--eps", opt.eps, "Grid: comma list or lo:hi:step")->required();
    sweep->add_option("--delta", opt.delta, "Fixed detector loss rate (lossy default: delta = eps)");
    sweep->add_option("--trials", opt.trials, "Monte Carlo trials per point (0 disables)");
    sweep->add_option("--seed", opt.seed, "Monte Carlo seed");
    sweep->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
    add_common(sweep);

    auto *mc = app.add_subcommand("mc", "Monte Carlo estimate compared against the exact chain");
    add_model(mc);
    mc->add_option("--eps", opt.eps, "Gate failure rate")->required();
    mc->add_option("--delta", opt.delta, "Detector loss rate (lossy default: eps)");
    mc->add_option("--trials", opt.trials, "Trials");
    mc->add_option("--seed", opt.seed, "Seed");
    mc->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
    add_common(mc);

    auto *concat = app.add_subcommand("concat", "Per-level rates under repeated concatenation");
    add_model(concat);
    concat->add_option("--eps", opt.eps, "Level-0 rate");
    concat->add_option("--delta", opt.delta, "Level-0 rate for the measurement model");
    concat->add_option("--levels", opt.levels, "Number of levels (<= 10)");
    concat->add_option("--fixture", opt.fixture, "full-chain, paper-eq9 or paper-eq10");
    add_common(concat);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        write_error(err, "usage", e.what());
        return 2;
    }

    CLI::App *sub = app.get_subcommands().front();
    try {
        Runner runner(opt, sub->get_name());
        Output o;
        if (sub == classify) {
            o = runner.classify();
        } else if (sub == classes) {
            o = runner.classes();
        } else if (sub == chain) {
            o = runner.chain_cmd();
        } else if (sub == series) {
            o = runner.series();
        } else if (sub == threshold) {
            o = runner.threshold();
        } else if (sub == sweep) {
            o = runner.sweep();
        } else if (sub == mc) {
            o = runner.mc();
        } else {
            o = runner.concat();
        }
        emit(o, runner, opt, out);
        return 0;
    } catch (const NoSignChange &e) {
        write_error(err, "no_sign_change", e.what(),
                    {{"lo", rational_json(e.lo)},
                     {"hi", rational_json(e.hi)},
                     {"g_lo", rational_json(e.g_lo)},
                     {"g_hi", rational_json(e.g_hi)}});
        return 1;
    } catch (const ClassUnsound &e) {
        write_error(err, "class_unsound", e.what());
        return 1;
    } catch (const std::ios_base::failure &e) {
        write_error(err, "io", e.what());
        return 1;
    } catch (const std::invalid_argument &e) {
        write_error(err, "invalid_argument", e.what());
        return 2;
    } catch (const std::exception &e) {
        write_error(err, "error", e.what());
        return 1;
    }
}

}  // namespace erasure
