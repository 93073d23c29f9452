// Copyright 2026 The qpatterns Authors
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

#include "qpatterns/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qpatterns/algorithms.h"
#include "qpatterns/circuits.h"
#include "qpatterns/qdict.h"
#include "qpatterns/render.h"

namespace qpatterns {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
    throw std::invalid_argument(field + ": " + why);
}

/// Everything any command reads. Each subcommand binds the fields it uses.
struct Options {
    std::string format = "text";
    std::string output;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    bool exact = false;
    bool amplitudes = false;

    std::string circuit;
    std::string dict;
    std::string poly;
    double p = 0.0;
    int control = 0;
    int width = 3;
    int key_width = 0;
    int value_width = 0;
    int iterations = -1;
    std::string marked;
    std::string parity;
    std::string oracle = "zxzx";
    std::int64_t key = 0;
    std::int64_t target = 0;
    std::int64_t threshold = 0;
    std::vector<std::int64_t> set;
    std::string relation = "eq";
    int n = 0;
    std::string kind;
    double lambda = 0.0;
    std::string masses;
    std::uint64_t cap = 0;
};

struct Flags {
    CLI::Option* shots = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* control = nullptr;
    CLI::Option* iterations = nullptr;
    CLI::Option* key_width = nullptr;
    CLI::Option* value_width = nullptr;
    CLI::Option* cap = nullptr;
};

std::string read_source(const std::string& arg, const std::string& field) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        return arg;
    }
    std::ifstream in(arg);
    if (!in) {
        invalid(field, "cannot read '" + arg + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<std::uint64_t> resolve_seed(const Options& o, const Flags& f) {
    if (f.seed && f.seed->count() > 0) {
        return o.seed;
    }
    if (const char* env = std::getenv("QDICT_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const std::uint64_t s = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return s;
            }
        } catch (const std::exception&) {
        }
        invalid("seed", "QDICT_SEED is not a nonnegative integer");
    }
    return std::nullopt;
}

/// "5,6" or "0b101,0b110" into labels.
std::vector<std::uint64_t> parse_labels(const std::string& text, const std::string& field) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const int base = tok.rfind("0b", 0) == 0 ? 2 : 10;
        const std::string digits = base == 2 ? tok.substr(2) : tok;
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(digits, &used, base);
        } catch (const std::exception&) {
            used = 0;
        }
        if (digits.empty() || used != digits.size()) {
            invalid(field, "'" + tok + "' is not a label (decimal or 0b-prefixed binary)");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        invalid(field, "no labels given");
    }
    return out;
}

/// "0:0.125,5:0.75,7:0.125" into (value, probability) pairs.
std::vector<std::pair<std::int64_t, double>> parse_masses(const std::string& text) {
    std::vector<std::pair<std::int64_t, double>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) {
            invalid("masses", "'" + tok + "' is not value:probability");
        }
        try {
            out.emplace_back(std::stoll(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
        } catch (const std::exception&) {
            invalid("masses", "'" + tok + "' is not value:probability");
        }
    }
    return out;
}

OracleConstruction parse_construction(const std::string& name) {
    if (name == "zxzx") return OracleConstruction::ZXZX;
    if (name == "ancilla") return OracleConstruction::AncillaTrick;
    invalid("oracle", "must be zxzx or ancilla");
}

OracleSpec search_oracle(const Options& o) {
    OracleSpec spec;
    spec.register_name = "reg";
    spec.construction = parse_construction(o.oracle);
    if (!o.parity.empty() && !o.marked.empty()) {
        invalid("marked", "give either --marked or --parity, not both");
    }
    if (!o.parity.empty()) {
        if (o.parity != "even" && o.parity != "odd") {
            invalid("parity", "must be even or odd");
        }
        spec.predicate = ParityPredicate{o.parity == "even"};
    } else if (!o.marked.empty()) {
        spec.predicate = ExplicitSetPredicate{parse_labels(o.marked, "marked")};
    } else {
        invalid("marked", "an oracle needs --marked or --parity");
    }
    return spec;
}

void check_range(int v, int lo, int hi, const std::string& field) {
    if (v < lo || v > hi) {
        invalid(field, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

void add_counting_summary(Report& r, const CountingResult& c) {
    r.summary.emplace_back("control_width", std::int64_t{c.control_width});
    r.summary.emplace_back("top_outcome", static_cast<std::int64_t>(c.top_outcome));
    r.summary.emplace_back("mirror_outcome", static_cast<std::int64_t>(c.mirror_outcome));
    r.summary.emplace_back("estimated_fraction", c.estimated_fraction);
    r.summary.emplace_back("count_width", std::int64_t{c.count_width});
    r.summary.emplace_back("estimated_count", static_cast<std::int64_t>(c.estimated_count));
    r.summary.emplace_back("resolution_flag", c.resolution_flag);
}

struct Outcome {
    Report report;
    /// Already-rendered output that bypasses render_report.
    std::optional<std::string> raw;
    bool flagged = false;
    /// Commands whose histogram can be resampled with --shots.
    bool samplable = true;
};

DictionaryDocument load_dictionary(const Options& o) {
    if (o.dict.empty()) {
        invalid("dict", "required (path or inline JSON)");
    }
    return dictionary_from_json(read_source(o.dict, "dict"));
}

int control_or(const Options& o, const Flags& f, int fallback) {
    return f.control->count() > 0 ? o.control : fallback;
}

Outcome run_simulate(const Options& o) {
    if (o.circuit.empty()) {
        invalid("circuit", "required (path or inline JSON)");
    }
    const Circuit c = circuit_from_json(read_source(o.circuit, "circuit"));
    const QuantumState state = run(c, QuantumState(c.num_qubits()));
    Outcome out;
    out.report.title = "simulate";
    out.report.summary.emplace_back("num_qubits", std::int64_t{c.num_qubits()});
    out.report.summary.emplace_back("gates", static_cast<std::int64_t>(c.size()));
    if (o.amplitudes) {
        if (c.num_qubits() > kMaxComplexHistogramQubits) {
            invalid("amplitudes", "state has " + std::to_string(c.num_qubits()) +
                                      " qubits; the complex histogram is limited to " +
                                      std::to_string(kMaxComplexHistogramQubits));
        }
        const auto fmt = format_from_name(o.format);
        out.raw = render_complex_histogram(state, *fmt);
        out.samplable = false;
        return out;
    }
    out.report.histogram = probabilities(state);
    return out;
}

Outcome run_pe(const Options& o, const Flags& f) {
    const int t = control_or(o, f, 3);
    check_range(t, 1, 20, "control");
    const PhaseEstimationResult r = phase_estimation(coin_phase_config(o.p, t));
    Outcome out;
    out.report.title = "phase estimation";
    out.report.summary.emplace_back("p", o.p);
    out.report.summary.emplace_back("control_width", std::int64_t{t});
    out.report.summary.emplace_back("eigenstate", r.eigenstate);
    out.report.histogram = r.histogram;
    return out;
}

Outcome run_grover(const Options& o, const Flags& f) {
    check_range(o.width, 1, 20, "width");
    const OracleSpec oracle = search_oracle(o);
    int k = o.iterations;
    if (f.iterations->count() == 0) {
        std::uint64_t good = 0;
        if (const auto* set = std::get_if<ExplicitSetPredicate>(&oracle.predicate)) {
            good = set->labels.size();
        } else {
            good = std::uint64_t{1} << (o.width - 1);
        }
        k = optimal_iterations(static_cast<double>(good) /
                               static_cast<double>(std::uint64_t{1} << o.width));
    }
    check_range(k, 0, 1 << 20, "iterations");
    Outcome out;
    out.report.title = "grover";
    out.report.summary.emplace_back("width", std::int64_t{o.width});
    out.report.summary.emplace_back("iterations", std::int64_t{k});
    out.report.histogram = grover_search(oracle, o.width, k);
    return out;
}

Outcome run_count(const Options& o, const Flags& f) {
    check_range(o.width, 1, 20, "width");
    const int t = control_or(o, f, o.width + 1);
    check_range(t, 2, kMaxQubits - o.width - 1, "control");
    const CountingResult c = quantum_count_uniform(search_oracle(o), o.width, t);
    Outcome out;
    out.report.title = "quantum counting";
    add_counting_summary(out.report, c);
    out.report.histogram = c.histogram;
    out.flagged = c.resolution_flag;
    return out;
}

Outcome run_qdict_encode(const Options& o) {
    const DictionaryDocument d = load_dictionary(o);
    Outcome out;
    out.report.title = "dictionary";
    out.report.summary.emplace_back("key_width", std::int64_t{d.spec.key_width});
    out.report.summary.emplace_back("value_width", std::int64_t{d.spec.value_width});
    out.report.histogram = encoded_histogram(d.spec, d.source);
    out.report.dictionary = d.spec;
    return out;
}

Outcome run_qdict_lookup(const Options& o, const Flags& f) {
    const DictionaryDocument d = load_dictionary(o);
    if (o.key < 0) {
        invalid("key", "must be nonnegative");
    }
    const int k = f.iterations->count() > 0 ? o.iterations
                                            : default_lookup_iterations(d.spec.key_width);
    check_range(k, 0, 1 << 20, "iterations");
    Outcome out;
    out.report.title = "dictionary lookup";
    out.report.summary.emplace_back("key", o.key);
    out.report.summary.emplace_back("iterations", std::int64_t{k});
    out.report.histogram = lookup(d.spec, d.source, static_cast<std::uint64_t>(o.key), k);
    out.report.dictionary = d.spec;
    return out;
}

Outcome counting_outcome(const std::string& title, const CountingResult& c) {
    Outcome out;
    out.report.title = title;
    add_counting_summary(out.report, c);
    out.report.histogram = c.histogram;
    out.flagged = c.resolution_flag;
    return out;
}

Outcome run_qdict_count(const Options& o, const Flags& f, bool less_than) {
    const DictionaryDocument d = load_dictionary(o);
    const int t = control_or(o, f, d.spec.key_width + 2);
    check_range(t, 2, kMaxQubits - d.spec.key_width - d.spec.value_width - 1, "control");
    if (less_than) {
        Outcome out = counting_outcome("count values below threshold",
                                       count_value_lt(d.spec, d.source, o.threshold, t));
        out.report.summary.insert(out.report.summary.begin(), {"threshold", o.threshold});
        return out;
    }
    Outcome out = counting_outcome("count values equal to target",
                                   count_value_eq(d.spec, d.source, o.target, t));
    out.report.summary.insert(out.report.summary.begin(), {"target", o.target});
    return out;
}

Outcome run_qubo(const Options& o, const Flags& f, std::optional<std::uint64_t> seed) {
    if (o.poly.empty()) {
        invalid("poly", "required (inline JSON or path)");
    }
    if (!seed) {
        invalid("seed", "qubo-min samples; pass --seed or set QDICT_SEED");
    }
    const Polynomial poly = polynomial_from_json(read_source(o.poly, "poly"));
    const int n = f.key_width->count() > 0 ? o.key_width : std::max(poly.num_variables(), 1);
    check_range(n, 1, 12, "key-width");
    const int m = f.value_width->count() > 0 ? o.value_width : 2;
    check_range(m, 1, 20, "value-width");
    const int t = control_or(o, f, n + 2);
    check_range(t, 2, 12, "control");
    const DictionarySpec spec{n, m};
    const auto cap = f.cap->count() > 0 ? std::optional<std::uint64_t>(o.cap) : std::nullopt;
    const QuboResult r = qubo_minimize(spec, poly, t, *seed, cap);

    Outcome out;
    out.samplable = false;
    Report& rep = out.report;
    rep.title = "qubo minimization";
    OutcomeHistogram key_label;
    key_label.fields = {{"key", n}};
    rep.summary.emplace_back("seed", static_cast<std::int64_t>(*seed));
    rep.summary.emplace_back("initial_key", key_label.label(r.initial_key));
    rep.summary.emplace_back("initial_value", r.initial_value);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const QuboStep& s = r.trace[i];
        std::string line = "threshold=" + std::to_string(s.threshold) +
                           " width=" + std::to_string(s.value_width) +
                           " peak=" + std::to_string(s.count.top_outcome) +
                           " count=" + std::to_string(s.count.estimated_count);
        if (s.sampled_key) {
            line += " iterations=" + std::to_string(s.iterations) +
                    " sample=" + key_label.label(*s.sampled_key) + ":" +
                    std::to_string(*s.sampled_value) + (s.improved ? " improved" : "");
        }
        rep.summary.emplace_back("step" + std::to_string(i + 1), line);
    }
    rep.summary.emplace_back("minimum_key", key_label.label(r.key));
    rep.summary.emplace_back("minimum", r.value);
    rep.summary.emplace_back("queries", static_cast<std::int64_t>(r.queries));
    rep.summary.emplace_back("cap_reached", r.cap_reached);
    out.flagged = r.cap_reached;
    return out;
}

Outcome run_subset_sum(const Options& o, const Flags& f) {
    if (o.set.empty()) {
        invalid("set", "required, e.g. --set 1,0,2,-1");
    }
    const int n = static_cast<int>(o.set.size());
    check_range(n, 1, 12, "set");
    const int m = f.value_width->count() > 0 ? o.value_width : n + 1;
    const DictionarySpec spec{n, m};
    spec.validate();
    const int t = control_or(o, f, n + 1);
    check_range(t, 2, kMaxQubits - n - m - 1, "control");
    const PartialTable source = sum_inputs_source(o.set);
    if (o.relation == "eq") {
        Outcome out = counting_outcome("subsets with sum equal to target",
                                       count_value_eq(spec, source, o.target, t));
        out.report.summary.insert(out.report.summary.begin(), {"target", o.target});
        return out;
    }
    if (o.relation == "lt") {
        Outcome out = counting_outcome("subsets with sum below target",
                                       count_value_lt(spec, source, o.target, t));
        out.report.summary.insert(out.report.summary.begin(), {"target", o.target});
        return out;
    }
    invalid("relation", "must be eq or lt");
}

Outcome run_fibonacci(const Options& o, const Flags& f) {
    check_range(o.n, 1, 12, "n");
    const int t = control_or(o, f, o.n + 2);
    check_range(t, 2, kMaxQubits - o.n - fibonacci_value_width(o.n) - 1, "control");
    Outcome out = counting_outcome("strings without adjacent ones", fibonacci_count(o.n, t));
    out.report.summary.insert(out.report.summary.begin(), {"n", std::int64_t{o.n}});
    return out;
}

Outcome run_dist(const Options& o, const Flags& f) {
    const int n = f.key_width->count() > 0 ? o.key_width : 3;
    const int m = f.value_width->count() > 0 ? o.value_width : 3;
    const DictionarySpec spec{n, m};
    spec.validate();
    EncodingSource source;
    std::string title;
    if (o.kind == "binomial") {
        encode_binomial(n, m);  // validates the width
        source = binomial_source(n);
        title = "binomial distribution";
    } else if (o.kind == "poisson") {
        if (!(o.lambda > 0.0)) {
            invalid("lambda", "must be positive");
        }
        source = distribution_table(n, poisson_masses(o.lambda, m));
        title = "poisson distribution";
    } else if (o.kind == "table") {
        if (o.masses.empty()) {
            invalid("masses", "required, e.g. --masses 3:0.125,5:0.75,7:0.125");
        }
        source = distribution_table(n, parse_masses(o.masses));
        title = "distribution";
    } else {
        invalid("kind", "must be binomial, poisson or table");
    }
    Outcome out;
    out.report.title = title;
    out.report.summary.emplace_back("key_width", std::int64_t{n});
    out.report.summary.emplace_back("value_width", std::int64_t{m});
    if (const auto* table = std::get_if<CompleteTable>(&source)) {
        std::map<std::int64_t, std::int64_t> keys_per_value;
        for (std::int64_t v : table->values) {
            ++keys_per_value[v];
        }
        std::string alloc;
        for (const auto& [v, k] : keys_per_value) {
            alloc += (alloc.empty() ? "" : ",") + std::to_string(v) + ":" + std::to_string(k);
        }
        out.report.summary.emplace_back("keys_per_value", alloc);
    }
    out.report.histogram = value_marginal(spec, source);
    return out;
}

void add_output_options(CLI::App* sub, Options& o, Flags& f, bool with_shots) {
    sub->add_option("--format", o.format, "text, csv, json or svg");
    sub->add_option("--output", o.output, "Write the result to this path");
    if (with_shots) {
        f.shots = sub->add_option("--shots", o.shots, "Sample this many outcomes");
        sub->add_flag("--exact", o.exact, "Exact probabilities (default)");
    }
    f.seed = sub->add_option("--seed", o.seed, "Sampling seed (fallback: QDICT_SEED)");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    std::map<std::string, Flags> flags;
    CLI::App app{"Statevector simulator and quantum dictionary workflows", "qpatterns"};
    app.require_subcommand(1);

    auto sub = [&](const std::string& name, const std::string& help, bool shots = true) {
        CLI::App* s = app.add_subcommand(name, help);
        add_output_options(s, o, flags[name], shots);
        return s;
    };
    Flags* f = nullptr;

    auto* sim = sub("simulate", "Run a circuit JSON file");
    sim->add_option("--circuit", o.circuit, "Circuit JSON path or inline JSON");
    sim->add_flag("--amplitudes", o.amplitudes, "Complex histogram of the final state");

    auto* pe = sub("pe", "Phase estimation of the RY coin with parameter p");
    f = &flags["pe"];
    pe->add_option("--p", o.p, "Phase parameter p (theta = p 2pi / 2^t)")->required();
    f->control = pe->add_option("--control", o.control, "Control register width t");

    auto* gr = sub("grover", "Grover search on a uniform register");
    f = &flags["grover"];
    gr->add_option("--width", o.width, "Register width");
    gr->add_option("--marked", o.marked, "Good labels, e.g. 5,6 or 0b101,0b110");
    gr->add_option("--parity", o.parity, "even or odd instead of --marked");
    gr->add_option("--oracle", o.oracle, "zxzx or ancilla");
    f->iterations = gr->add_option("--iterations", o.iterations, "Grover iterations");

    auto* ct = sub("count", "Quantum counting on a uniform register");
    f = &flags["count"];
    ct->add_option("--width", o.width, "Register width");
    ct->add_option("--marked", o.marked, "Good labels");
    ct->add_option("--parity", o.parity, "even or odd instead of --marked");
    ct->add_option("--oracle", o.oracle, "zxzx or ancilla");
    f->control = ct->add_option("--control", o.control, "Control register width t");

    auto* enc = sub("qdict-encode", "Histogram of an encoded dictionary");
    enc->add_option("--dict", o.dict, "Dictionary JSON path or inline JSON");

    auto* lk = sub("qdict-lookup", "Amplify one key of a dictionary");
    f = &flags["qdict-lookup"];
    lk->add_option("--dict", o.dict, "Dictionary JSON path or inline JSON");
    lk->add_option("--key", o.key, "Key to amplify")->required();
    f->iterations = lk->add_option("--iterations", o.iterations, "Grover iterations");

    auto* ceq = sub("qdict-count-eq", "Count keys whose value equals a target");
    f = &flags["qdict-count-eq"];
    ceq->add_option("--dict", o.dict, "Dictionary JSON path or inline JSON");
    ceq->add_option("--target", o.target, "Value to count")->required();
    f->control = ceq->add_option("--control", o.control, "Control register width t");

    auto* clt = sub("qdict-count-lt", "Count keys whose value is below a threshold");
    f = &flags["qdict-count-lt"];
    clt->add_option("--dict", o.dict, "Dictionary JSON path or inline JSON");
    clt->add_option("--threshold", o.threshold, "Strict upper bound")->required();
    f->control = clt->add_option("--control", o.control, "Control register width t");

    auto* qb = sub("qubo-min", "Iterative minimization of a quadratic polynomial", false);
    f = &flags["qubo-min"];
    qb->add_option("--poly", o.poly, "Polynomial JSON path or inline JSON");
    f->key_width = qb->add_option("--key-width", o.key_width, "Number of binary variables");
    f->value_width = qb->add_option("--value-width", o.value_width, "Minimum value width");
    f->control = qb->add_option("--control", o.control, "Control register width t");
    f->cap = qb->add_option("--cap", o.cap, "Oracle query cap (default 4 * 2^n)");

    auto* ss = sub("subset-sum", "Count subsets by their sum");
    f = &flags["subset-sum"];
    ss->add_option("--set", o.set, "Integers, e.g. 1,0,2,-1")->delimiter(',');
    ss->add_option("--target", o.target, "Sum to compare against (default 0)");
    ss->add_option("--relation", o.relation, "eq (sum == target) or lt (sum < target)");
    f->value_width = ss->add_option("--value-width", o.value_width, "Value register width");
    f->control = ss->add_option("--control", o.control, "Control register width t");

    auto* fb = sub("fibonacci", "Count n-bit strings without adjacent ones");
    f = &flags["fibonacci"];
    fb->add_option("--n", o.n, "String length")->required();
    f->control = fb->add_option("--control", o.control, "Control register width t");

    auto* ds = sub("dist", "Encode a probability distribution in a dictionary");
    f = &flags["dist"];
    ds->add_option("--kind", o.kind, "binomial, poisson or table")->required();
    f->key_width = ds->add_option("--key-width", o.key_width, "Key register width");
    f->value_width = ds->add_option("--value-width", o.value_width, "Value register width");
    ds->add_option("--lambda", o.lambda, "Poisson rate");
    ds->add_option("--masses", o.masses, "value:probability list for --kind table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands()[0]->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << "\n";
        return kExitInvalid;
    }

    const std::string command = app.get_subcommands()[0]->get_name();
    const Flags& cf = flags[command];
    try {
        const auto format = format_from_name(o.format);
        if (!format) {
            invalid("format", "must be text, csv, json or svg");
        }
        const bool sampling = cf.shots != nullptr && cf.shots->count() > 0;
        if (sampling && o.exact) {
            invalid("shots", "--shots and --exact are mutually exclusive");
        }
        const auto seed = resolve_seed(o, cf);
        if (sampling && !seed) {
            invalid("seed", "required with --shots (or set QDICT_SEED)");
        }
        if (sampling && o.shots < 1) {
            invalid("shots", "must be at least 1");
        }

        Outcome result;
        if (command == "simulate") result = run_simulate(o);
        else if (command == "pe") result = run_pe(o, cf);
        else if (command == "grover") result = run_grover(o, cf);
        else if (command == "count") result = run_count(o, cf);
        else if (command == "qdict-encode") result = run_qdict_encode(o);
        else if (command == "qdict-lookup") result = run_qdict_lookup(o, cf);
        else if (command == "qdict-count-eq") result = run_qdict_count(o, cf, false);
        else if (command == "qdict-count-lt") result = run_qdict_count(o, cf, true);
        else if (command == "qubo-min") result = run_qubo(o, cf, seed);
        else if (command == "subset-sum") result = run_subset_sum(o, cf);
        else if (command == "fibonacci") result = run_fibonacci(o, cf);
        else result = run_dist(o, cf);

        if (sampling) {
            if (!result.samplable || !result.report.histogram) {
                invalid("shots", "not supported by this command's output");
            }
            result.report.histogram = sample(*result.report.histogram, o.shots, *seed);
        }
        const std::string text = result.raw ? *result.raw : render_report(result.report, *format);
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream file(o.output, std::ios::binary);
            if (!file || !(file << text)) {
                invalid("output", "cannot write '" + o.output + "'");
            }
        }
        return result.flagged ? kExitFlagged : kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace qpatterns
