// Copyright 2026 The shadowkit Authors
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

#include "shadowkit/cli.h"

#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <random>

#include "shadowkit/acquisition.h"
#include "shadowkit/derandomizer.h"
#include "shadowkit/io.h"
#include "shadowkit/linear.h"
#include "shadowkit/nonlinear.h"
#include "shadowkit/planner.h"
#include "shadowkit/witness_demo.h"

namespace shadowkit {

namespace {

/// Canonical command line echoed into output files. Execution-only flags such as
/// --serial and --threads are left out so that they cannot change output bytes.
class ConfigLine {
   public:
    explicit ConfigLine(std::string_view subcommand) : text_("shadowkit " + std::string(subcommand)) {
    }
    template <typename T>
    ConfigLine &add(std::string_view flag, const T &value) {
        text_ += " --" + std::string(flag) + " ";
        if constexpr (std::is_same_v<T, double>) {
            text_ += format_double(value);
        } else if constexpr (std::is_arithmetic_v<T>) {
            text_ += std::to_string(value);
        } else {
            text_ += value;
        }
        return *this;
    }
    ConfigLine &flag(std::string_view flag) {
        text_ += " --" + std::string(flag);
        return *this;
    }
    const std::string &str() const {
        return text_;
    }

   private:
    std::string text_;
};

uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

/// Options shared by every subcommand that runs an OpenMP kernel.
struct ExecOptions {
    bool serial = false;
    int threads = 0;

    void attach(CLI::App *app) {
        app->add_flag("--serial", serial, "Run the serial reference kernels");
        app->add_option("--threads", threads, "OpenMP thread count (0 keeps the default)")->check(CLI::NonNegativeNumber);
    }
    bool parallel() const {
        if (threads > 0) {
            omp_set_num_threads(threads);
        }
        return !serial;
    }
};

void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file_atomic(path, text);
    }
}

std::vector<LinearTarget> observable_targets(const ObservableList &obs, bool sum, std::vector<std::string> &ids) {
    std::vector<LinearTarget> targets;
    ids.clear();
    if (obs.terms.empty()) {
        throw std::invalid_argument("observables file has no terms");
    }
    if (sum) {
        targets.emplace_back(WeightedPauliSum(obs.num_qubits, obs.terms));
        ids.push_back("sum");
    } else {
        for (size_t i = 0; i < obs.terms.size(); i++) {
            targets.emplace_back(WeightedPauliSum(obs.num_qubits, {obs.terms[i]}));
            ids.push_back("obs" + std::to_string(i));
        }
    }
    return targets;
}

void check_qubits(size_t expected, size_t got, std::string_view what) {
    if (expected != got) {
        throw std::invalid_argument(
            std::string(what) + " has n=" + std::to_string(got) + " but the dataset has n=" + std::to_string(expected));
    }
}

// ---- simulate ----

struct SimulateArgs {
    std::string state;
    std::string primitive = "pauli";
    size_t shots = 0;
    uint64_t seed = 0;
    std::string scheme_path;
    std::string grid;
    std::string out_path;
    ExecOptions exec;
};

void run_simulate(const SimulateArgs &a, bool seed_given, std::ostream &out) {
    uint64_t seed = seed_given ? a.seed : fresh_seed();
    StateOracle state = parse_state_descriptor(a.state);
    Primitive primitive = parse_primitive(a.primitive);
    AcquireOptions opts;
    opts.parallel = a.exec.parallel();
    opts.state_descriptor = a.state;

    ConfigLine config("simulate");
    config.add("state", a.state).add("primitive", a.primitive);
    ShadowDataset ds;
    if (!a.scheme_path.empty() || !a.grid.empty()) {
        if (primitive != Primitive::pauli) {
            throw std::invalid_argument("--scheme and --grid require --primitive pauli");
        }
        MeasurementScheme scheme;
        if (!a.scheme_path.empty()) {
            scheme = parse_scheme(read_file(a.scheme_path));
            config.add("scheme", a.scheme_path);
        } else {
            size_t x = a.grid.find('x');
            auto nu = x == std::string::npos ? std::nullopt : std::optional(std::stoull(a.grid.substr(0, x)));
            auto nm = x == std::string::npos ? std::nullopt : std::optional(std::stoull(a.grid.substr(x + 1)));
            if (!nu || !nm || *nu == 0 || *nm == 0) {
                throw std::invalid_argument("--grid expects <bases>x<repetitions>, e.g. 50x20");
            }
            scheme = random_scheme(state.num_qubits(), *nu, *nm, seed);
            config.add("grid", a.grid);
        }
        if (scheme.num_qubits != state.num_qubits()) {
            throw std::invalid_argument(
                "scheme has n=" + std::to_string(scheme.num_qubits) + " but the state has n=" +
                std::to_string(state.num_qubits()));
        }
        ds = acquire_scheme(state, scheme, seed, opts);
    } else {
        if (a.shots == 0) {
            throw std::invalid_argument("--shots is required without --scheme or --grid");
        }
        config.add("shots", a.shots);
        ds = primitive == Primitive::pauli ? acquire_pauli(state, a.shots, seed, opts)
                                           : acquire_clifford(state, a.shots, seed, opts);
    }
    config.add("seed", seed).add("out", a.out_path);
    ds.header.config = config.str();
    write_file_atomic(a.out_path, serialize_shadow(ds));
    out << "wrote " << ds.size() << " snapshots to " << a.out_path << " (seed=" << seed << ")\n";
}

// ---- predict ----

struct PredictArgs {
    std::string shadow_path;
    std::string observables_path;
    bool sum = false;
    size_t k = 10;
    std::string out_path;
    std::string csv_path;
    ExecOptions exec;
};

void run_predict(const PredictArgs &a, std::ostream &out) {
    ShadowDataset ds = parse_shadow(read_file(a.shadow_path));
    ObservableList obs = parse_observables(read_file(a.observables_path));
    check_qubits(ds.header.num_qubits, obs.num_qubits, "observables file");
    std::vector<std::string> ids;
    auto targets = observable_targets(obs, a.sum, ids);
    EstimationReport report = predict_linear(ds, targets, a.k, ids, a.exec.parallel());
    ConfigLine config("predict");
    config.add("shadow", a.shadow_path).add("observables", a.observables_path);
    if (a.sum) {
        config.flag("sum");
    }
    config.add("k", a.k);
    if (!a.out_path.empty()) {
        config.add("out", a.out_path);
    }
    if (!a.csv_path.empty()) {
        config.add("csv", a.csv_path);
    }
    report.header.config = config.str();
    emit(a.out_path, linear_report_text(report), out);
    if (!a.csv_path.empty()) {
        write_file_atomic(a.csv_path, linear_report_csv(report));
    }
}

// ---- entropy ----

struct EntropyArgs {
    std::string shadow_path;
    std::string subsystems_path;
    size_t k = 10;
    std::string estimator = "shadow";
    std::string out_path;
    std::string csv_path;
    ExecOptions exec;
};

void run_entropy(const EntropyArgs &a, std::ostream &out) {
    ShadowDataset ds = parse_shadow(read_file(a.shadow_path));
    if (ds.header.kind != Primitive::pauli) {
        throw std::invalid_argument("pauli dataset required");
    }
    SubsystemList subs = parse_subsystems(read_file(a.subsystems_path));
    check_qubits(ds.header.num_qubits, subs.num_qubits, "subsystems file");
    std::vector<EntropyRow> rows;
    if (a.estimator == "shadow") {
        rows = estimate_entropies(ds, subs.subsystems, a.k, a.exec.parallel());
    } else {
        for (const auto &sub : subs.subsystems) {
            EntropyRow row;
            row.subsystem = sub;
            row.purity = brydges_purity(ds, sub);
            row.entropy_bits = renyi2_entropy(row.purity, sub.size());
            row.k = 1;
            row.n = ds.size();
            rows.push_back(std::move(row));
        }
    }
    ConfigLine config("entropy");
    config.add("shadow", a.shadow_path).add("subsystems", a.subsystems_path).add("k", a.k).add("estimator", a.estimator);
    if (!a.out_path.empty()) {
        config.add("out", a.out_path);
    }
    if (!a.csv_path.empty()) {
        config.add("csv", a.csv_path);
    }
    DatasetHeader header = ds.header;
    header.config = config.str();
    emit(a.out_path, entropy_report_text(header, rows), out);
    if (!a.csv_path.empty()) {
        write_file_atomic(a.csv_path, entropy_report_csv(rows));
    }
}

// ---- fidelity ----

struct FidelityArgs {
    std::string shadow_path;
    std::string state;
    size_t shots = 0;
    uint64_t seed = 0;
    std::string target;
    size_t k = 10;
    std::string out_path;
    std::string csv_path;
    ExecOptions exec;
};

void run_fidelity(const FidelityArgs &a, bool seed_given, std::ostream &out) {
    bool parallel = a.exec.parallel();
    ConfigLine config("fidelity");
    ShadowDataset ds;
    if (!a.shadow_path.empty()) {
        ds = parse_shadow(read_file(a.shadow_path));
        config.add("shadow", a.shadow_path);
    } else {
        if (a.shots == 0) {
            throw std::invalid_argument("--shots is required with --state");
        }
        uint64_t seed = seed_given ? a.seed : fresh_seed();
        AcquireOptions opts;
        opts.parallel = parallel;
        opts.state_descriptor = a.state;
        ds = acquire_clifford(parse_state_descriptor(a.state), a.shots, seed, opts);
        config.add("state", a.state).add("shots", a.shots).add("seed", seed);
    }
    if (ds.header.kind != Primitive::clifford) {
        throw std::invalid_argument("clifford dataset required");
    }
    LinearTarget target = target_from_descriptor(a.target);
    std::vector<LinearTarget> targets{target};
    std::vector<std::string> ids{a.target};
    EstimationReport report = predict_linear(ds, targets, a.k, ids, parallel);
    config.add("target", a.target).add("k", a.k);
    if (!a.out_path.empty()) {
        config.add("out", a.out_path);
    }
    if (!a.csv_path.empty()) {
        config.add("csv", a.csv_path);
    }
    report.header.config = config.str();
    emit(a.out_path, linear_report_text(report), out);
    if (!a.csv_path.empty()) {
        write_file_atomic(a.csv_path, linear_report_csv(report));
    }
}

// ---- plan ----

struct PlanArgs {
    std::string observables_path;
    bool sum = false;
    double epsilon = 0;
    double delta = 0;
    std::string primitive = "pauli";
    std::string out_path;
};

void run_plan(const PlanArgs &a, std::ostream &out) {
    ObservableList obs = parse_observables(read_file(a.observables_path));
    std::vector<std::string> ids;
    auto targets = observable_targets(obs, a.sum, ids);
    SamplePlan plan = plan_linear(targets, a.epsilon, a.delta, parse_primitive(a.primitive), obs.num_qubits);
    emit(a.out_path, plan_report_text(plan), out);
}

// ---- derandomize ----

struct DerandomizeArgs {
    std::string observables_path;
    double epsilon = 0;
    size_t measurements = 0;
    size_t hit_target = 0;
    std::string out_path;
};

void run_derandomize(const DerandomizeArgs &a, bool epsilon_given, std::ostream &out) {
    ObservableList obs = parse_observables(read_file(a.observables_path));
    std::vector<PauliString> strings;
    for (const auto &t : obs.terms) {
        if (support(t.string) == 0) {
            throw std::invalid_argument("derandomize: the identity term needs no measurements; remove it");
        }
        strings.push_back(t.string);
    }
    DerandOptions opts;
    opts.epsilon = epsilon_given ? a.epsilon : default_hit_target_epsilon();
    ConfigLine config("derandomize");
    config.add("observables", a.observables_path).add("epsilon", opts.epsilon);
    if (a.measurements > 0) {
        opts.budget = a.measurements;
        config.add("measurements", a.measurements);
    } else {
        opts.hit_target = a.hit_target;
        config.add("hit-target", a.hit_target);
    }
    config.add("out", a.out_path);
    MeasurementScheme scheme = derandomize(strings, opts);
    write_file_atomic(a.out_path, with_config_line(serialize_scheme(scheme), config.str()));
    out << "rows=" << scheme.rows.size() << "\n";
    out << "min_hits=" << min_hits(strings, scheme) << "\n";
}

// ---- schwinger-obs ----

void run_schwinger(size_t sites, const std::string &out_path, std::ostream &out) {
    ObservableList obs;
    obs.num_qubits = sites;
    for (auto &p : schwinger_observables(sites)) {
        obs.terms.push_back({1.0, std::move(p)});
    }
    ConfigLine config("schwinger-obs");
    config.add("sites", sites).add("out", out_path);
    write_file_atomic(out_path, with_config_line(serialize_observables(obs), config.str()));
    out << "observables=" << obs.terms.size() << "\n";
}

// ---- witness-demo ----

struct WitnessArgs {
    WitnessDemoOptions demo;
    std::string out_path;
    std::string csv_path;
    ExecOptions exec;
};

void run_witness(WitnessArgs a, bool seed_given, std::ostream &out) {
    if (!seed_given) {
        a.demo.seed = fresh_seed();
    }
    a.demo.parallel = a.exec.parallel();
    WitnessDemoResult r = run_witness_demo(a.demo);
    ConfigLine config("witness-demo");
    config.add("seed", a.demo.seed)
        .add("witnesses", a.demo.witnesses)
        .add("shots", a.demo.shots)
        .add("k", a.demo.k)
        .add("epsilon", a.demo.epsilon)
        .add("delta", a.demo.delta);
    if (!a.out_path.empty()) {
        config.add("out", a.out_path);
    }
    if (!a.csv_path.empty()) {
        config.add("csv", a.csv_path);
    }
    emit(a.out_path, witness_report_text(r, config.str()), out);
    if (!a.csv_path.empty()) {
        write_file_atomic(a.csv_path, witness_report_csv(r));
    }
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Classical shadows toolkit", "shadowkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    const auto existing = CLI::ExistingFile;
    const auto primitives = CLI::IsMember({"pauli", "clifford"});

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Sample a classical shadow of a state");
    simulate->add_option("--state", sim.state, "State descriptor, e.g. ghz:10")->required();
    simulate->add_option("--primitive", sim.primitive, "pauli or clifford")->check(primitives);
    simulate->add_option("--shots", sim.shots, "Number of snapshots")->check(CLI::PositiveNumber);
    auto *sim_seed = simulate->add_option("--seed", sim.seed, "Seed (random and recorded when omitted)");
    auto *sim_scheme = simulate->add_option("--scheme", sim.scheme_path, "Fixed measurement scheme file")->check(existing);
    auto *sim_grid = simulate->add_option("--grid", sim.grid, "Grouped random bases <bases>x<repetitions>");
    sim_scheme->excludes(sim_grid);
    simulate->add_option("--out", sim.out_path, "Output shadow file")->required();
    sim.exec.attach(simulate);

    PredictArgs pred;
    auto *predict = app.add_subcommand("predict", "Median-of-means estimates of linear observables");
    predict->add_option("--shadow", pred.shadow_path, "Shadow file")->required()->check(existing);
    predict->add_option("--observables", pred.observables_path, "Observables file")->required()->check(existing);
    predict->add_flag("--sum", pred.sum, "Treat all terms as one weighted sum");
    predict->add_option("--k", pred.k, "Number of median-of-means batches")->check(CLI::PositiveNumber);
    predict->add_option("--out", pred.out_path, "Report file (stdout when omitted)");
    predict->add_option("--csv", pred.csv_path, "CSV report file");
    pred.exec.attach(predict);

    EntropyArgs ent;
    auto *entropy = app.add_subcommand("entropy", "Renyi-2 entropies of subsystems");
    entropy->add_option("--shadow", ent.shadow_path, "Pauli shadow file")->required()->check(existing);
    entropy->add_option("--subsystems", ent.subsystems_path, "Subsystems file")->required()->check(existing);
    entropy->add_option("--k", ent.k, "Number of median-of-U-statistics batches")->check(CLI::PositiveNumber);
    entropy->add_option("--estimator", ent.estimator, "shadow or brydges")->check(CLI::IsMember({"shadow", "brydges"}));
    entropy->add_option("--out", ent.out_path, "Report file (stdout when omitted)");
    entropy->add_option("--csv", ent.csv_path, "CSV report file");
    ent.exec.attach(entropy);

    FidelityArgs fid;
    auto *fidelity = app.add_subcommand("fidelity", "Fidelity with a pure target state from Clifford shadows");
    auto *fid_shadow = fidelity->add_option("--shadow", fid.shadow_path, "Clifford shadow file")->check(existing);
    auto *fid_state = fidelity->add_option("--state", fid.state, "Simulate this state instead of reading a file");
    fid_shadow->excludes(fid_state);
    fidelity->add_option("--shots", fid.shots, "Snapshots to simulate with --state")->check(CLI::PositiveNumber);
    auto *fid_seed = fidelity->add_option("--seed", fid.seed, "Seed for --state");
    fidelity->add_option("--target", fid.target, "Pure target state descriptor")->required();
    fidelity->add_option("--k", fid.k, "Number of median-of-means batches")->check(CLI::PositiveNumber);
    fidelity->add_option("--out", fid.out_path, "Report file (stdout when omitted)");
    fidelity->add_option("--csv", fid.csv_path, "CSV report file");
    fid.exec.attach(fidelity);

    PlanArgs pl;
    auto *plan = app.add_subcommand("plan", "Sample complexity K and N for a set of observables");
    plan->add_option("--observables", pl.observables_path, "Observables file")->required()->check(existing);
    plan->add_flag("--sum", pl.sum, "Treat all terms as one weighted sum");
    plan->add_option("--epsilon", pl.epsilon, "Target accuracy")->required()->check(CLI::PositiveNumber);
    plan->add_option("--delta", pl.delta, "Failure probability")->required()->check(CLI::Range(0.0, 1.0));
    plan->add_option("--primitive", pl.primitive, "pauli or clifford")->check(primitives);
    plan->add_option("--out", pl.out_path, "Output file (stdout when omitted)");

    DerandomizeArgs der;
    auto *derand = app.add_subcommand("derandomize", "Greedy derandomized Pauli measurement scheme");
    derand->add_option("--observables", der.observables_path, "Observables file")->required()->check(existing);
    auto *der_eps = derand->add_option("--epsilon", der.epsilon, "Accuracy in the cost function")->check(CLI::PositiveNumber);
    auto *der_m = derand->add_option("--measurements", der.measurements, "Number of rows")->check(CLI::PositiveNumber);
    auto *der_t = derand->add_option("--hit-target", der.hit_target, "Stop once every observable is hit T times")
                      ->check(CLI::PositiveNumber);
    der_m->excludes(der_t);
    derand->add_option("--out", der.out_path, "Output scheme file")->required();

    size_t sites = 0;
    std::string schwinger_out;
    auto *schwinger = app.add_subcommand("schwinger-obs", "Local observables of the lattice Schwinger model");
    schwinger->add_option("--sites", sites, "Number of lattice sites (even, at least 4)")->required();
    schwinger->add_option("--out", schwinger_out, "Output observables file")->required();

    WitnessArgs wit;
    auto *witness = app.add_subcommand("witness-demo", "Tripartite witness estimation on a rotated GHZ state");
    auto *wit_seed = witness->add_option("--seed", wit.demo.seed, "Seed (random and recorded when omitted)");
    witness->add_option("--witnesses", wit.demo.witnesses, "Number of random witnesses")->check(CLI::PositiveNumber);
    witness->add_option("--shots", wit.demo.shots, "Clifford snapshots")->check(CLI::PositiveNumber);
    witness->add_option("--k", wit.demo.k, "Number of median-of-means batches")->check(CLI::PositiveNumber);
    witness->add_option("--epsilon", wit.demo.epsilon, "Accuracy for the direct baseline")->check(CLI::PositiveNumber);
    witness->add_option("--delta", wit.demo.delta, "Failure probability for the direct baseline")
        ->check(CLI::Range(0.0, 1.0));
    witness->add_option("--out", wit.out_path, "Report file (stdout when omitted)");
    witness->add_option("--csv", wit.csv_path, "CSV report file");
    wit.exec.attach(witness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            run_simulate(sim, sim_seed->count() > 0, out);
        } else if (predict->parsed()) {
            run_predict(pred, out);
        } else if (entropy->parsed()) {
            run_entropy(ent, out);
        } else if (fidelity->parsed()) {
            if (fid.shadow_path.empty() && fid.state.empty()) {
                err << "fidelity: one of --shadow or --state is required\n";
                return kExitUsage;
            }
            run_fidelity(fid, fid_seed->count() > 0, out);
        } else if (plan->parsed()) {
            run_plan(pl, out);
        } else if (derand->parsed()) {
            if (der_m->count() == 0 && der_t->count() == 0) {
                err << "derandomize: one of --measurements or --hit-target is required\n";
                return kExitUsage;
            }
            run_derandomize(der, der_eps->count() > 0, out);
        } else if (schwinger->parsed()) {
            run_schwinger(sites, schwinger_out, out);
        } else if (witness->parsed()) {
            run_witness(wit, wit_seed->count() > 0, out);
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace shadowkit
