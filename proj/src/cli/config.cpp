// Copyright 2026 The swapdec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapdec/config.hpp"

#include "swapdec/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace swapdec::config {

using nlohmann::json;

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::SwapTrace:
        return "swap-trace";
    case ExperimentKind::Decay:
        return "decay";
    case ExperimentKind::Zeno:
        return "zeno";
    case ExperimentKind::Lg:
        return "lg";
    case ExperimentKind::SieveCheck:
        return "sieve-check";
    }
    return "decay";
}

ExperimentKind parse_experiment(std::string_view name) {
    for (const auto k : {ExperimentKind::SwapTrace, ExperimentKind::Decay, ExperimentKind::Zeno,
                         ExperimentKind::Lg, ExperimentKind::SieveCheck}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw ValidationError("unknown experiment '" + std::string(name) +
                          "' (expected swap-trace, decay, zeno, lg or sieve-check)");
}

Units parse_units(std::string_view text) {
    if (text == "physical") {
        return Units::Physical;
    }
    if (text == "natural") {
        return Units::Natural;
    }
    throw ValidationError("unknown units '" + std::string(text) + "' (expected physical or natural)");
}

std::string_view to_string(Units units) { return units == Units::Physical ? "physical" : "natural"; }

void ExperimentConfig::override_trials(std::uint64_t trials) {
    if (trials < 1) {
        throw ValidationError("trials must be ≥ 1");
    }
    std::visit(
        [&](auto &p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DecayParams>) {
                p.run.trials = trials;
            } else if constexpr (std::is_same_v<T, ZenoParams>) {
                p.zeno.trials = trials;
            } else if constexpr (std::is_same_v<T, LgParams>) {
                p.trials = trials;
            }
        },
        parameters);
}

void ExperimentConfig::override_units(Units u) {
    units = u;
    if (auto *d = std::get_if<DecayParams>(&parameters)) {
        d->run.units = u;
    }
}

namespace {

/// 1-based line of the first `"key"` at or after `from`, or 0.
std::size_t line_of(std::string_view text, const std::string &key, std::size_t from = 0) {
    const std::string needle = "\"" + key + "\"";
    auto pos = text.find(needle, from);
    if (pos == std::string_view::npos && from != 0) {
        pos = text.find(needle);
    }
    if (pos == std::string_view::npos) {
        return 0;
    }
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos; ++i) {
        line += text[i] == '\n' ? 1 : 0;
    }
    return line;
}

/// Reads one JSON object, remembering which keys were consumed so that any
/// leftover key is reported as unknown.
class ObjectReader {
  public:
    ObjectReader(const json &obj, std::string path, std::string_view text, std::size_t anchor)
        : obj_(obj), path_(std::move(path)), text_(text), anchor_(anchor) {
        if (!obj_.is_object()) {
            fail_at(path_.empty() ? "config" : path_, "", "must be a JSON object");
        }
    }

    [[noreturn]] void fail(const std::string &key, const std::string &message) const {
        fail_at(qualified(key), key, message);
    }

    bool has(const std::string &key) {
        return obj_.contains(key);
    }

    const json &raw(const std::string &key) {
        used_.insert(key);
        return obj_.at(key);
    }

    std::uint64_t u64(const std::string &key, std::uint64_t fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = raw(key);
        if (!v.is_number_unsigned()) {
            if (v.is_number_integer()) {
                fail(key, key + " must be ≥ 0");
            }
            fail(key, "expected a nonnegative integer");
        }
        return v.get<std::uint64_t>();
    }

    double real(const std::string &key, double fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = raw(key);
        if (!v.is_number()) {
            fail(key, "expected a number");
        }
        return v.get<double>();
    }

    bool boolean(const std::string &key, bool fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = raw(key);
        if (!v.is_boolean()) {
            fail(key, "expected true or false");
        }
        return v.get<bool>();
    }

    std::string string(const std::string &key, const std::string &fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = raw(key);
        if (!v.is_string()) {
            fail(key, "expected a string");
        }
        return v.get<std::string>();
    }

    Axis axis(const std::string &key, Axis fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = raw(key);
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
            !v[2].is_number()) {
            fail(key, "expected an array of three numbers");
        }
        Axis a{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
        try {
            BinaryObservable{"axis", ObservableKind::Pointer, "q", a}.validate();
        } catch (const ValidationError &) {
            fail(key, "axis must be a unit vector");
        }
        return a;
    }

    /// Rethrows `fn`'s ValidationError annotated with `key`.
    template <typename Fn>
    auto with_field(const std::string &key, Fn &&fn) {
        try {
            return fn();
        } catch (const ValidationError &e) {
            fail(key, e.what());
        }
    }

    ObjectReader child(const std::string &key) {
        return ObjectReader(raw(key), qualified(key), text_, position_of(key));
    }

    void finish() const {
        for (const auto &item : obj_.items()) {
            if (used_.count(item.key()) == 0) {
                fail_at(qualified(item.key()), item.key(), "unknown field");
            }
        }
    }

    [[nodiscard]] std::string qualified(const std::string &key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

  private:
    std::size_t position_of(const std::string &key) const {
        const auto pos = text_.find("\"" + key + "\"", anchor_);
        return pos == std::string_view::npos ? anchor_ : pos;
    }

    [[noreturn]] void fail_at(const std::string &field, const std::string &key,
                              const std::string &message) const {
        std::string what = "config field '" + field + "': " + message;
        if (!key.empty()) {
            if (const std::size_t line = line_of(text_, key, anchor_); line != 0) {
                what += " (line " + std::to_string(line) + ")";
            }
        }
        throw ValidationError(what);
    }

    const json &obj_;
    std::string path_;
    std::string_view text_;
    std::size_t anchor_;
    std::set<std::string> used_;
};

MeasurementMode parse_mode(ObjectReader &r, const std::string &key, MeasurementMode fallback) {
    const std::string v = r.string(key, fallback == MeasurementMode::Recorded ? "recorded" : "unitary");
    if (v == "recorded") {
        return MeasurementMode::Recorded;
    }
    if (v == "unitary") {
        return MeasurementMode::Unitary;
    }
    r.fail(key, "expected \"recorded\" or \"unitary\"");
}

SwapParams parse_swap(ObjectReader r) {
    SwapParams p;
    if (r.has("sequence")) {
        const json &seq = r.raw("sequence");
        if (!seq.is_array()) {
            r.fail("sequence", "expected an array of \"R\"/\"P\" labels");
        }
        p.sequence.clear();
        for (const auto &item : seq) {
            if (!item.is_string()) {
                r.fail("sequence", "expected an array of \"R\"/\"P\" labels");
            }
            p.sequence.push_back(r.with_field("sequence", [&] { return parse_swap_label(item.get<std::string>()); }));
        }
        if (p.sequence.empty()) {
            r.fail("sequence", "swap sequence must not be empty");
        }
    }
    const std::string layout = r.string("layout", "single");
    if (layout == "single") {
        p.setup.layout = ObserverLayout::Single;
    } else if (layout == "register") {
        p.setup.layout = ObserverLayout::Register;
    } else {
        r.fail("layout", "expected \"single\" or \"register\"");
    }
    p.setup.r_theta = r.real("r_theta", p.setup.r_theta);
    p.setup.r_phi = r.real("r_phi", p.setup.r_phi);
    p.setup.p_theta = r.real("p_theta", p.setup.p_theta);
    p.setup.p_phi = r.real("p_phi", p.setup.p_phi);
    p.setup.r_axis = r.axis("r_axis", p.setup.r_axis);
    p.setup.p_axis = r.axis("p_axis", p.setup.p_axis);
    r.finish();
    return p;
}

DecayParams parse_decay(ObjectReader r) {
    DecayParams p;
    RunConfig &c = p.run;
    c.n = r.u64("n", c.n);
    if (c.n < 1) {
        r.fail("n", "n must be ≥ 1");
    }
    c.m = r.u64("m", c.m);
    if (c.m < 1) {
        r.fail("m", "m must be ≥ 1");
    }
    c.p_int = r.real("p_int", c.p_int);
    if (!(c.p_int >= 0.0 && c.p_int <= 1.0)) {
        r.fail("p_int", "p_int must lie in [0, 1]");
    }
    c.trials = r.u64("trials", c.trials);
    if (c.trials < 1) {
        r.fail("trials", "trials must be ≥ 1");
    }
    c.mode = parse_mode(r, "mode", c.mode);
    c.pointer_theta = r.real("pointer_theta", c.pointer_theta);
    c.pointer_phi = r.real("pointer_phi", c.pointer_phi);
    c.reference_qubits = r.u64("reference_qubits", c.reference_qubits);
    if (c.reference_qubits < 1) {
        r.fail("reference_qubits", "reference_qubits must be ≥ 1");
    }
    c.measure_pointer = r.boolean("measure_pointer", c.measure_pointer);
    const std::string env = r.string("environment", "fresh");
    if (env == "fresh") {
        c.environment = EnvironmentModel::Fresh;
    } else if (env == "compact") {
        c.environment = EnvironmentModel::Compact;
    } else {
        r.fail("environment", "expected \"fresh\" or \"compact\"");
    }
    c.efficiency = r.real("efficiency", c.efficiency);
    if (!(c.efficiency >= 0.6931471805599453 - 1e-15)) {
        r.fail("efficiency", "efficiency factor c must be ≥ ln 2");
    }
    c.temperature = r.real("temperature", c.temperature);
    if (!(c.temperature > 0.0)) {
        r.fail("temperature", "temperature must be positive");
    }
    p.bootstrap_resamples = r.u64("bootstrap_resamples", p.bootstrap_resamples);
    r.finish();
    return p;
}

ZenoParams parse_zeno(ObjectReader r) {
    ZenoParams p;
    ZenoConfig &z = p.zeno;
    z.m = r.u64("m", z.m);
    if (z.m < 1) {
        r.fail("m", "m must be ≥ 1");
    }
    z.trials = r.u64("trials", z.trials);
    if (z.trials < 1) {
        r.fail("trials", "trials must be ≥ 1");
    }
    z.epsilon = r.real("epsilon", z.epsilon);
    z.initial_theta = r.real("initial_theta", z.initial_theta);
    z.initial_phi = r.real("initial_phi", z.initial_phi);
    z.axis = r.axis("axis", z.axis);
    r.finish();
    return p;
}

LgParams parse_lg(ObjectReader r) {
    LgParams p;
    p.omega = r.real("omega", p.omega);
    p.tau = r.real("tau", p.tau);
    if (!(p.tau > 0.0)) {
        r.fail("tau", "tau must be positive");
    }
    if (r.has("thetas")) {
        const json &t = r.raw("thetas");
        if (!t.is_array()) {
            r.fail("thetas", "expected an array of numbers");
        }
        for (const auto &v : t) {
            if (!v.is_number()) {
                r.fail("thetas", "expected an array of numbers");
            }
            p.thetas.push_back(v.get<double>());
        }
    }
    p.trials = r.u64("trials", p.trials);
    if (p.trials < 1) {
        r.fail("trials", "trials must be ≥ 1");
    }
    p.control = r.boolean("control", p.control);
    r.finish();
    return p;
}

SieveParams parse_sieve(ObjectReader r) {
    SieveParams p;
    if (!r.has("catalog")) {
        r.fail("catalog", "required field missing");
    }
    const json &cat = r.raw("catalog");
    if (!cat.is_array()) {
        r.fail("catalog", "expected an array of observables");
    }
    ObservableCatalog catalog;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        ObjectReader e(cat[i], r.qualified("catalog[" + std::to_string(i) + "]"), "", 0);
        BinaryObservable obs;
        obs.id = e.string("id", "");
        if (obs.id.empty()) {
            r.fail("catalog", "observable " + std::to_string(i) + " needs a nonempty id");
        }
        obs.kind = r.with_field("catalog", [&] { return parse_kind(e.string("kind", "pointer")); });
        obs.target = e.string("target", "");
        if (obs.target.empty()) {
            r.fail("catalog", "observable '" + obs.id + "' needs a target qubit role");
        }
        obs.axis = e.axis("axis", Axis::z_axis());
        e.finish();
        r.with_field("catalog", [&] {
            catalog.add(obs);
            return 0;
        });
        p.catalog.push_back(obs);
    }
    if (r.has("reference_spec")) {
        const json &spec = r.raw("reference_spec");
        if (!spec.is_object()) {
            r.fail("reference_spec", "expected an object mapping reference ids to bits");
        }
        for (const auto &item : spec.items()) {
            if (!item.value().is_number_unsigned() || item.value().get<std::uint64_t>() > 1) {
                r.fail("reference_spec", "expected bit for '" + item.key() + "' must be 0 or 1");
            }
            if (!catalog.contains(item.key())) {
                r.fail("reference_spec", "observable id '" + item.key() + "' is not defined in the catalog");
            }
            p.reference_spec[item.key()] = item.value().get<int>();
        }
        r.with_field("reference_spec", [&] {
            ReferenceSpec{p.reference_spec}.validate(catalog);
            return 0;
        });
    }
    if (r.has("schedule")) {
        ObjectReader s = r.child("schedule");
        p.schedule_kind = s.string("kind", "round_robin");
        p.schedule.dt = s.real("dt", 1.0);
        if (p.schedule_kind == "rows") {
            if (!s.has("rows")) {
                s.fail("rows", "required when kind is \"rows\"");
            }
            const json &rows = s.raw("rows");
            if (!rows.is_array()) {
                s.fail("rows", "expected an array of probability rows");
            }
            for (const auto &row : rows) {
                if (!row.is_array()) {
                    s.fail("rows", "expected an array of probability rows");
                }
                std::vector<double> values;
                for (const auto &v : row) {
                    if (!v.is_number()) {
                        s.fail("rows", "probabilities must be numbers");
                    }
                    values.push_back(v.get<double>());
                }
                p.schedule.rows.push_back(std::move(values));
            }
            p.schedule.cyclic = s.boolean("cyclic", false);
            s.with_field("rows", [&] {
                p.schedule.validate(catalog.size());
                return 0;
            });
        } else if (p.schedule_kind != "round_robin" && p.schedule_kind != "uniform") {
            s.fail("kind", "expected \"round_robin\", \"uniform\" or \"rows\"");
        }
        if (!(p.schedule.dt > 0.0)) {
            s.fail("dt", "dt must be positive");
        }
        s.finish();
    }
    p.ticks = r.u64("ticks", p.ticks);
    if (r.has("initial_states")) {
        const json &init = r.raw("initial_states");
        if (!init.is_object()) {
            r.fail("initial_states", "expected an object mapping qubit roles to Bloch angles");
        }
        for (const auto &item : init.items()) {
            ObjectReader b(item.value(), r.qualified("initial_states." + item.key()), "", 0);
            BlochAngles angles{b.real("theta", 0.0), b.real("phi", 0.0)};
            b.finish();
            p.initial_states[item.key()] = angles;
        }
    }
    p.efficiency = r.real("efficiency", p.efficiency);
    if (!(p.efficiency >= 0.6931471805599453 - 1e-15)) {
        r.fail("efficiency", "efficiency factor c must be ≥ ln 2");
    }
    p.temperature = r.real("temperature", p.temperature);
    if (!(p.temperature > 0.0)) {
        r.fail("temperature", "temperature must be positive");
    }
    if (r.has("window")) {
        ObjectReader w = r.child("window");
        p.window.begin = w.u64("begin", 0);
        p.window.end = w.u64("end", UINT64_MAX);
        w.finish();
    }
    r.finish();
    return p;
}

json axis_json(const Axis &a) { return json::array({a.x, a.y, a.z}); }

} // namespace

ExperimentConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            line += text[i] == '\n' ? 1 : 0;
        }
        throw ValidationError("config is not valid JSON (line " + std::to_string(line) + "): " + e.what());
    }
    ObjectReader top(doc, "", text, 0);
    ExperimentConfig cfg;
    if (!top.has("experiment")) {
        top.fail("experiment", "required field missing");
    }
    cfg.experiment = top.with_field("experiment", [&] { return parse_experiment(top.string("experiment", "")); });
    if (top.has("seed")) {
        cfg.seed = top.u64("seed", 0);
    }
    cfg.units = top.with_field("units", [&] { return parse_units(top.string("units", "physical")); });
    if (top.has("output")) {
        cfg.output = top.string("output", "");
    }
    const json empty = json::object();
    const bool has_params = top.has("parameters");
    ObjectReader params = has_params ? top.child("parameters") : ObjectReader(empty, "parameters", text, 0);
    switch (cfg.experiment) {
    case ExperimentKind::SwapTrace:
        cfg.parameters = parse_swap(std::move(params));
        break;
    case ExperimentKind::Decay: {
        DecayParams d = parse_decay(std::move(params));
        d.run.units = cfg.units;
        cfg.parameters = d;
        break;
    }
    case ExperimentKind::Zeno:
        cfg.parameters = parse_zeno(std::move(params));
        break;
    case ExperimentKind::Lg:
        cfg.parameters = parse_lg(std::move(params));
        break;
    case ExperimentKind::SieveCheck:
        cfg.parameters = parse_sieve(std::move(params));
        break;
    }
    top.finish();
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

json to_json(const ExperimentConfig &config) {
    json j;
    j["experiment"] = std::string(to_string(config.experiment));
    if (config.seed) {
        j["seed"] = *config.seed;
    }
    j["units"] = std::string(to_string(config.units));
    if (config.output) {
        j["output"] = *config.output;
    }
    json p = json::object();
    std::visit(
        [&](const auto &params) {
            using T = std::decay_t<decltype(params)>;
            if constexpr (std::is_same_v<T, SwapParams>) {
                json seq = json::array();
                for (const auto l : params.sequence) {
                    seq.push_back(std::string(1, to_char(l)));
                }
                p["sequence"] = seq;
                p["layout"] = params.setup.layout == ObserverLayout::Single ? "single" : "register";
                p["r_theta"] = params.setup.r_theta;
                p["r_phi"] = params.setup.r_phi;
                p["p_theta"] = params.setup.p_theta;
                p["p_phi"] = params.setup.p_phi;
                p["r_axis"] = axis_json(params.setup.r_axis);
                p["p_axis"] = axis_json(params.setup.p_axis);
            } else if constexpr (std::is_same_v<T, DecayParams>) {
                const RunConfig &c = params.run;
                p["n"] = c.n;
                p["m"] = c.m;
                p["p_int"] = c.p_int;
                p["trials"] = c.trials;
                p["mode"] = c.mode == MeasurementMode::Recorded ? "recorded" : "unitary";
                p["pointer_theta"] = c.pointer_theta;
                p["pointer_phi"] = c.pointer_phi;
                p["reference_qubits"] = c.reference_qubits;
                p["measure_pointer"] = c.measure_pointer;
                p["environment"] = c.environment == EnvironmentModel::Fresh ? "fresh" : "compact";
                p["efficiency"] = c.efficiency;
                p["temperature"] = c.temperature;
                p["bootstrap_resamples"] = params.bootstrap_resamples;
            } else if constexpr (std::is_same_v<T, ZenoParams>) {
                const ZenoConfig &z = params.zeno;
                p["m"] = z.m;
                p["trials"] = z.trials;
                p["epsilon"] = z.epsilon;
                p["initial_theta"] = z.initial_theta;
                p["initial_phi"] = z.initial_phi;
                p["axis"] = axis_json(z.axis);
            } else if constexpr (std::is_same_v<T, LgParams>) {
                p["omega"] = params.omega;
                p["tau"] = params.tau;
                if (!params.thetas.empty()) {
                    p["thetas"] = params.thetas;
                }
                p["trials"] = params.trials;
                p["control"] = params.control;
            } else if constexpr (std::is_same_v<T, SieveParams>) {
                json cat = json::array();
                for (const auto &o : params.catalog) {
                    cat.push_back({{"id", o.id},
                                   {"kind", std::string(swapdec::to_string(o.kind))},
                                   {"target", o.target},
                                   {"axis", axis_json(o.axis)}});
                }
                p["catalog"] = cat;
                json spec = json::object();
                for (const auto &[id, bit] : params.reference_spec) {
                    spec[id] = bit;
                }
                p["reference_spec"] = spec;
                json sched{{"kind", params.schedule_kind}, {"dt", params.schedule.dt}};
                if (params.schedule_kind == "rows") {
                    sched["rows"] = params.schedule.rows;
                    sched["cyclic"] = params.schedule.cyclic;
                }
                p["schedule"] = sched;
                p["ticks"] = params.ticks;
                json init = json::object();
                for (const auto &[role, a] : params.initial_states) {
                    init[role] = {{"theta", a.theta}, {"phi", a.phi}};
                }
                p["initial_states"] = init;
                p["efficiency"] = params.efficiency;
                p["temperature"] = params.temperature;
                p["window"] = {{"begin", params.window.begin}, {"end", params.window.end}};
            }
        },
        config.parameters);
    j["parameters"] = p;
    return j;
}

} // namespace swapdec::config
