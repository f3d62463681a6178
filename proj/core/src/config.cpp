#include "scramble/config.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "scramble/errors.hpp"
#include "scramble/presets.hpp"

namespace scramble {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Lightcone: return "lightcone";
        case ExperimentKind::Entropy: return "entropy";
        case ExperimentKind::OperatorState: return "operator-state";
        case ExperimentKind::OperatorSize: return "operator-size";
        case ExperimentKind::Thermalization: return "thermalization";
        case ExperimentKind::Velocities: return "velocities";
        case ExperimentKind::FiniteSize: return "finite-size";
    }
    return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
    if (name == "lightcone") return ExperimentKind::Lightcone;
    if (name == "entropy") return ExperimentKind::Entropy;
    if (name == "operator-state") return ExperimentKind::OperatorState;
    if (name == "operator-size") return ExperimentKind::OperatorSize;
    if (name == "thermalization") return ExperimentKind::Thermalization;
    if (name == "velocities") return ExperimentKind::Velocities;
    if (name == "finite-size") return ExperimentKind::FiniteSize;
    throw config_error("unknown experiment '" + name +
                       "' (expected lightcone | entropy | operator-state | operator-size"
                       " | thermalization | velocities | finite-size)");
}

Region RegionSpec::resolve(int n_qubits) const {
    if (n_qubits < 2) throw std::invalid_argument("region needs a chain of at least 2 sites");
    switch (kind) {
        case Kind::LeftHalf: return Region::prefix(n_qubits / 2);
        case Kind::MiddlePair: return Region::range(n_qubits / 2, n_qubits / 2 + 1);
        case Kind::Prefix: return Region::prefix(prefix_len);
        case Kind::Range: return Region::range(lo, hi);
        case Kind::Explicit: return Region(sites);
    }
    throw std::invalid_argument("unresolvable region kind");
}

std::string RegionSpec::describe() const {
    switch (kind) {
        case Kind::LeftHalf: return "left-half";
        case Kind::MiddlePair: return "middle-pair";
        case Kind::Prefix: return "prefix(" + std::to_string(prefix_len) + ")";
        case Kind::Range:
            return "range(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
        case Kind::Explicit: return Region(sites).to_string();
    }
    return "?";
}

std::vector<double> uniform_time_grid(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw config_error("time grid bounds must be finite");
    if (step <= 0.0) throw config_error("time grid step must be positive");
    if (stop < start) throw config_error("time grid stop must not precede start");
    // Tolerate stop = start + k*step landing a hair below k.
    const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (std::int64_t i = 0; i <= count; ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw config_error("config key '" + key + "': " + what);
}

std::string join_key(const std::string& ctx, const std::string& key) {
    return ctx.empty() ? key : ctx + "." + key;
}

const json* find(const json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void require_object(const json& j, const std::string& ctx) {
    if (!j.is_object()) fail(ctx.empty() ? "(root)" : ctx, "must be a JSON object");
}

void check_keys(const json& j, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (item.key() == a) {
                known = true;
                break;
            }
        if (!known) fail(join_key(ctx, item.key()), "unknown key");
    }
}

double as_double(const json& v, const std::string& key) {
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
}

// Like as_double but admitting the string "inf" (exponents have one).
double as_extended_double(const json& v, const std::string& key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    }
    fail(key, "expected a number or \"inf\"");
}

int as_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) fail(key, "expected an integer");
    const auto wide = v.get<std::int64_t>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
        fail(key, "integer out of range");
    return static_cast<int>(wide);
}

bool as_bool(const json& v, const std::string& key) {
    if (!v.is_boolean()) fail(key, "expected true or false");
    return v.get<bool>();
}

std::string as_string(const json& v, const std::string& key) {
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
}

std::vector<double> as_double_array(const json& v, const std::string& key) {
    if (!v.is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_double(v[i], key + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<int> as_int_array(const json& v, const std::string& key) {
    if (!v.is_array()) fail(key, "expected an array of integers");
    std::vector<int> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_int(v[i], key + "[" + std::to_string(i) + "]"));
    return out;
}

PauliKind as_pauli(const json& v, const std::string& key) {
    const std::string s = as_string(v, key);
    try {
        return pauli_from_string(s);
    } catch (const std::invalid_argument&) {
        fail(key, "expected one of 1 | X | Y | Z");
    }
}

// n_qubits stays 0 here when the model omits it; a top-level n_qubits (or
// normalize_model's check) settles it afterward.
HamiltonianSpec parse_model(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    check_keys(j, ctx, {"family", "n_qubits", "alpha", "kac", "gamma", "j", "h_x", "h_z"});
    HamiltonianSpec spec;
    spec.n_qubits = 0;
    const json* fam = find(j, "family");
    if (!fam) fail(join_key(ctx, "family"), "required (local | powerlaw | fast-scrambler)");
    const std::string family = as_string(*fam, join_key(ctx, "family"));
    if (family == "local") {
        spec.family = HamiltonianFamily::Local;
    } else if (family == "powerlaw") {
        spec.family = HamiltonianFamily::Powerlaw;
    } else if (family == "fast-scrambler") {
        spec.family = HamiltonianFamily::FastScrambler;
    } else {
        fail(join_key(ctx, "family"),
             "unknown family '" + family + "' (local | powerlaw | fast-scrambler)");
    }
    if (const json* v = find(j, "n_qubits")) spec.n_qubits = as_int(*v, join_key(ctx, "n_qubits"));
    if (spec.family == HamiltonianFamily::Powerlaw) {
        const json* alpha = find(j, "alpha");
        if (!alpha) fail(join_key(ctx, "alpha"), "required for the powerlaw family");
        spec.alpha = as_extended_double(*alpha, join_key(ctx, "alpha"));
        if (const json* v = find(j, "kac"))
            spec.kac_normalized = as_bool(*v, join_key(ctx, "kac"));
    } else {
        if (find(j, "alpha")) fail(join_key(ctx, "alpha"), "only the powerlaw family takes alpha");
        if (find(j, "kac")) fail(join_key(ctx, "kac"), "only the powerlaw family takes kac");
    }
    if (spec.family == HamiltonianFamily::FastScrambler) {
        if (const json* v = find(j, "gamma")) spec.gamma = as_double(*v, join_key(ctx, "gamma"));
    } else if (find(j, "gamma")) {
        fail(join_key(ctx, "gamma"), "only the fast-scrambler family takes gamma");
    }
    if (const json* v = find(j, "j")) spec.j_coupling = as_double(*v, join_key(ctx, "j"));
    if (const json* v = find(j, "h_x")) spec.h_x = as_double(*v, join_key(ctx, "h_x"));
    if (const json* v = find(j, "h_z")) spec.h_z = as_double(*v, join_key(ctx, "h_z"));
    return spec;
}

void normalize_model(HamiltonianSpec& spec, const std::string& ctx) {
    if (spec.n_qubits == 0)
        fail(join_key(ctx, "n_qubits"), "required (here or as a top-level n_qubits)");
    if (spec.family == HamiltonianFamily::Powerlaw && std::isinf(spec.alpha) &&
        spec.alpha > 0) {
        // alpha = infinity is exactly the nearest-neighbor model.
        const HamiltonianSpec collapsed{HamiltonianFamily::Local, spec.n_qubits,
                                        spec.alpha,               true,
                                        spec.gamma,               spec.j_coupling,
                                        spec.h_x,                 spec.h_z};
        spec = collapsed;
    }
    try {
        spec.validate();
    } catch (const config_error& e) {
        fail(ctx, e.what());
    }
}

std::vector<double> parse_times(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    check_keys(j, ctx, {"start", "stop", "step", "values"});
    if (const json* v = find(j, "values")) {
        if (j.size() != 1) fail(ctx, "give either values or start/stop/step, not both");
        return as_double_array(*v, join_key(ctx, "values"));
    }
    double start = 0.0;
    if (const json* v = find(j, "start")) start = as_double(*v, join_key(ctx, "start"));
    const json* stop = find(j, "stop");
    if (!stop) fail(join_key(ctx, "stop"), "required");
    const json* step = find(j, "step");
    if (!step) fail(join_key(ctx, "step"), "required");
    return uniform_time_grid(start, as_double(*stop, join_key(ctx, "stop")),
                             as_double(*step, join_key(ctx, "step")));
}

RegionSpec parse_region(const json& j, const std::string& ctx) {
    RegionSpec r;
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "left-half") {
            r.kind = RegionSpec::Kind::LeftHalf;
        } else if (s == "middle-pair") {
            r.kind = RegionSpec::Kind::MiddlePair;
        } else {
            fail(ctx, "unknown region '" + s +
                          "' (left-half | middle-pair | {prefix} | {range} | {sites})");
        }
        return r;
    }
    require_object(j, ctx);
    check_keys(j, ctx, {"prefix", "range", "sites"});
    if (j.size() != 1) fail(ctx, "give exactly one of prefix, range, sites");
    if (const json* v = find(j, "prefix")) {
        r.kind = RegionSpec::Kind::Prefix;
        r.prefix_len = as_int(*v, join_key(ctx, "prefix"));
    } else if (const json* v = find(j, "range")) {
        const std::string key = join_key(ctx, "range");
        if (!v->is_array() || v->size() != 2) fail(key, "expected [lo, hi]");
        r.kind = RegionSpec::Kind::Range;
        r.lo = as_int((*v)[0], key + "[0]");
        r.hi = as_int((*v)[1], key + "[1]");
    } else {
        r.kind = RegionSpec::Kind::Explicit;
        r.sites = as_int_array(*find(j, "sites"), join_key(ctx, "sites"));
    }
    return r;
}

ProbeConfig parse_probe(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    check_keys(j, ctx, {"pauli", "site"});
    ProbeConfig p;
    if (const json* v = find(j, "pauli")) p.kind = as_pauli(*v, join_key(ctx, "pauli"));
    if (const json* v = find(j, "site")) p.site = as_int(*v, join_key(ctx, "site"));
    return p;
}

ScanProbeConfig parse_scan_probe(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    check_keys(j, ctx, {"pauli", "sites"});
    ScanProbeConfig p;
    if (const json* v = find(j, "pauli")) p.kind = as_pauli(*v, join_key(ctx, "pauli"));
    if (const json* v = find(j, "sites")) p.sites = as_int_array(*v, join_key(ctx, "sites"));
    return p;
}

KrylovConfig parse_krylov(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    check_keys(j, ctx, {"dt", "tolerance", "max_dim"});
    KrylovConfig k;
    if (const json* v = find(j, "dt")) k.dt = as_double(*v, join_key(ctx, "dt"));
    if (const json* v = find(j, "tolerance"))
        k.tolerance = as_double(*v, join_key(ctx, "tolerance"));
    if (const json* v = find(j, "max_dim")) k.max_dim = as_int(*v, join_key(ctx, "max_dim"));
    return k;
}

NumericalLimits parse_limits(const json& j, const std::string& ctx) {
    require_object(j, ctx);
    check_keys(j, ctx, {"operator_qubits", "spectral_qubits", "state_qubits"});
    NumericalLimits l;
    if (const json* v = find(j, "operator_qubits"))
        l.operator_qubits = as_int(*v, join_key(ctx, "operator_qubits"));
    if (const json* v = find(j, "spectral_qubits"))
        l.spectral_qubits = as_int(*v, join_key(ctx, "spectral_qubits"));
    if (const json* v = find(j, "state_qubits"))
        l.state_qubits = as_int(*v, join_key(ctx, "state_qubits"));
    return l;
}

json model_json(const HamiltonianSpec& spec) {
    json j;
    j["n_qubits"] = spec.n_qubits;
    j["j"] = spec.j_coupling;
    j["h_x"] = spec.h_x;
    j["h_z"] = spec.h_z;
    switch (spec.family) {
        case HamiltonianFamily::Local: j["family"] = "local"; break;
        case HamiltonianFamily::Powerlaw:
            j["family"] = "powerlaw";
            j["alpha"] = std::isinf(spec.alpha) ? json("inf") : json(spec.alpha);
            j["kac"] = spec.kac_normalized;
            break;
        case HamiltonianFamily::FastScrambler:
            j["family"] = "fast-scrambler";
            j["gamma"] = spec.gamma;
            break;
    }
    return j;
}

json region_json(const RegionSpec& r) {
    switch (r.kind) {
        case RegionSpec::Kind::LeftHalf: return json("left-half");
        case RegionSpec::Kind::MiddlePair: return json("middle-pair");
        case RegionSpec::Kind::Prefix: return json{{"prefix", r.prefix_len}};
        case RegionSpec::Kind::Range: return json{{"range", {r.lo, r.hi}}};
        case RegionSpec::Kind::Explicit: return json{{"sites", r.sites}};
    }
    return json();
}

json resolved(const ExperimentConfig& c) {
    json j;
    j["name"] = c.name;
    j["experiment"] = to_string(c.kind);
    j["models"] = json::array();
    for (const auto& m : c.models) j["models"].push_back(model_json(m));
    j["state"] = eigenstate_name(c.initial_state);
    j["w"] = json{{"pauli", std::string(1, pauli_char(c.w.kind))}, {"site", c.w.site}};
    j["v"] = json{{"pauli", std::string(1, pauli_char(c.v.kind))}};
    if (!c.v.sites.empty()) j["v"]["sites"] = c.v.sites;
    j["times"] = json{{"values", c.times}};
    j["region"] = region_json(c.region);
    j["thetas"] = c.thetas;
    if (c.butterfly_sites)
        j["butterfly_sites"] = {c.butterfly_sites->first, c.butterfly_sites->second};
    j["entropy_fractions"] = {c.entropy_fractions.first, c.entropy_fractions.second};
    j["propagator"] = c.propagator;
    j["krylov"] = json{{"dt", c.krylov.dt},
                       {"tolerance", c.krylov.tolerance},
                       {"max_dim", c.krylov.max_dim}};
    j["limits"] = json{{"operator_qubits", c.limits.operator_qubits},
                       {"spectral_qubits", c.limits.spectral_qubits},
                       {"state_qubits", c.limits.state_qubits}};
    j["workers"] = c.workers;
    j["output_dir"] = c.output_dir;
    return j;
}

ExperimentConfig parse_config(const json& source) {
    require_object(source, "");
    json j = source;
    if (j.contains("preset")) {
        const std::string preset = as_string(j["preset"], "preset");
        json base = resolved(preset_config(preset));
        for (const auto& item : j.items())
            if (item.key() != "preset") base[item.key()] = item.value();
        j = std::move(base);
    }
    check_keys(j, "",
               {"name", "experiment", "n_qubits", "models", "state", "w", "v", "times",
                "region", "thetas", "butterfly_sites", "entropy_fractions", "propagator",
                "krylov", "limits", "workers", "output_dir"});

    ExperimentConfig c;
    if (const json* v = find(j, "name")) c.name = as_string(*v, "name");
    const json* kind = find(j, "experiment");
    if (!kind) fail("experiment", "required");
    c.kind = experiment_kind_from_string(as_string(*kind, "experiment"));

    const json* models = find(j, "models");
    if (!models) fail("models", "required");
    if (!models->is_array() || models->empty()) fail("models", "expected a nonempty array");
    c.models.clear();
    for (std::size_t i = 0; i < models->size(); ++i)
        c.models.push_back(parse_model((*models)[i], "models[" + std::to_string(i) + "]"));
    if (const json* v = find(j, "n_qubits")) {
        const int n = as_int(*v, "n_qubits");
        for (auto& m : c.models) m.n_qubits = n;
    }
    for (std::size_t i = 0; i < c.models.size(); ++i)
        normalize_model(c.models[i], "models[" + std::to_string(i) + "]");

    if (const json* v = find(j, "state")) {
        try {
            c.initial_state = eigenstate_from_string(as_string(*v, "state"));
        } catch (const std::invalid_argument& e) {
            fail("state", e.what());
        }
    }
    if (const json* v = find(j, "w")) c.w = parse_probe(*v, "w");
    if (const json* v = find(j, "v")) c.v = parse_scan_probe(*v, "v");

    const json* times = find(j, "times");
    if (!times) fail("times", "required");
    c.times = parse_times(*times, "times");

    if (const json* v = find(j, "region")) c.region = parse_region(*v, "region");
    if (const json* v = find(j, "thetas")) c.thetas = as_double_array(*v, "thetas");
    if (const json* v = find(j, "butterfly_sites")) {
        if (!v->is_array() || v->size() != 2) fail("butterfly_sites", "expected [lo, hi]");
        c.butterfly_sites = {as_int((*v)[0], "butterfly_sites[0]"),
                             as_int((*v)[1], "butterfly_sites[1]")};
    }
    if (const json* v = find(j, "entropy_fractions")) {
        if (!v->is_array() || v->size() != 2) fail("entropy_fractions", "expected [lo, hi]");
        c.entropy_fractions = {as_double((*v)[0], "entropy_fractions[0]"),
                               as_double((*v)[1], "entropy_fractions[1]")};
    }
    if (const json* v = find(j, "propagator")) c.propagator = as_string(*v, "propagator");
    if (const json* v = find(j, "krylov")) c.krylov = parse_krylov(*v, "krylov");
    if (const json* v = find(j, "limits")) c.limits = parse_limits(*v, "limits");
    if (const json* v = find(j, "workers")) c.workers = as_int(*v, "workers");
    if (const json* v = find(j, "output_dir")) c.output_dir = as_string(*v, "output_dir");

    c.validate();
    return c;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::vector<std::string> split_path(const std::string& key) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : key) {
        if (ch == '.') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    for (const auto& p : parts)
        if (p.empty()) fail(key, "malformed override path");
    return parts;
}

json* descend(json* cur, const std::string& part, const std::string& key, bool create) {
    if (cur->is_array()) {
        if (!all_digits(part) || part.size() > 9)
            fail(key, "array segment '" + part + "' must be an index");
        const auto idx = static_cast<std::size_t>(std::stoul(part));
        if (idx >= cur->size()) fail(key, "array index " + part + " out of range");
        return &(*cur)[idx];
    }
    if (cur->is_object() || (create && cur->is_null())) return &(*cur)[part];
    fail(key, "path walks through a non-container value");
}

void apply_override(json& root, const std::string& key, const std::string& value) {
    json parsed = json::parse(value, nullptr, false);
    if (parsed.is_discarded()) parsed = value; // plain strings need no quoting
    const auto parts = split_path(key);
    json* cur = &root;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) cur = descend(cur, parts[i], key, true);
    if (cur->is_array()) {
        *descend(cur, parts.back(), key, false) = std::move(parsed);
    } else if (cur->is_object() || cur->is_null()) {
        (*cur)[parts.back()] = std::move(parsed);
    } else {
        fail(key, "path walks through a non-container value");
    }
}

} // namespace

void ExperimentConfig::validate() const {
    if (name.empty()) fail("name", "must be nonempty");
    for (char ch : name) {
        const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' ||
                        ch == '_' || ch == '-';
        if (!ok) fail("name", "allowed characters are letters, digits, '.', '_', '-'");
    }
    if (name == "." || name == "..") fail("name", "reserved name");

    if (models.empty()) fail("models", "expected a nonempty array");
    for (std::size_t i = 0; i < models.size(); ++i) {
        const std::string ctx = "models[" + std::to_string(i) + "]";
        try {
            models[i].validate();
        } catch (const config_error& e) {
            fail(ctx, e.what());
        }
        for (std::size_t k = 0; k < i; ++k)
            if (models[k].label() == models[i].label() &&
                models[k].n_qubits == models[i].n_qubits)
                fail(ctx, "duplicate model '" + models[i].label() + "' at the same size");
    }

    if (times.empty()) fail("times", "expected at least one time");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]))
            fail("times.values[" + std::to_string(i) + "]", "must be finite");
        if (i > 0 && times[i] <= times[i - 1])
            fail("times.values", "must be strictly increasing");
    }

    const bool uses_w = kind == ExperimentKind::Lightcone ||
                        kind == ExperimentKind::OperatorState ||
                        kind == ExperimentKind::OperatorSize ||
                        kind == ExperimentKind::Velocities ||
                        kind == ExperimentKind::FiniteSize;
    const bool uses_v =
        kind == ExperimentKind::Lightcone || kind == ExperimentKind::OperatorState;
    const bool uses_region =
        kind == ExperimentKind::Entropy || kind == ExperimentKind::OperatorState ||
        kind == ExperimentKind::Thermalization || kind == ExperimentKind::Velocities ||
        kind == ExperimentKind::FiniteSize;

    for (std::size_t i = 0; i < models.size(); ++i) {
        const std::string ctx = "models[" + std::to_string(i) + "]";
        const int n = models[i].n_qubits;
        if (uses_w && (w.site < 1 || w.site > n))
            fail("w.site", "site " + std::to_string(w.site) + " is outside chain " + ctx);
        if (uses_v) {
            for (std::size_t s = 0; s < v.sites.size(); ++s) {
                if (v.sites[s] < 1 || v.sites[s] > n)
                    fail("v.sites", "site " + std::to_string(v.sites[s]) +
                                        " is outside chain " + ctx);
                if (s > 0 && v.sites[s] <= v.sites[s - 1])
                    fail("v.sites", "must be strictly increasing");
            }
        }
        if (uses_region) {
            Region r;
            try {
                r = region.resolve(n);
            } catch (const std::exception& e) {
                fail("region", std::string(e.what()) + " (" + ctx + ")");
            }
            if (r.empty()) fail("region", "must be nonempty");
            if (!r.within(n)) fail("region", "extends past chain " + ctx);
            if (r.size() >= n) fail("region", "must be a proper subsystem (" + ctx + ")");
            if (kind == ExperimentKind::Thermalization && r.size() != 2)
                fail("region", "thermalization tracks a two-site region (" + ctx + ")");
        }
    }

    const bool uses_thetas =
        kind == ExperimentKind::Lightcone || kind == ExperimentKind::Velocities;
    if (uses_thetas) {
        if (thetas.empty()) fail("thetas", "expected at least one threshold");
        for (double th : thetas)
            if (!std::isfinite(th) || th <= 0.0) fail("thetas", "thresholds must be positive");
    }

    if (butterfly_sites) {
        if (butterfly_sites->first < 1 || butterfly_sites->second < butterfly_sites->first)
            fail("butterfly_sites", "expected 1 <= lo <= hi");
    }
    if (!(entropy_fractions.first > 0.0) ||
        !(entropy_fractions.second > entropy_fractions.first) ||
        !(entropy_fractions.second <= 1.0))
        fail("entropy_fractions", "expected 0 < lo < hi <= 1");

    if (propagator != "auto" && propagator != "spectral" && propagator != "krylov")
        fail("propagator", "expected auto | spectral | krylov");

    if (!(krylov.dt > 0.0) || !std::isfinite(krylov.dt)) fail("krylov.dt", "must be positive");
    if (!(krylov.tolerance > 0.0)) fail("krylov.tolerance", "must be positive");
    if (krylov.max_dim < 2) fail("krylov.max_dim", "must be at least 2");

    if (limits.operator_qubits < 2) fail("limits.operator_qubits", "must be at least 2");
    if (limits.spectral_qubits < 2) fail("limits.spectral_qubits", "must be at least 2");
    if (limits.state_qubits < 2) fail("limits.state_qubits", "must be at least 2");

    if (workers < 0) fail("workers", "must be nonnegative (0 = environment default)");
    if (output_dir.empty()) fail("output_dir", "must be nonempty");
}

ExperimentConfig parse_config_text(
    const std::string& json_text,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    for (const auto& [key, value] : overrides) apply_override(j, key, value);
    return parse_config(j);
}

ExperimentConfig load_config_file(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str(), overrides);
    } catch (const config_error& e) {
        throw config_error(path + ": " + e.what());
    }
}

std::string resolved_json_text(const ExperimentConfig& config, int indent) {
    return resolved(config).dump(indent);
}

} // namespace scramble
