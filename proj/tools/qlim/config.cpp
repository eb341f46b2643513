#include "config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace qlim::cli {
namespace {

using nlohmann::json;

class Parser {
  public:
    explicit Parser(std::vector<ValidationError>& errors) : errors_(errors) {}

    void error(const std::string& path, const std::string& message) {
        errors_.push_back({path, message});
    }

    void check_keys(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
        std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto& [key, value] : j.items()) {
            if (!ok.count(key)) {
                error(path + "/" + key, "unknown key");
            }
        }
    }

    bool get_number(const json& j, const std::string& path, const char* key, double& out,
                    bool required) {
        if (!j.contains(key)) {
            if (required) error(path + "/" + key, "missing required number");
            return false;
        }
        if (!j[key].is_number()) {
            error(path + "/" + key, "expected a number");
            return false;
        }
        out = j[key].get<double>();
        return true;
    }

    bool get_size(const json& j, const std::string& path, const char* key, std::size_t& out,
                  bool required) {
        if (!j.contains(key)) {
            if (required) error(path + "/" + key, "missing required integer");
            return false;
        }
        if (!j[key].is_number_unsigned() && !j[key].is_number_integer()) {
            error(path + "/" + key, "expected a non-negative integer");
            return false;
        }
        const auto v = j[key].get<long long>();
        if (v < 0) {
            error(path + "/" + key, "expected a non-negative integer");
            return false;
        }
        out = static_cast<std::size_t>(v);
        return true;
    }

    bool get_u64(const json& j, const std::string& path, const char* key, std::uint64_t& out,
                 bool required) {
        std::size_t v = 0;
        if (!get_size(j, path, key, v, required)) return false;
        out = static_cast<std::uint64_t>(v);
        return true;
    }

    bool get_bool(const json& j, const std::string& path, const char* key, bool& out) {
        if (!j.contains(key)) return false;
        if (!j[key].is_boolean()) {
            error(path + "/" + key, "expected a boolean");
            return false;
        }
        out = j[key].get<bool>();
        return true;
    }

    bool get_string(const json& j, const std::string& path, const char* key, std::string& out,
                    bool required) {
        if (!j.contains(key)) {
            if (required) error(path + "/" + key, "missing required string");
            return false;
        }
        if (!j[key].is_string()) {
            error(path + "/" + key, "expected a string");
            return false;
        }
        out = j[key].get<std::string>();
        return true;
    }

  private:
    std::vector<ValidationError>& errors_;
};

void parse_constants(Parser& p, const json& j, PhysicalConstants& k) {
    p.check_keys(j, "/constants", {"hbar", "c", "G"});
    p.get_number(j, "/constants", "hbar", k.hbar, false);
    p.get_number(j, "/constants", "c", k.c, false);
    p.get_number(j, "/constants", "G", k.G, false);
    if (!(k.hbar > 0.0)) p.error("/constants/hbar", "must be > 0");
    if (!(k.c > 0.0)) p.error("/constants/c", "must be > 0");
    if (!(k.G > 0.0)) p.error("/constants/G", "must be > 0");
}

void parse_mirror(Parser& p, const json& j, MirrorConfig& m) {
    p.check_keys(j, "/mirror", {"mass", "omega0", "gamma", "alpha"});
    p.get_number(j, "/mirror", "mass", m.mass, true);
    p.get_number(j, "/mirror", "omega0", m.omega0, false);
    double g = 0.0;
    if (p.get_number(j, "/mirror", "gamma", g, false)) m.gamma = g;
    p.get_number(j, "/mirror", "alpha", m.alpha, false);
    if (!(m.mass > 0.0)) p.error("/mirror/mass", "must be > 0");
    if (!(m.omega0 >= 0.0)) p.error("/mirror/omega0", "must be >= 0");
    if (m.gamma && !(*m.gamma >= 0.0)) p.error("/mirror/gamma", "must be >= 0");
    if (!(m.alpha > 0.0)) p.error("/mirror/alpha", "must be > 0");
}

void parse_grid(Parser& p, const json& j, GridConfig& g) {
    p.check_keys(j, "/grid", {"omega_min", "omega_max", "points", "spacing"});
    p.get_number(j, "/grid", "omega_min", g.omega_min, true);
    p.get_number(j, "/grid", "omega_max", g.omega_max, true);
    p.get_size(j, "/grid", "points", g.points, true);
    p.get_string(j, "/grid", "spacing", g.spacing, false);
    if (!(g.omega_min > 0.0)) p.error("/grid/omega_min", "must be > 0");
    if (!(g.omega_max >= g.omega_min)) p.error("/grid/omega_max", "must be >= omega_min");
    if (g.points == 0) p.error("/grid/points", "must be > 0");
    if (g.spacing != "log" && g.spacing != "linear") {
        p.error("/grid/spacing", "expected \"log\" or \"linear\"");
    }
}

void parse_mc(Parser& p, const json& j, McSettings& mc) {
    p.check_keys(j, "/gravity/mc",
                 {"realizations", "modes", "band", "path_length", "direction", "round_trip",
                  "seed", "amplitude_scale"});
    p.get_size(j, "/gravity/mc", "realizations", mc.realizations, false);
    p.get_size(j, "/gravity/mc", "modes", mc.modes, false);
    p.get_number(j, "/gravity/mc", "path_length", mc.path_length, true);
    p.get_bool(j, "/gravity/mc", "round_trip", mc.round_trip);
    p.get_u64(j, "/gravity/mc", "seed", mc.seed, false);
    p.get_number(j, "/gravity/mc", "amplitude_scale", mc.amplitude_scale, false);
    if (j.contains("band")) {
        const auto& band = j["band"];
        if (!band.is_array() || band.size() != 2 || !band[0].is_number() || !band[1].is_number()) {
            p.error("/gravity/mc/band", "expected [omega_lo, omega_hi]");
        } else {
            mc.band_lo = band[0].get<double>();
            mc.band_hi = band[1].get<double>();
        }
    } else {
        p.error("/gravity/mc/band", "missing required [omega_lo, omega_hi]");
    }
    if (j.contains("direction")) {
        const auto& d = j["direction"];
        if (!d.is_array() || d.size() != 3) {
            p.error("/gravity/mc/direction", "expected [x, y, z]");
        } else {
            for (int i = 0; i < 3; ++i) {
                if (!d[i].is_number()) {
                    p.error("/gravity/mc/direction", "expected numeric components");
                    break;
                }
                mc.direction[static_cast<std::size_t>(i)] = d[i].get<double>();
            }
        }
    }
    if (!(mc.band_lo > 0.0) || !(mc.band_hi > mc.band_lo)) {
        p.error("/gravity/mc/band", "need 0 < omega_lo < omega_hi");
    }
    if (!(mc.path_length > 0.0)) p.error("/gravity/mc/path_length", "must be > 0");
    if (!(mc.amplitude_scale >= 0.0)) p.error("/gravity/mc/amplitude_scale", "must be >= 0");
}

void parse_gravity(Parser& p, const json& j, GravityConfig& g) {
    p.check_keys(j, "/gravity", {"beta", "mc"});
    if (j.contains("beta")) {
        if (j["beta"].is_number()) {
            g.beta = j["beta"].get<double>();
            if (!(g.beta > 0.0)) p.error("/gravity/beta", "must be > 0");
        } else if (j["beta"].is_string() && j["beta"].get<std::string>() == "mc") {
            g.use_mc = true;
        } else {
            p.error("/gravity/beta", "expected a number or \"mc\"");
        }
    }
    if (j.contains("mc")) {
        McSettings mc;
        parse_mc(p, j["mc"], mc);
        g.mc = mc;
    }
    if (g.use_mc && !g.mc) {
        p.error("/gravity/mc", "required when beta is \"mc\"");
    }
}

void parse_fdt(Parser& p, const json& j, FdtConfig& f) {
    p.check_keys(j, "/fdt", {"model", "tolerance", "causality", "kk_tolerance", "inject_fault"});
    p.get_string(j, "/fdt", "model", f.model, false);
    p.get_number(j, "/fdt", "tolerance", f.tolerance, false);
    p.get_bool(j, "/fdt", "causality", f.causality);
    p.get_number(j, "/fdt", "kk_tolerance", f.kk_tolerance, false);
    p.get_number(j, "/fdt", "inject_fault", f.inject_fault, false);
    if (f.model != "mechanical" && f.model != "vacuum" && f.model != "dressed") {
        p.error("/fdt/model", "expected \"mechanical\", \"vacuum\" or \"dressed\"");
    }
    if (!(f.tolerance > 0.0)) p.error("/fdt/tolerance", "must be > 0");
    if (!(f.kk_tolerance > 0.0)) p.error("/fdt/kk_tolerance", "must be > 0");
}

void parse_synth(Parser& p, const json& j, SynthConfig& s) {
    p.check_keys(j, "/synth", {"duration", "dt", "source", "seed"});
    p.get_number(j, "/synth", "duration", s.duration, true);
    p.get_number(j, "/synth", "dt", s.dt, true);
    p.get_string(j, "/synth", "source", s.source, false);
    p.get_u64(j, "/synth", "seed", s.seed, false);
    if (!(s.duration > 0.0)) p.error("/synth/duration", "must be > 0");
    if (!(s.dt > 0.0)) p.error("/synth/dt", "must be > 0");
    if (s.duration / s.dt < 2.0) p.error("/synth", "duration/dt must be >= 2 samples");
    if (s.source != "gravitational" && s.source != "vacuum_rp" && s.source != "combined") {
        p.error("/synth/source", "expected \"gravitational\", \"vacuum_rp\" or \"combined\"");
    }
}

void parse_output(Parser& p, const json& j, OutputConfig& o) {
    p.check_keys(j, "/output", {"unit_scale"});
    p.get_string(j, "/output", "unit_scale", o.unit_scale, false);
    if (o.unit_scale != "lp2" && o.unit_scale != "lambda_c2" && o.unit_scale != "si") {
        p.error("/output/unit_scale", "expected \"lp2\", \"lambda_c2\" or \"si\"");
    }
}

}  // namespace

LoadResult load_config(const std::string& path) {
    LoadResult result;
    std::ifstream in(path);
    if (!in) {
        result.errors.push_back({"/", "cannot open config file: " + path});
        return result;
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        result.errors.push_back({"/", std::string("JSON parse error: ") + e.what()});
        return result;
    }
    if (!j.is_object()) {
        result.errors.push_back({"/", "config root must be an object"});
        return result;
    }

    Parser p(result.errors);
    p.check_keys(j, "",
                 {"constants", "mirror", "probe", "grid", "optimizer", "gravity", "fdt", "synth",
                  "output"});

    RunConfig cfg;
    if (j.contains("constants")) parse_constants(p, j["constants"], cfg.constants);
    if (j.contains("mirror")) {
        MirrorConfig m;
        parse_mirror(p, j["mirror"], m);
        cfg.mirror = m;
    }
    if (j.contains("probe")) {
        p.check_keys(j["probe"], "/probe", {"K0"});
        double k0 = 0.0;
        if (p.get_number(j["probe"], "/probe", "K0", k0, true)) {
            if (!(k0 > 0.0)) {
                p.error("/probe/K0", "must be > 0");
            } else {
                cfg.probe_K0 = k0;
            }
        }
    }
    if (j.contains("grid")) {
        GridConfig g;
        parse_grid(p, j["grid"], g);
        cfg.grid = g;
    }
    if (j.contains("optimizer")) {
        p.check_keys(j["optimizer"], "/optimizer", {"r_max"});
        double r = 0.0;
        if (p.get_number(j["optimizer"], "/optimizer", "r_max", r, true)) {
            if (!(r >= 0.0)) {
                p.error("/optimizer/r_max", "must be >= 0");
            } else {
                cfg.r_max = r;
            }
        }
    }
    if (j.contains("gravity")) {
        GravityConfig g;
        parse_gravity(p, j["gravity"], g);
        cfg.gravity = g;
    }
    if (j.contains("fdt")) {
        FdtConfig f;
        parse_fdt(p, j["fdt"], f);
        cfg.fdt = f;
    }
    if (j.contains("synth")) {
        SynthConfig s;
        parse_synth(p, j["synth"], s);
        cfg.synth = s;
    }
    if (j.contains("output")) parse_output(p, j["output"], cfg.output);

    if (result.errors.empty()) result.config = cfg;
    return result;
}

std::string validation_report_json(const std::vector<ValidationError>& errors) {
    json out;
    out["errors"] = json::array();
    for (const auto& e : errors) {
        out["errors"].push_back({{"path", e.path}, {"message", e.message}});
    }
    return out.dump(2);
}

}  // namespace qlim::cli
