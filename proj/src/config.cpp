#include "flatfront/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace flatfront {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + key + "' in " + where);
}

TrigPoly parse_expr(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("terms"))
        throw ConfigError(where + ": expected an object with a 'terms' array");
    require_keys(j, {"terms"}, where);
    std::vector<TrigPolyTerm> terms;
    for (const auto& t : j.at("terms")) {
        require_keys(t, {"coef", "power", "trig", "freq"}, where + ".terms[]");
        TrigPolyTerm q;
        q.coef = t.at("coef").get<double>();
        q.power = t.value("power", 0);
        if (q.power < 0) throw ConfigError(where + ": negative power");
        const std::string trig = t.value("trig", "none");
        if (trig == "sin")
            q.trig = TrigPolyTerm::Trig::sin;
        else if (trig == "cos")
            q.trig = TrigPolyTerm::Trig::cos;
        else if (trig == "none")
            q.trig = TrigPolyTerm::Trig::none;
        else
            throw ConfigError(where + ": trig must be sin, cos or none");
        q.freq = t.value("freq", 0);
        terms.push_back(q);
    }
    return TrigPoly(std::move(terms));
}

ordered_json expr_to_json(const TrigPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : p.terms()) {
        ordered_json q;
        q["coef"] = t.coef;
        q["power"] = t.power;
        q["trig"] = t.trig == TrigPolyTerm::Trig::sin   ? "sin"
                    : t.trig == TrigPolyTerm::Trig::cos ? "cos"
                                                        : "none";
        q["freq"] = t.freq;
        terms.push_back(q);
    }
    return ordered_json{{"terms", terms}};
}

}  // namespace

SceneConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    require_keys(j,
                 {"dimension", "curve", "front", "grid", "tolerances",
                  "strict_inflection", "seed", "output"},
                 "config");
    SceneConfig cfg;
    cfg.dimension = j.value("dimension", 2);
    if (cfg.dimension < 2) throw ConfigError("dimension must be >= 2");

    if (!j.contains("curve")) throw ConfigError("missing 'curve'");
    const json& c = j.at("curve");
    require_keys(c, {"preset", "theta0", "amp", "freq", "cos", "sin"}, "curve");
    cfg.curve.preset = c.value("preset", "");
    cfg.curve.theta0 = c.value("theta0", M_PI / 4);
    cfg.curve.amp = c.value("amp", 0.1);
    cfg.curve.freq = c.value("freq", 2);
    if (c.contains("cos")) cfg.curve.cos_coef = c.at("cos").get<std::vector<std::vector<double>>>();
    if (c.contains("sin")) cfg.curve.sin_coef = c.at("sin").get<std::vector<std::vector<double>>>();
    const std::set<std::string> presets = {"great_circle", "small_circle",
                                           "helix", "fourier"};
    if (!presets.count(cfg.curve.preset))
        throw ConfigError("curve.preset must be one of great_circle, small_circle, helix, fourier");

    if (!j.contains("front")) throw ConfigError("missing 'front'");
    const json& f = j.at("front");
    require_keys(f, {"type", "a", "a_list"}, "front");
    cfg.front_type = f.value("type", "flat");
    if (cfg.front_type != "flat" && cfg.front_type != "mu" &&
        cfg.front_type != "general")
        throw ConfigError("front.type must be flat, mu or general");
    if (f.contains("a")) cfg.a = parse_expr(f.at("a"), "front.a");
    if (f.contains("a_list"))
        for (const auto& e : f.at("a_list"))
            cfg.a_list.push_back(parse_expr(e, "front.a_list[]"));

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        require_keys(g, {"t", "w", "w_range"}, "grid");
        cfg.grid.nt = g.value("t", cfg.grid.nt);
        cfg.grid.nw = g.value("w", cfg.grid.nw);
        if (g.contains("w_range")) {
            const auto r = g.at("w_range").get<std::vector<double>>();
            if (r.size() != 2) throw ConfigError("grid.w_range must have 2 entries");
            cfg.grid.w_min = r[0];
            cfg.grid.w_max = r[1];
        }
    }
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        require_keys(t, {"rank"}, "tolerances");
        cfg.rank_tol = t.value("rank", cfg.rank_tol);
    }
    cfg.strict_inflection = j.value("strict_inflection", true);
    cfg.seed = j.value("seed", 1u);
    if (j.contains("output")) {
        const json& o = j.at("output");
        require_keys(o, {"dir"}, "output");
        cfg.out_dir = o.value("dir", ".");
    }
    return cfg;
}

SceneConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string SceneConfig::canonical() const {
    ordered_json j;
    j["dimension"] = dimension;
    ordered_json c;
    c["preset"] = curve.preset;
    c["theta0"] = curve.theta0;
    c["amp"] = curve.amp;
    c["freq"] = curve.freq;
    c["cos"] = curve.cos_coef;
    c["sin"] = curve.sin_coef;
    j["curve"] = c;
    ordered_json f;
    f["type"] = front_type;
    f["a"] = expr_to_json(a);
    ordered_json al = ordered_json::array();
    for (const auto& e : a_list) al.push_back(expr_to_json(e));
    f["a_list"] = al;
    j["front"] = f;
    j["grid"] = ordered_json{{"t", grid.nt},
                             {"w", grid.nw},
                             {"w_range", {grid.w_min, grid.w_max}}};
    j["tolerances"] = ordered_json{{"rank", rank_tol}};
    j["strict_inflection"] = strict_inflection;
    j["seed"] = seed;
    return j.dump();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string SceneConfig::hash() const { return fnv1a_hex(canonical()); }

}  // namespace flatfront
