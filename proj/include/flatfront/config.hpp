#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatfront/scalar_function.hpp"
#include "flatfront/types.hpp"

namespace flatfront {

// Parsed scene configuration.  Parsing is strict: unknown keys are rejected
// with ConfigError.
struct SceneConfig {
    int dimension = 2;  // n

    struct Curve {
        std::string preset;  // great_circle | small_circle | helix | fourier
        double theta0 = M_PI / 4;
        double amp = 0.1;
        int freq = 2;
        std::vector<std::vector<double>> cos_coef, sin_coef;
    } curve;

    std::string front_type = "flat";  // flat | mu | general
    TrigPoly a;
    std::vector<TrigPoly> a_list;  // general form only

    struct Grid {
        int nt = 128;
        int nw = 33;
        double w_min = -2.0, w_max = 2.0;
    } grid;

    double rank_tol = 1e-6;
    bool strict_inflection = true;
    unsigned seed = 1;
    std::string out_dir = ".";

    // Canonical serialized form (key-ordered); basis of the config hash.
    std::string canonical() const;
    std::string hash() const;
};

SceneConfig parse_config_file(const std::string& path);
SceneConfig parse_config_text(const std::string& text);

// FNV-1a 64-bit, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace flatfront
