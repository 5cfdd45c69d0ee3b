#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "flatfront/config.hpp"
#include "flatfront/front_builder.hpp"

namespace flatfront {

inline constexpr const char* kToolVersion = "0.1.0";

// Fronts and supporting data instantiated from a scene config.
struct Scene {
    SceneConfig cfg;
    std::shared_ptr<const SphericalCurve> curve;
    std::shared_ptr<const BishopFrameField> frame;  // flat/general only
    std::shared_ptr<const FlatFront> flat;          // flat, or general after reduction
    std::shared_ptr<const GeneralRuledFront> general;
    std::shared_ptr<const MUFront> mu;

    std::shared_ptr<const Front> front() const;
};

Scene build_scene(const SceneConfig& cfg);

struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = 0;  // 0 ok, 3 check failure
};

CommandResult cmd_verify(const SceneConfig& cfg);
CommandResult cmd_theorem(const SceneConfig& cfg);
CommandResult cmd_mu(const SceneConfig& cfg);
CommandResult cmd_build(const SceneConfig& cfg);

std::string report_to_string(const nlohmann::ordered_json& report);

}  // namespace flatfront
