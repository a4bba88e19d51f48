#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "rigsim/config.hpp"
#include "rigsim/errors.hpp"

using namespace rigsim;
using nlohmann::json;

namespace {

const std::filesystem::path kConfigDir = RIGSIM_CONFIG_DIR;

json default_doc() { return config::to_json(config::default_config()); }

}  // namespace

TEST(Config, ShippedDefaultMatchesBuiltIn) {
    const auto shipped = config::load_config(kConfigDir / "default.json");
    EXPECT_EQ(config::to_json(shipped), default_doc());
}

TEST(Config, ShippedRulebaseMatchesEmbedded) {
    const auto loaded = config::load_fuzzy_system(kConfigDir / "default_rulebase.json");
    EXPECT_EQ(config::fuzzy_to_json(loaded), config::fuzzy_to_json(config::default_fuzzy_system()));
    EXPECT_EQ(loaded.rulebase.rules.size(), 27u);
    EXPECT_EQ(loaded.output.terms.size(), 5u);
}

TEST(Config, RoundTripThroughJson) {
    auto cfg = config::default_config();
    cfg.scenario.conveyor_speed = 0.0125;
    cfg.control.gains.kd = 0.003;
    cfg.fem.elements = 48;
    cfg.axes[1].v_max = 0.04;
    const json once = config::to_json(cfg);
    const json twice = config::to_json(config::parse_config(once));
    EXPECT_EQ(once, twice);
}

TEST(Config, EmptyDocumentGivesDefaults) {
    EXPECT_EQ(config::to_json(config::parse_config(json::object())), default_doc());
}

TEST(Config, PartialOverride) {
    const auto cfg = config::parse_config(json::parse(R"({"scenario": {"conveyor_speed": 0.02}})"));
    EXPECT_EQ(cfg.scenario.conveyor_speed, 0.02);
    EXPECT_EQ(cfg.scenario.object_mass, config::default_config().scenario.object_mass);
}

TEST(Config, UnknownKeysRejected) {
    EXPECT_THROW(config::parse_config(json::parse(R"({"bogus": 1})")), ConfigError);
    EXPECT_THROW(config::parse_config(json::parse(R"({"scenario": {"conveyer_speed": 0.02}})")), ConfigError);
    EXPECT_THROW(config::parse_config(json::parse(R"({"control": {"gains": {"kq": 1}}})")), ConfigError);
}

TEST(Config, WrongTypesRejected) {
    EXPECT_THROW(config::parse_config(json::parse(R"({"fem": {"elements": "many"}})")), ConfigError);
    EXPECT_THROW(config::parse_config(json::parse(R"({"scenario": {"target_start": [1, 2]}})")), ConfigError);
}

TEST(Config, InvalidValuesRejected) {
    EXPECT_THROW(config::parse_config(json::parse(R"({"fem": {"elements": 1}})")), ConfigError);
    EXPECT_THROW(config::parse_config(json::parse(R"({"control": {"gains": {"kp": -1}}})")), ConfigError);
    EXPECT_THROW(config::parse_config(json::parse(R"({"beam": {"section": {"outer_diameter": 0.01, "inner_diameter": 0.012}}})")),
                 ConfigError);
}

TEST(Config, LeadMustAgreeWithStartsAndPitch) {
    auto doc = default_doc();
    doc["axes"][0]["screw"]["lead"] = 0.008;
    EXPECT_NO_THROW(config::parse_config(doc));
    doc["axes"][0]["screw"]["lead"] = 0.01;
    EXPECT_THROW(config::parse_config(doc), ConfigError);
}

TEST(Config, RulebaseReferenceResolvedAgainstConfigDirectory) {
    const auto tmp = std::filesystem::temp_directory_path() / "rigsim_cfg_test";
    std::filesystem::create_directories(tmp);
    auto fuzzy = config::fuzzy_to_json(config::default_fuzzy_system());
    fuzzy["rules"][0]["then"] = "very_low";
    std::ofstream(tmp / "rules.json") << fuzzy.dump();
    std::ofstream(tmp / "cfg.json") << R"({"fuzzy": {"rulebase": "rules.json"}})";
    const auto cfg = config::load_config(tmp / "cfg.json");
    EXPECT_EQ(cfg.fuzzy.system.rulebase.rules[0].consequent, "very_low");
    std::filesystem::remove_all(tmp);
}

TEST(Config, BadRulebaseRejected) {
    auto fuzzy = config::fuzzy_to_json(config::default_fuzzy_system());
    fuzzy["rules"][0]["then"] = "enormous";
    EXPECT_THROW(config::fuzzy_from_json(fuzzy), ConfigError);
    fuzzy = config::fuzzy_to_json(config::default_fuzzy_system());
    fuzzy["rules"][0]["if"] = json::array({"low", "low"});
    EXPECT_THROW(config::fuzzy_from_json(fuzzy), ConfigError);
}

TEST(Config, MissingFileAndBadSyntax) {
    EXPECT_THROW(config::load_config("/nonexistent/rigsim.json"), ConfigError);
    const auto tmp = std::filesystem::temp_directory_path() / "rigsim_bad.json";
    std::ofstream(tmp) << "{ not json";
    EXPECT_THROW(config::load_config(tmp), ConfigError);
    std::filesystem::remove(tmp);
}
