#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run rigsim(const std::string& args) {
    const std::string cmd = std::string(RIGSIM_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("rigsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, PaperCheckPasses) {
    const auto r = rigsim("paper-check --config " RIGSIM_CONFIG_DIR "/default.json --out " + dir.string());
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(slurp(dir / "report.kv").find("all_pass=true"), std::string::npos);
}

TEST_F(Cli, MissingConfigIsConfigError) {
    const auto r = rigsim("statics --config " + (dir / "absent.json").string());
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("code=1 msg=", 0), 0u) << r.out;
}

TEST_F(Cli, UnknownKeyIsConfigError) {
    const auto cfg = write("bad.json", R"({"fem": {"elemnts": 10}})");
    EXPECT_EQ(rigsim("modal --config " + cfg).code, 1);
}

TEST_F(Cli, TooManyModesIsNumericalError) {
    const auto cfg = write("modes.json", R"({"fem": {"elements": 4, "n_modes": 40}})");
    const auto r = rigsim("modal --config " + cfg + " --out " + dir.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out.rfind("code=2 msg=", 0), 0u) << r.out;
}

TEST_F(Cli, OverSpeedConveyorIsScenarioFailure) {
    const auto cfg = write("fast.json", R"({"scenario": {"conveyor_speed": 0.2}})");
    const auto r = rigsim("pickplace --config " + cfg + " --out " + dir.string());
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("code=3 msg=missed_pick"), std::string::npos) << r.out;
    EXPECT_NE(slurp(dir / "report.kv").find("outcome=missed_pick"), std::string::npos);
}

TEST_F(Cli, FixedFileNames) {
    ASSERT_EQ(rigsim("modal --out " + (dir / "m").string()).code, 0);
    ASSERT_EQ(rigsim("harmonic --out " + (dir / "h").string()).code, 0);
    ASSERT_EQ(rigsim("move --out " + (dir / "v").string()).code, 0);
    ASSERT_EQ(rigsim("grasp --out " + (dir / "g").string()).code, 0);
    ASSERT_EQ(rigsim("statics --format csv --out " + (dir / "s").string()).code, 0);
    EXPECT_EQ(slurp(dir / "m" / "modal.csv").substr(0, 18), "mode,frequency_hz\n");
    EXPECT_EQ(slurp(dir / "h" / "harmonic.csv").substr(0, 45), "frequency_hz,displacement_m,stress_pa,strain\n");
    EXPECT_EQ(slurp(dir / "v" / "trace.csv").substr(0, 33), "t_s,axis,position_m,velocity_mps\n");
    EXPECT_EQ(slurp(dir / "g" / "trace.csv").substr(0, 42), "t_s,desired_n,applied_n,contact_n,error_n\n");
    EXPECT_TRUE(fs::exists(dir / "s" / "report.csv"));
}

TEST_F(Cli, StreamToStdout) {
    const auto r = rigsim("modal --out -");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("mode,frequency_hz\n1,144.6", 0), 0u) << r.out;
}

TEST_F(Cli, IdenticalRunsGiveIdenticalFiles) {
    const auto cfg = write("noisy.json", R"({"scenario": {"conveyor_speed": 0.015},
                                             "sensors": {"ultrasonic": {"noise_std": 0.002}}})");
    ASSERT_EQ(rigsim("pickplace --seed 5 --config " + cfg + " --out " + (dir / "a").string()).code, 0);
    ASSERT_EQ(rigsim("pickplace --seed 5 --config " + cfg + " --out " + (dir / "b").string()).code, 0);
    for (const char* f : {"report.kv", "trace.csv", "motion.csv", "sensors.csv", "events.log"})
        EXPECT_EQ(slurp(dir / "a" / f), slurp(dir / "b" / f)) << f;
}

TEST_F(Cli, DumpedConfigReproducesRun) {
    const auto cfg = write("c.json", R"({"scenario": {"conveyor_speed": 0.01}, "control": {"gains": {"kp": 0.8}}})");
    ASSERT_EQ(rigsim("pickplace --dump-config --config " + cfg + " --out " + (dir / "a").string()).code, 0);
    ASSERT_EQ(rigsim("pickplace --dump-config --config " + (dir / "a" / "effective_config.json").string() +
                     " --out " + (dir / "b").string())
                  .code,
              0);
    EXPECT_EQ(slurp(dir / "a" / "effective_config.json"), slurp(dir / "b" / "effective_config.json"));
    EXPECT_EQ(slurp(dir / "a" / "events.log"), slurp(dir / "b" / "events.log"));
    EXPECT_EQ(slurp(dir / "a" / "report.kv"), slurp(dir / "b" / "report.kv"));
}

TEST_F(Cli, BadFlagIsConfigError) {
    EXPECT_EQ(rigsim("modal --format xml").code, 1);
    EXPECT_EQ(rigsim("").code, 1);
}
