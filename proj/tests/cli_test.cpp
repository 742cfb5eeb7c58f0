// Copyright 2026 The sspsim Authors
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
// Drives the built sspsim binary and checks stdout, files and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int status = -1;
    std::string out;
};

std::string data(const std::string& name) { return std::string(SSP_TEST_DATA) + "/" + name; }

Outcome run(const std::string& args) {
    const std::string command = std::string(SSPSIM_PATH) + " " + args + " 2>/dev/null";
    Outcome result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

class TempDir {
   public:
    TempDir() {
        const auto* info = testing::UnitTest::GetInstance()->current_test_info();
        path_ = fs::temp_directory_path() / (std::string("sspsim_cli_") + info->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

   private:
    fs::path path_;
};

}  // namespace

TEST(Solve, reports_no_with_zero_count) {
    const Outcome r = run("solve " + data("odd_target.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "NO 0\n");
}

TEST(Solve, reports_yes_with_multiplicity) {
    const Outcome r = run("solve " + data("one_two_three.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "YES 2\n");
}

TEST(Solve, target_override) {
    EXPECT_EQ(run("solve " + data("one_two_three.json") + " --target 6").out, "YES 1\n");
    EXPECT_EQ(run("solve " + data("one_two_three.json") + " --target 7").out, "NO 0\n");
}

TEST(Solve, malformed_json_exits_2) {
    const Outcome r = run("solve " + data("malformed.json"));
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(r.out.empty());
}

TEST(Solve, missing_file_exits_2) { EXPECT_EQ(run("solve " + data("no_such_file.json")).status, 2); }

TEST(Cli, unknown_flag_and_missing_subcommand_exit_2) {
    EXPECT_EQ(run("solve " + data("one_two_three.json") + " --bogus").status, 2);
    EXPECT_EQ(run("").status, 2);
}

TEST(Spectrum, one_two_three) {
    const Outcome r = run("spectrum " + data("one_two_three.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "sum,frequency_hz,multiplicity,amplitude\n"
              "0,0,1,0.125\n1,1,1,0.125\n2,2,1,0.125\n3,3,2,0.25\n"
              "4,4,1,0.125\n5,5,1,0.125\n6,6,1,0.125\n");
}

TEST(Spectrum, two_ones_at_f0_2_to_file) {
    TempDir dir;
    const auto out = dir / "lines.csv";
    const Outcome r = run("spectrum " + data("two_ones.json") + " --f0 2 -o " + out.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(slurp(out), "sum,frequency_hz,multiplicity,amplitude\n0,0,1,0.25\n1,2,2,0.5\n2,4,1,0.25\n");
}

TEST(Spectrum, powers_of_two_n3_is_flat) {
    const Outcome r = run("spectrum " + data("powers_n3.json"));
    ASSERT_EQ(r.status, 0);
    std::string expected = "sum,frequency_hz,multiplicity,amplitude\n";
    for (int s = 0; s < 8; ++s) expected += std::to_string(s) + "," + std::to_string(s) + ",1,0.125\n";
    EXPECT_EQ(r.out, expected);
}

TEST(Spectrum, size_guard_exits_3) { EXPECT_EQ(run("spectrum " + data("ones_n25.json")).status, 3); }

TEST(Spectrum, bad_f0_exits_4) { EXPECT_EQ(run("spectrum " + data("one_two_three.json") + " --f0 0").status, 4); }

TEST(Simulate, noiseless_yes_line) {
    const Outcome r = run("simulate " + data("six_values.json"));
    ASSERT_EQ(r.status, 0);
    std::istringstream line(r.out);
    std::string decision;
    double magnitude = 0.0;
    double threshold = 0.0;
    line >> decision >> magnitude >> threshold;
    EXPECT_EQ(decision, "YES");
    EXPECT_NEAR(magnitude, 2.0 / 64.0, 1e-9);
    EXPECT_EQ(threshold, 1.0 / 128.0);
}

TEST(Simulate, noiseless_parity_no) {
    const Outcome r = run("simulate " + data("odd_target.json"));
    ASSERT_EQ(r.status, 0);
    std::istringstream line(r.out);
    std::string decision;
    double magnitude = 1.0;
    line >> decision >> magnitude;
    EXPECT_EQ(decision, "NO");
    EXPECT_LT(magnitude, 1e-9);
}

TEST(Simulate, noisy_short_readout_is_seeded) {
    const std::string args = "simulate " + data("powers_n10.json") + " --noise-sigma 3 --num-samples 64";
    const Outcome a = run(args + " --seed 9");
    const Outcome b = run(args + " --seed 9");
    const Outcome c = run(args + " --seed 10");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    EXPECT_TRUE(a.out.starts_with("YES ") || a.out.starts_with("NO "));
}

TEST(Simulate, undersampling_exits_4_with_required_rate) {
    const std::string command =
        std::string(SSPSIM_PATH) + " simulate " + data("six_values.json") + " --sample-rate 50 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::array<char, 1024> buffer{};
    std::string err;
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) err.append(buffer.data(), got);
    const int raw = pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(raw), 4);
    EXPECT_NE(err.find("120 Hz"), std::string::npos) << err;
}

TEST(Simulate, bad_threshold_exits_2) {
    EXPECT_EQ(run("simulate " + data("six_values.json") + " --threshold loud").status, 2);
}

TEST(Simulate, csv_output) {
    TempDir dir;
    const auto out = dir / "readout.csv";
    const Outcome r = run("simulate " + data("six_values.json") + " --num-samples 128 --noise-sigma 0.1 -o " + out.string());
    ASSERT_EQ(r.status, 0);
    const std::string csv = slurp(out);
    EXPECT_TRUE(csv.starts_with("n,target,magnitude,threshold,decision,snr_estimate,seed\n6,9,")) << csv;
    EXPECT_NE(csv.find(",YES,"), std::string::npos);
    EXPECT_TRUE(csv.ends_with(",20240601\n")) << csv;
}

TEST(Sweep, energy_powers_of_two_slope_is_minus_one) {
    const Outcome r = run("sweep " + data("energy_powers.json") + " --format json");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"slope\": -1.0"), std::string::npos) << r.out;
}

TEST(Sweep, time_powers_of_two_slope_is_about_one) {
    TempDir dir;
    const auto out = dir / "time.csv";
    const Outcome r = run("sweep " + data("time_powers.json") + " -o " + out.string());
    ASSERT_EQ(r.status, 0);
    const auto at = r.out.find("fit powers_of_two slope ");
    ASSERT_NE(at, std::string::npos) << r.out;
    const double slope = std::strtod(r.out.c_str() + at + 24, nullptr);
    EXPECT_NEAR(slope, 1.0, 0.05);
    EXPECT_NE(r.out.find("fit all_ones slope "), std::string::npos);
    EXPECT_TRUE(slurp(out).starts_with("family,n,seed,"));
}

TEST(Sweep, accuracy_reports_crossover) {
    TempDir dir;
    const Outcome r = run("sweep " + data("accuracy_small.json") + " -o " + (dir / "acc.csv").string());
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("crossover powers_of_two "), std::string::npos) << r.out;
}

TEST(Sweep, jobs_do_not_change_bytes) {
    TempDir dir;
    for (const std::string spec : {"energy_powers.json", "accuracy_small.json"}) {
        for (const std::string format : {"csv", "json", "long"}) {
            const auto one = dir / ("one." + format);
            const auto two = dir / ("two." + format);
            const auto again = dir / ("again." + format);
            const std::string base = "sweep " + data(spec) + " --format " + format;
            ASSERT_EQ(run(base + " --jobs 1 -o " + one.string()).status, 0);
            ASSERT_EQ(run(base + " --jobs 2 -o " + two.string()).status, 0);
            ASSERT_EQ(run(base + " --jobs 1 -o " + again.string()).status, 0);
            const std::string bytes = slurp(one);
            EXPECT_FALSE(bytes.empty());
            EXPECT_EQ(bytes, slurp(two)) << spec << " " << format;
            EXPECT_EQ(bytes, slurp(again)) << spec << " " << format;
        }
    }
}

TEST(Sweep, invalid_spec_exits_2) {
    EXPECT_EQ(run("sweep " + data("bad_spec.json")).status, 2);
    EXPECT_EQ(run("sweep " + data("malformed.json")).status, 2);
    EXPECT_EQ(run("sweep " + data("energy_powers.json") + " --format xml").status, 2);
}
