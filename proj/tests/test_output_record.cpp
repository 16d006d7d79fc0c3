#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <bosonkit/output_record.hpp>

#include "cli_runner.hpp"

using namespace bosonkit;

namespace {

output_record sample()
{
    output_record rec;
    rec.command = "verify";
    rec.parameters = {{"suite", "dobinski"}, {"r", "2"}};
    rec.results = {{{"n", "3"}, {"bell", "13"}},
                   {{"n", "4"}, {"value", "73.000"}, {"abs_error", "1.2e-70"}, {"note", "a, \"quoted\" one"}}};
    rec.checks = {{"dobinski (2,1) n=3", true, "ok"}, {"dobinski (2,1) n=4", false, "off by one"}};
    return rec;
}

} // namespace

TEST(OutputRecord, JsonShape)
{
    const auto j = to_json(sample());
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["results"][0]["provenance"], "exact");
    EXPECT_EQ(j["results"][1]["provenance"], "bounded");
    EXPECT_EQ(j["checks"][1]["status"], "fail");
    EXPECT_EQ(j["status"], "fail");
}

TEST(OutputRecord, JsonRoundTrip)
{
    const auto j = to_json(sample());
    const auto text = j.dump(2);
    const auto reparsed = nlohmann::ordered_json::parse(text);
    EXPECT_EQ(to_json(from_json(reparsed)).dump(2), text);
}

TEST(OutputRecord, RejectsUnknownSchema)
{
    auto j = to_json(sample());
    j["schema"] = 2;
    EXPECT_THROW(from_json(j), error);
}

TEST(OutputRecord, CsvEscapesAndTagsProvenance)
{
    std::ostringstream os;
    write_csv(os, sample());
    const std::string csv = os.str();
    EXPECT_NE(csv.find("n,bell,value,abs_error,note,provenance\n"), std::string::npos);
    EXPECT_NE(csv.find("\"a, \"\"quoted\"\" one\",bounded"), std::string::npos);
    EXPECT_NE(csv.find("check,status,detail\n"), std::string::npos);
}

TEST(OutputRecord, PlainMarksFailures)
{
    std::ostringstream os;
    write_plain(os, sample());
    EXPECT_NE(os.str().find("[FAIL] dobinski (2,1) n=4"), std::string::npos);
    EXPECT_NE(os.str().find("verification FAILED"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_cli("stirling --r 1 --s 1 --n 4"), 0);
    EXPECT_EQ(run_cli("stirling --r 2 --s 3 --n 2"), 2);
    EXPECT_EQ(run_cli("stirling --r 1"), 1);
    EXPECT_EQ(run_cli("frobnicate"), 1);
    EXPECT_EQ(run_cli("verify moments --r 3 --s 1 --max 3"), 2);
    EXPECT_EQ(run_cli("verify dobinski --r 2 --s 1 --max 3 --printed-b5"), 3);
}

TEST(Cli, BellJsonRoundTrips)
{
    const auto path = std::filesystem::temp_directory_path() / "bosonkit_bell.json";
    ASSERT_EQ(run_cli("bell --r 2 --s 2 --max 3 --format json --out " + path.string()), 0);
    const std::string text = read_file(path);
    const auto j = nlohmann::ordered_json::parse(text);
    EXPECT_EQ(to_json(from_json(j)).dump(2) + "\n", text);
    ASSERT_EQ(j["results"].size(), 4U);
    EXPECT_EQ(j["results"][3]["value"], "87");
    std::filesystem::remove(path);
}

TEST(Cli, StirlingCsv)
{
    const auto path = std::filesystem::temp_directory_path() / "bosonkit_stirling.csv";
    ASSERT_EQ(run_cli("stirling --r 2 --s 1 --n 3 --format csv --out " + path.string()), 0);
    const std::string text = read_file(path);
    EXPECT_NE(text.find("provenance"), std::string::npos);
    EXPECT_NE(text.find(",6,"), std::string::npos);
    std::filesystem::remove(path);
}
