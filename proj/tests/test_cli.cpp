#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "lierep/cli.hpp"
#include "lierep/json_io.hpp"
#include "lierep/tensor.hpp"
#include "printers.hpp"
#include "test_support.hpp"

using namespace lierep;
using Json = nlohmann::json;
namespace jio = lierep::json;

namespace {

cli::CommandResult run(std::vector<std::string> args)
{
    return cli::run(args);
}

Json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), {"--format", "json"});
    auto r = cli::run(args);
    REQUIRE(r.status == cli::ok);
    return Json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("exit codes")
{
    CHECK(run({"dim", "--type", "E6", "--weight", "1,0,0,0,0,1"}).status == cli::ok);
    CHECK(run({"dim", "--type", "E6", "--weight", "1,0,0,0,0,1"}).out.find("650") != std::string::npos);
    CHECK(run({"--help"}).status == cli::ok);
    CHECK(run({}).status == cli::usage);
    CHECK(run({"frobnicate"}).status == cli::usage);
    CHECK(run({"dim", "--type", "F4", "--weight", "1,0,0,0"}).status == cli::usage);
    CHECK(run({"dim", "--type", "E6", "--weight", "1,0"}).status == cli::usage);
    CHECK(run({"dominant", "--type", "E6", "--weight", "1/2,0,0,0,0,0"}).status == cli::usage);
    CHECK(run({"dominant", "--type", "E6", "--weight", "2/2,0,0,0,0,-1"}).status == cli::ok);
    CHECK(run({"tensor", "--type", "E6", "--left", "1,0,0,0,0,-1", "--right", "1,0,0,0,0,0"}).status == cli::usage);
    CHECK(run({"rule", "--id", "Lem9.9", "--params", "a=1,f=1"}).status == cli::usage);
    CHECK(run({"kspectrum", "--module", "E6_L_mu", "--max-level", "8", "--printed"}).status == cli::mismatch);
    CHECK(run({"verify", "--suite", "spectra", "--module", "E6_wallach", "--max-level", "8"}).status == cli::ok);
    CHECK(run({"verify", "--suite", "bogus"}).status == cli::usage);
}

TEST_CASE("guard exit code")
{
    ::setenv("LIEREP_ORACLE_LIMIT", "100", 1);
    auto r = run({"tensor", "--type", "E6", "--left", "1,0,0,0,0,0", "--right", "1,0,0,0,0,0", "--oracle"});
    ::unsetenv("LIEREP_ORACLE_LIMIT");
    CHECK(r.status == cli::guard);
    CHECK_FALSE(r.err.empty());
    ::setenv("LIEREP_ORBIT_LIMIT", "10", 1);
    r = run({"weights", "--type", "E6", "--weight", "1,0,0,0,0,1"});
    ::unsetenv("LIEREP_ORBIT_LIMIT");
    CHECK(r.status == cli::guard);
    CHECK(run({"weights", "--type", "E6", "--weight", "1,0,0,0,0,1"}).status == cli::ok);
}

TEST_CASE("tensor JSON round-trips through the library schema")
{
    auto j = run_json({"tensor", "--type", "E6", "--left", "1,0,0,0,0,1", "--right", "2,0,0,0,0,2"});
    auto d = jio::to_decomposition(j);
    const auto& e6 = root_system("E6");
    CHECK(d.system == &e6);
    CHECK(d.components == tensor_decompose(e6, d.left, d.right).components);
    CHECK(jio::to_bigint(j.at("dimension")) == BigInt(650) * weyl_dimension(e6, Weight{2, 0, 0, 0, 0, 2}));
    CHECK(jio::from_decomposition(d).at("components") == j.at("components"));
}

TEST_CASE("spectrum JSON round-trips")
{
    auto j = run_json({"kspectrum", "--module", "E7_pi1", "--max-level", "5"});
    const auto& p = pair_data("EVII");
    auto s = jio::to_series(j, p);
    CHECK(s == hpz_k_spectrum(p, dirac_registry("E7_pi1"), 5));
    CHECK(jio::from_series(s) == j);
    CHECK_THROWS_AS(jio::to_series(j, pair_data("EIII")), std::invalid_argument);

    auto closed = run_json({"kspectrum", "--module", "E7_pi1", "--max-level", "5", "--source", "closed"});
    CHECK(closed == j);
}

TEST_CASE("big integers survive JSON")
{
    BigInt big = BigInt(1) << 80;
    auto j = jio::from_bigint(big);
    CHECK(j.is_string());
    CHECK(jio::to_bigint(j) == big);
    CHECK(jio::from_bigint(42).is_number_integer());
    CHECK(jio::to_bigint(Json("-17")) == -17);
    CHECK_THROWS(jio::to_bigint(Json("x")));
}

TEST_CASE("repeated runs are byte-identical")
{
    const std::vector<std::vector<std::string>> cmds = {
        {"--format", "json", "tensor", "--type", "D5", "--left", "1,0,0,1,0", "--right", "0,1,0,0,1"},
        {"report", "--module", "E7_pi1", "--max-level", "6"},
        {"--format", "json", "report", "--module", "E6_L_mu", "--max-level", "4"},
        {"weights", "--type", "A3", "--weight", "1,1,0"},
        {"verify"},
    };
    for (const auto& c : cmds) {
        auto a = run(c), b = run(c);
        CHECK(a.status == cli::ok);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("data files can be overridden")
{
    auto rules = write_temp("lierep_test_rules.txt", R"(format 1
rule Tiny
  system A2
  params a b
  family a@1 b@2
  factor [1,0]
  nu [1,0]
end
)");
    auto r = run({"--rules", rules.string(), "rule", "--list"});
    CHECK(r.status == cli::ok);
    CHECK(r.out.find("Tiny") != std::string::npos);
    CHECK(r.out.find("Lem3.4") == std::string::npos);
    // [1,0] (x) [1,1] also contains [0,2] and [1,0]
    CHECK(run({"--rules", rules.string(), "rule", "--id", "Tiny", "--params", "a=1,b=1"}).status == cli::mismatch);
    CHECK(run({"--rules", rules.string(), "rule", "--id", "Tiny", "--params", "a=0,b=0"}).status == cli::ok);

    auto broken = write_temp("lierep_test_broken.txt", "format 1\nrule X\n  nonsense\nend\n");
    auto e = run({"--rules", broken.string(), "rule", "--list"});
    CHECK(e.status == cli::usage);
    CHECK(e.err.find(":3:") != std::string::npos);

    auto pairs = write_temp("lierep_test_pairs.txt", PairBook::builtin().to_text());
    auto p = run({"--pairs", pairs.string(), "verify", "--suite", "spectra", "--max-level", "4"});
    CHECK(p.status == cli::ok);
    CHECK(run({"--pairs", "/nonexistent/pairs.txt", "schmid", "--pair", "EIII"}).status == cli::usage);

    std::filesystem::remove(rules);
    std::filesystem::remove(broken);
    std::filesystem::remove(pairs);
}

TEST_CASE("text output samples")
{
    auto r = run({"verify", "--suite", "rules", "--rule", "Thm3.2b", "--n", "5", "--bound", "1"});
    CHECK(r.status == cli::ok);
    CHECK(r.out.rfind("PASS") == r.out.size() - 5);
    auto d = run({"dominant", "--type", "A2", "--weight", "-1,2"});
    CHECK(d.out.find("[1,1]") != std::string::npos);
    CHECK(d.out.find("-1") != std::string::npos);
    auto s = run({"schmid", "--pair", "EIII", "--max-level", "2"});
    CHECK(s.out.find("[0,0,0,0,1,-6]") != std::string::npos);
}
