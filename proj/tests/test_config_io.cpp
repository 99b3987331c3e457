#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "solchaos/config.hpp"
#include "solchaos/errors.hpp"
#include "solchaos/io.hpp"
#include "solchaos/melnikov.hpp"

using namespace solchaos;
using nlohmann::json;

namespace {

json fig2_json(double V2) {
    return json{{"dimensionless", {{"D", -2.0}, {"g1", -0.5}}},
                {"lattice", {{"V1", 0.04}, {"V2", V2}, {"k", 1.0}, {"gamma", 2}, {"phi", 0.0}}}};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}

TEST_CASE("dimensionless config with direct D") {
    const RunConfig rc = parse_config(fig2_json(0.08));
    CHECK(rc.d.D == -2.0);
    CHECK(rc.d.g1 == -0.5);
    CHECK(rc.d.v == 0.0);
    CHECK(rc.l.V2 == 0.08);
    CHECK(rc.l.gamma.is_integer());
    CHECK(rc.warnings.empty());
    CHECK_FALSE(rc.physical.has_value());
}

TEST_CASE("dimensionless config with the ansatz constants") {
    json j = fig2_json(0.08);
    j["dimensionless"] = {{"g1", -0.5}, {"v", 1.0}, {"alpha", 0.5}, {"beta", 3.0}};
    const RunConfig rc = parse_config(j);
    CHECK(rc.d.D == doctest::Approx(1.0 / 4.0 + 0.5 - 3.0));
    CHECK(rc.d.v == 1.0);
}

TEST_CASE("physical config converts on load") {
    const double mass = 7.016003436 * 1.66053906660e-27;
    const double k0 = 2.0 * kPi / 1064e-9;
    const double e_r0 = recoil_energy(mass, k0);
    json j;
    j["physical"] = {{"mass", mass},
                     {"omega_r", 2.0 * kPi * 710.0},
                     {"a_s", -1.4605291020922801e-9},
                     {"k0", k0},
                     {"V1", 0.04 * e_r0},
                     {"V2", 0.08 * e_r0},
                     {"gamma", 2},
                     {"beta", 2.0 * e_r0 / kHbar}};
    const RunConfig rc = parse_config(j);
    CHECK(rc.l.V1 == doctest::Approx(0.04).epsilon(1e-13));
    CHECK(rc.l.k == doctest::Approx(1.0));
    CHECK(rc.d.D == doctest::Approx(-2.0).epsilon(1e-13));
    REQUIRE(rc.physical.has_value());
    CHECK(rc.physical->mass == mass);
}

TEST_CASE("config rejections") {
    CHECK_THROWS_AS(parse_config(json::parse("[]")), ConfigError);
    CHECK_THROWS_AS(parse_config(json::object()), ConfigError);

    json both = fig2_json(0.08);
    both["physical"] = {{"mass", 1.0}};
    CHECK_THROWS_AS(parse_config(both), ConfigError);

    json no_lattice = fig2_json(0.08);
    no_lattice.erase("lattice");
    CHECK_THROWS_AS(parse_config(no_lattice), ConfigError);

    json bad_c = fig2_json(0.08);
    bad_c["dimensionless"]["C"] = 0.3;
    CHECK_THROWS_AS(parse_config(bad_c), ConfigError);

    json mixed = fig2_json(0.08);
    mixed["dimensionless"]["v"] = 1.0;
    CHECK_THROWS_AS(parse_config(mixed), ConfigError);

    json missing = fig2_json(0.08);
    missing["lattice"].erase("V1");
    CHECK_THROWS_AS(parse_config(missing), ConfigError);

    json negative = fig2_json(0.08);
    negative["lattice"]["V1"] = -0.1;
    CHECK_THROWS_AS(parse_config(negative), ConfigError);
}

TEST_CASE("gamma forms in configuration") {
    json j = fig2_json(0.08);

    j["lattice"]["gamma"] = json::array({3, 2});
    CHECK(parse_config(j).l.gamma.q == 2);

    j["lattice"]["gamma"] = "sqrt2";
    CHECK_FALSE(parse_config(j).l.gamma.rational);

    j["lattice"]["gamma"] = {{"irrational", 2.718281828459045}};
    CHECK_FALSE(parse_config(j).l.gamma.rational);

    j["lattice"]["gamma"] = {{"irrational", "golden"}};
    CHECK(parse_config(j).l.gamma.tag == "golden");

    // a bare non-integer float cannot carry the rationality flag
    j["lattice"]["gamma"] = 1.5;
    CHECK_THROWS_AS(parse_config(j), ConfigError);

    j["lattice"]["gamma"] = "elephant";
    CHECK_THROWS_AS(parse_config(j), ConfigError);

    // gamma_to_json round-trips through the parser
    const GammaRatio g = GammaRatio::from_fraction(5, 3);
    const auto round = gamma_from_json(json::array({g.p, g.q}));
    CHECK(round.p == 5);
    CHECK(round.q == 3);
}

TEST_CASE("warnings surface for out-of-regime dimensionless input") {
    json j = fig2_json(0.01);
    j["dimensionless"]["D"] = 2.0;
    const RunConfig rc = parse_config(j);
    REQUIRE(rc.warnings.size() == 1);
}

TEST_CASE("snapshot has stable key order") {
    const RunConfig rc = parse_config(fig2_json(0.08));
    const std::string once = rc.snapshot.dump();
    const std::string twice = params_snapshot(rc.d, rc.l).dump();
    CHECK(once == twice);
    CHECK(once.find("\"dimensionless\"") < once.find("\"lattice\""));
    CHECK(once.find("\"D\"") < once.find("\"g1\""));
}

TEST_CASE("CSV emission carries the comment line, header, and data") {
    const RunConfig rc = parse_config(fig2_json(0.08));
    const MelnikovProfile profile = count_zeros_per_period(rc.d, rc.l, 256);
    const std::string csv_path = "io_test_melnikov.csv";
    const std::string json_path = "io_test_melnikov.json";
    write_melnikov_csv(csv_path, profile, rc.snapshot);
    write_melnikov_json(json_path, profile, rc.snapshot);

    const std::string csv = slurp(csv_path);
    CHECK(csv.rfind("# solchaos", 0) == 0);
    CHECK(csv.find("params={") != std::string::npos);
    CHECK(csv.find("\nc0,M\n") != std::string::npos);
    // comment + header + one row per sample
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 256);

    const json report = json::parse(slurp(json_path));
    CHECK(report["n"] == 4);
    CHECK(report["zeros"].size() == 4);
    CHECK(report["kinds"][0] == "simple");
    CHECK(report["params"]["lattice"]["V2"] == 0.08);
    std::remove(csv_path.c_str());
    std::remove(json_path.c_str());
}

TEST_CASE("region map CSV marks labels and errors") {
    const RunConfig rc = parse_config(fig2_json(0.08));
    const RegionMap map =
        region_map({0.8, 1.2}, {0.01, 0.09}, rc.d, 0.04, GammaRatio::from_integer(2), 0.0, 1);
    const std::string path = "io_test_map.csv";
    write_region_map_csv(path, map, rc.snapshot);
    const std::string csv = slurp(path);
    CHECK(csv.find("k,V2,label,n,V2b") != std::string::npos);
    CHECK(csv.find(",A,4,") != std::string::npos);
    CHECK(csv.find(",B,2,") != std::string::npos);
    std::remove(path.c_str());
}
