#include "doctest.h"

#include "cli_app.hpp"

#include "axial/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace axial;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return parse_json(out); }
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const Json& j) {
    const auto path = std::filesystem::temp_directory_path() / ("axial_cli_" + name + ".json");
    std::ofstream(path) << dump(j);
    return path.string();
}

}  // namespace

TEST_CASE("FNV-1a") {
    CHECK(fnv1a64("") == "cbf29ce484222325");
    CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("block report") {
    const auto r = run({"block", "--family", "1", "--m", "3", "--k", "1", "--ell", "1", "--n", "1"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["cr_left"] == "0");
    CHECK(j["cr_right"] == "0");
    const RPoly block = rpoly_from_json(j["block"]);
    CHECK(cr_left(block).is_zero());
    // Byte-stable.
    CHECK(run({"block", "--family", "1", "--m", "3", "--k", "1", "--ell", "1", "--n", "1"}).out == r.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"block", "--family", "3", "--m", "3", "--k", "1", "--ell", "1"}).code == 2);
    CHECK(run({"block", "--family", "1", "--m", "3", "--k", "1", "--ell", "1", "--n", "0"}).code == 2);
    CHECK(run({"basis", "--m", "3", "--k", "1", "--ell", "5"}).code == 2);
    CHECK(run({"block", "--family", "2", "--m", "3", "--k", "1", "--ell", "0", "--n", "0"}).code == 2);
    CHECK(run({"ck-extend", "--input", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"battery", "--criterion", "99"}).code == 2);
    CHECK(run({"primitivize", "--rect", "0", "1", "1", "2"}).code == 2);
    CHECK(run({"basis", "--help"}).code == 0);
}

TEST_CASE("basis") {
    const auto j = run({"basis", "--m", "2", "--k", "1", "--ell", "1"}).json();
    CHECK(j["dimension"] == 2);
    CHECK(run({"basis", "--m", "3", "--k", "1", "--ell", "0"}).json()["dimension"] == 0);
}

TEST_CASE("ck-extend and the two-sided check") {
    const RPoly x1 = RPoly::variable(3, 1);
    const auto ok = run({"ck-extend", "--input", write_temp("x1", to_json(x1))});
    CHECK(ok.code == 0);
    const Json j = ok.json();
    CHECK(j["left_residual"] == "0");
    CHECK(j["latex"] == "x_1 - x_0 e_{1}");
    CHECK(j["input"]["fnv1a64"].get<std::string>().size() == 16);

    const RPoly x1e2 = RPoly::variable(2, 1) * RPoly::constant(RMultivector::generator(2, 2));
    const auto bad = run({"ck-extend", "--input", write_temp("x1e2", to_json(x1e2)), "--check", "two-sided"});
    CHECK(bad.code == 1);
    CHECK(rpoly_from_json(bad.json()["difference"]) == RPoly::constant(RMultivector::basis(2, 0b11, Rational(2))));

    const auto malformed = write_temp("bad", Json{{"m", 2}});
    CHECK(run({"ck-extend", "--input", malformed}).code == 2);
}

TEST_CASE("decompose, fischer, vekua, primitivize on a block") {
    const auto blk = run({"block", "--family", "2", "--m", "3", "--k", "1", "--ell", "2", "--n", "1"}).json();
    const std::string m_path = write_temp("block", blk["block"]);
    const std::string q_path = write_temp("quadruple", blk["quadruple"]);
    const auto dec = run({"decompose", "--input", m_path});
    CHECK(dec.code == 0);
    CHECK(dec.json()["reconstruction_residual"] == "0");
    const auto vek = run({"vekua", "--input", q_path});
    CHECK(vek.code == 0);
    CHECK(vek.json()["all_zero"] == true);
    const auto prim = run({"primitivize", "--input", q_path, "--rect", "0", "1", "1", "2"});
    CHECK(prim.code == 0);
    CHECK(prim.json()["remainder_residual"] == "0");

    const RPoly data = RPoly::variable(3, 1) * RPoly::variable(3, 2) * RPoly::constant(RMultivector::generator(3, 3));
    const std::string p_path = write_temp("fischer", to_json(data));
    CHECK(run({"fischer", "--mode", "harmonic", "--input", p_path}).code == 0);
    CHECK(run({"fischer", "--mode", "monogenic", "--input", p_path}).code == 0);
    CHECK(run({"fischer", "--mode", "other", "--input", p_path}).code == 2);
}

TEST_CASE("numeric subcommands") {
    const auto pw = run({"planewave", "--h", "pow", "--pow-degree", "2", "--m", "3", "--k", "0", "--ell", "1",
                         "--x0", "0.1", "--r", "0.5"});
    CHECK(pw.code == 0);
    CHECK(pw.json()["discrepancy"].get<double>() < 1e-7);
    CHECK(run({"specfun-selftest"}).code == 0);
    const auto prim = run({"primitivize", "--exponential", "--m", "3", "--k", "1", "--ell", "1", "--rect", "0", "1",
                           "1", "2"});
    CHECK(prim.code == 0);
    CHECK(prim.json()["c_spread"].get<double>() < 1e-6);
}

TEST_CASE("quick battery subset") {
    const auto r = run({"battery", "--criterion", "1", "--criterion", "13"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["criteria"].size() == 2);
    CHECK(j["criteria"][0]["pass"] == true);
    CHECK(j["criteria"][0].contains("seconds") == false);
    CHECK(r.out == run({"battery", "--criterion", "1", "--criterion", "13"}).out);
}
