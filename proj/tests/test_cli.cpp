#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "fock/state_io.hpp"

using namespace fock;

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string text;
};

RunOutput run_cli(const std::string& args) {
    std::string command = std::string(PHOTON_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunOutput out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.text.append(buf, got);
    int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/photon_cli_") + name;
}

}  // namespace

TEST_CASE("random states are reproducible byte for byte") {
    RunOutput a = run_cli("random --modes 2 --n-max 3 --kind cross-coherent --seed 5");
    RunOutput b = run_cli("random --modes 2 --n-max 3 --kind cross-coherent --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.text == b.text);
    RunOutput c = run_cli("random --modes 2 --n-max 3 --kind cross-coherent --seed 6");
    CHECK(a.text != c.text);
}

TEST_CASE("emitted documents reload to identical bytes") {
    RunOutput gen = run_cli("random --modes 2 --n-max 2 --kind pure --seed 9");
    REQUIRE(gen.exit_code == 0);
    std::string body = gen.text.substr(0, gen.text.find_last_not_of('\n') + 1);
    CHECK(state_to_json(parse_state(body)) == body);
}

TEST_CASE("reduce reports the removed count and surviving weight") {
    std::string in = temp_path("pair.json");
    write_file(in, R"({"modes": 2, "terms": [{"ket": [1, 1], "bra": [1, 1], "re": 1.0}]})");
    RunOutput out = run_cli("reduce --input " + in + " --remove 1");
    CHECK(out.exit_code == 0);
    CHECK(out.text.find("\"removed\": 1") != std::string::npos);
    CHECK(out.text.find("\"trace_retained\": ") != std::string::npos);
    BeamState state = parse_state(out.text);
    CHECK(state.amplitude(OccupationVector{1, 0}, OccupationVector{1, 0}).real() ==
          doctest::Approx(0.5));
}

TEST_CASE("subset emits origin weights as metadata") {
    std::string in = temp_path("mix.json");
    write_file(in, R"({"modes": 1, "terms": [
        {"ket": [1], "bra": [1], "re": 0.5},
        {"ket": [2], "bra": [2], "re": 0.5}]})");
    RunOutput out = run_cli("subset --input " + in + " --q 1");
    CHECK(out.exit_code == 0);
    CHECK(out.text.find("\"normalization\": 1.5") != std::string::npos);
    BeamState state = parse_state(out.text);
    CHECK(state.amplitude(OccupationVector{1}, OccupationVector{1}).real() ==
          doctest::Approx(1.0));

    RunOutput convex = run_cli("subset --input " + in + " --q 1 --method convex");
    CHECK(convex.exit_code == 0);
    CHECK(parse_state(convex.text).trace() == doctest::Approx(1.0));
}

TEST_CASE("oversized subset requests exit with a usage error") {
    std::string in = temp_path("mix2.json");
    write_file(in, R"({"modes": 1, "terms": [{"ket": [1], "bra": [1], "re": 1.0}]})");
    RunOutput out = run_cli("subset --input " + in + " --q 99");
    CHECK(out.exit_code == 2);
    CHECK(out.text.find("DegenerateNormalization") != std::string::npos);
}

TEST_CASE("correlate emits single values and full tables") {
    std::string in = temp_path("pair2.json");
    write_file(in, R"({"modes": 2, "terms": [{"ket": [1, 1], "bra": [1, 1], "re": 1.0}]})");
    RunOutput one = run_cli("correlate --input " + in + " --k \"1,0\" --l \"1,0\"");
    CHECK(one.exit_code == 0);
    CHECK(one.text.find("\"re\": 1") != std::string::npos);
    RunOutput table = run_cli("correlate --input " + in + " --all-order 1");
    CHECK(table.exit_code == 0);
    CHECK(table.text.rfind("k,l,re,im", 0) == 0);
    CHECK(table.text.find("\"1,0\",\"1,0\",1,0") != std::string::npos);
}

TEST_CASE("loss channel through the command line") {
    std::string in = temp_path("one.json");
    write_file(in, R"({"modes": 1, "terms": [{"ket": [1], "bra": [1], "re": 1.0}]})");
    RunOutput out = run_cli("loss --input " + in + " --eta 0.25");
    CHECK(out.exit_code == 0);
    BeamState state = parse_state(out.text);
    CHECK(state.amplitude(OccupationVector{0}, OccupationVector{0}).real() ==
          doctest::Approx(0.75));
    RunOutput bad = run_cli("loss --input " + in + " --eta 1.5");
    CHECK(bad.exit_code == 2);
    CHECK(bad.text.find("BadEta") != std::string::npos);
}

TEST_CASE("purity stokes and project answer in plain numbers") {
    std::string in = temp_path("pair3.json");
    write_file(in, R"({"modes": 2, "terms": [{"ket": [1, 1], "bra": [1, 1], "re": 1.0}]})");
    RunOutput p = run_cli("purity --input " + in + " --q 1");
    CHECK(p.exit_code == 0);
    CHECK(p.text.substr(0, 3) == "0.5");
    RunOutput s = run_cli("stokes --input " + in);
    CHECK(s.exit_code == 0);
    CHECK(s.text.find("\"s0\": 2") != std::string::npos);

    std::string single = temp_path("single.json");
    write_file(single, R"({"modes": 1, "terms": [
        {"ket": [0], "bra": [0], "re": 0.5},
        {"ket": [1], "bra": [1], "re": 0.5}]})");
    RunOutput proj = run_cli("project --input " + single + " --m 1");
    CHECK(proj.exit_code == 0);
    CHECK(proj.text.substr(0, 3) == "0.5");
}

TEST_CASE("usage errors name the offence and show a working example") {
    RunOutput missing = run_cli("reduce");
    CHECK(missing.exit_code == 2);
    CHECK(missing.text.find("--input") != std::string::npos);
    CHECK(missing.text.find("example:") != std::string::npos);
    RunOutput unknown = run_cli("frobnicate");
    CHECK(unknown.exit_code == 2);
    RunOutput nofile = run_cli("stokes --input /tmp/does_not_exist_8813.json");
    CHECK(nofile.exit_code == 2);
    CHECK(nofile.text.find("ParseError") != std::string::npos);
}

TEST_CASE("verify emits a run report and an honest exit code") {
    RunOutput out = run_cli("verify eq8 --seed 3");
    CHECK(out.exit_code == 0);
    CHECK(out.text.find("\"command\": \"verify eq8\"") != std::string::npos);
    CHECK(out.text.find("\"pass\": true") != std::string::npos);
    CHECK(out.text.find("\"suite\": \"eq8\"") != std::string::npos);
    CHECK(out.text.find("\"wall_time\":") != std::string::npos);
    RunOutput bad = run_cli("verify nonsense");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("non-hermitian input is rejected before any computation") {
    std::string in = temp_path("raw.json");
    write_file(in, R"({"modes": 1, "terms": [{"ket": [1], "bra": [0], "re": 1.0}]})");
    RunOutput out = run_cli("stokes --input " + in);
    CHECK(out.exit_code == 2);
    CHECK(out.text.find("NonHermitianState") != std::string::npos);
}
