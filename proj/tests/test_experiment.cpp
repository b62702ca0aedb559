// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace supersinglet {

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("scenario defaults") {
    CHECK(scenario_defaults("fig2a").iterations == 8);
    CHECK(scenario_defaults("fig2b").n_qubits == 6);
    CHECK(scenario_defaults("fig2b").engine == Engine::truncated);
    CHECK(scenario_defaults("fig2c").epsilon == 0.1);
    CHECK(scenario_defaults("fig2c").iterations == 12);
    CHECK(scenario_defaults("fig2d").initial_state == InitialState::s0_mixture);
    CHECK(scenario_defaults("fig2e").initial_state == InitialState::modified_ghz);
    CHECK_FALSE(scenario_defaults("fig2e").twirl_each_iteration);
    CHECK_THROWS_AS((void)scenario_defaults("fig3"), InvalidArgument);
    CHECK(fig2d_default_deltas() == std::vector<double>{-0.2, -0.1, 0.0, 0.1, 0.2});
    CHECK(scenario_names().size() == 6);
}

TEST_CASE("overrides") {
    ProtocolConfig c = scenario_defaults("custom");
    apply_overrides(c, {{"n", "2"}, {"initial_state", "werner"}, {"epsilon", "0.25"},
                        {"engine", "full"}, {"iterations", "3"}, {"twirl_each_iteration", "yes"},
                        {"seed", "17"}});
    CHECK(c.n_qubits == 2);
    CHECK(c.initial_state == InitialState::werner);
    CHECK(c.epsilon == 0.25);
    CHECK(c.engine == Engine::full);
    CHECK(c.iterations == 3);
    CHECK(c.twirl_each_iteration);
    CHECK(c.seed == 17);
    CHECK_THROWS_AS(apply_overrides(c, {{"colour", "red"}}), InvalidArgument);
    CHECK_THROWS_AS(apply_overrides(c, {{"iterations", "3x"}}), InvalidArgument);
    CHECK_THROWS_AS(apply_overrides(c, {{"engine", "dense"}}), InvalidArgument);
    CHECK_THROWS_AS(apply_overrides(c, {{"twirl_each_iteration", "maybe"}}), InvalidArgument);
}

TEST_CASE("config text") {
    const auto kv = parse_config_text("# comment\n n_qubits = 6 \n\nengine=truncated # trailing\r\n");
    CHECK(kv.size() == 2);
    CHECK(kv.at("n_qubits") == "6");
    CHECK(kv.at("engine") == "truncated");
    CHECK_THROWS_AS((void)parse_config_text("just words\n"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_config_text("=3\n"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_config_file("/nonexistent/config.txt"), InvalidArgument);
}

TEST_CASE("custom two-qubit run keeps fidelity 1") {
    const auto r = run_scenario("custom", {{"n_qubits", "2"}, {"initial_state", "singlet_symmetrized"}});
    CHECK_FALSE(r.abort_reason.has_value());
    REQUIRE(r.records.size() == 9);
    for (const auto& rec : r.records) CHECK(rec.fidelity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("CSV format") {
    std::vector<IterationRecord> records{{0, 0.75, 1.0, 0.0, EngineKind::truncated},
                                         {1, 0.1, 0.03125, 1e-17, EngineKind::full}};
    const std::string csv = to_csv(records);
    CHECK(csv ==
          "iteration,fidelity,success_probability,trace_residual,engine\n"
          "0,0.75,1,0,truncated\n"
          "1,0.10000000000000001,0.03125,1.0000000000000001e-17,full\n");
    CHECK(csv.find('\r') == std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "supersinglet_csv_test.csv";
    write_csv(records, path);
    CHECK(slurp(path) == csv);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(write_csv(records, "/nonexistent/dir/out.csv"), Error);
}

TEST_CASE("SVG plots") {
    ScenarioResult r;
    r.name = "fig2a";
    r.records = {{0, 0.75, 1.0, 0.0, EngineKind::full}, {1, 0.85, 0.03, 0.0, EngineKind::full},
                 {2, 0.93, 0.04, 0.0, EngineKind::full}};
    const std::string svg = render_svg(r);
    CHECK(count(svg, "<polyline") == 2);
    CHECK(svg.find(">iteration<") != std::string::npos);
    CHECK(svg.find(">value<") != std::string::npos);
    CHECK(svg.find("x10") != std::string::npos);

    r.records.resize(1);
    const std::string single = render_svg(r);
    CHECK(count(single, "<polyline") == 0);
    CHECK(count(single, "<circle") == 2);

    r.records.clear();
    CHECK_THROWS_AS((void)render_svg(r), InvalidArgument);

    r.records = {{0, 1.0, 1.0, 0.0, EngineKind::full}};
    try {
        emit_plot(r, "/nonexistent/dir/plot.svg");
        FAIL("expected an I/O error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/plot.svg") != std::string::npos);
    }
}

}

}  // namespace supersinglet
