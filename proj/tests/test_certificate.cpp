#include "artifact/certificate.hpp"

#include <doctest.h>

using namespace artifact;

TEST_SUITE("certificate") {
  TEST_CASE("rational serialization round-trips") {
    for (const auto& q : {Rational(-13, 2), Rational(0), Rational(7), Rational(-1, 3)}) {
      Rational c = q;
      c.canonicalize();
      CHECK(rational_from_json(rational_json(c)) == c);
    }
  }

  TEST_CASE("E6 certificate and report") {
    const auto r = run_case(Family::E6, 6, 6);
    CHECK(r.passed());
    const auto j = certificate_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["verdict"] == "pass");
    CHECK(j["first_failure"].is_null());
    const auto again = nlohmann::ordered_json::parse(j.dump());
    CHECK(again == j);
    const auto text = render_report(j, true);
    CHECK(text.find("h = -2 a1^v - a2^v + a3^v + 6 a4^v - 5 a5^v") != std::string::npos);
    CHECK(text.find("{6, 8, 18}") != std::string::npos);
  }

  TEST_CASE("identical inputs give identical certificates") {
    CHECK(certificate_json(run_case(Family::D, 8, 8)).dump() == certificate_json(run_case(Family::D, 8, 8)).dump());
  }

  TEST_CASE("a failed certificate names its first failing check") {
    auto c = build_case(Family::B, 6, 4);
    c.gamma_sets.erase(c.gamma_sets.begin());
    c.S.erase(c.S.begin());
    const auto r = run_candidate(c);
    CHECK_FALSE(r.passed());
    const auto j = certificate_json(r);
    CHECK(j["verdict"] == "fail");
    REQUIRE(j["first_failure"].is_string());
    const auto text = render_report(j, false);
    CHECK(text.find("first failing check: " + j["first_failure"].get<std::string>()) != std::string::npos);
  }

  TEST_CASE("malformed certificate is rejected") {
    CHECK_THROWS(render_report(nlohmann::ordered_json::parse("{\"schema\": 2}"), true));
    CHECK_THROWS(render_report(nlohmann::ordered_json::parse("[1, 2]"), true));
  }

  TEST_CASE("epsilon labels") {
    const RootSystem sys(Family::B, 3);
    CHECK(root_label(sys, {1, 1, 0}) == "e1-e3");
    CHECK(root_label(sys, {0, 1, 2}) == "e2+e3");
    CHECK(root_label(sys, {0, 0, -1}) == "-e3");
    CHECK(coroot_combination({Rational(0), Rational(-13, 2), Rational(1)}) == "-13/2 a2^v + a3^v");
  }
}
