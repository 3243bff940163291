#include <gtest/gtest.h>

#include "frontend/api.hpp"
#include "frontend/compute.hpp"
#include "frontend/report.hpp"
#include "frontend/request.hpp"

using namespace compdesign::frontend;

namespace {

json minimal_tte() { return {{"p0_e1", 0.3}, {"p0_e2", 0.4}, {"hr_e1", 0.8}, {"hr_e2", 0.7}}; }

// Runs `f` and returns the ApiError it raises.
template <class F>
ApiError raised(F&& f) {
    try {
        f();
    } catch (const ApiError& e) {
        return e;
    }
    ADD_FAILURE() << "no ApiError raised";
    return ApiError(CD_OK, "", "");
}

}  // namespace

TEST(TTERequest, DefaultsFollowThePackageArguments) {
    const TTERequest r = parse_tte_request(minimal_tte());
    EXPECT_EQ(r.design.beta_e1, 1.0);
    EXPECT_EQ(r.design.case_id, 1);
    EXPECT_EQ(r.design.copula, CD_COPULA_FRANK);
    EXPECT_EQ(r.design.rho, 0.3);
    EXPECT_EQ(r.design.rho_type, CD_ASSOC_SPEARMAN);
    EXPECT_EQ(r.design.followup_time, 1.0);
    EXPECT_EQ(r.alpha, 0.05);
    EXPECT_EQ(r.power, 0.8);
    EXPECT_EQ(r.formula, CD_SS_SCHOENFELD);
    EXPECT_EQ(r.quad.subdivisions, 1000);
    EXPECT_EQ(r.rho_grid.size(), 19u);
    EXPECT_FALSE(r.sample_size.has_value());
}

TEST(TTERequest, RejectionsNameTheField) {
    json body = minimal_tte();
    body["hr_e3"] = 0.5;
    EXPECT_EQ(raised([&] { parse_tte_request(body); }).field(), "hr_e3");

    body = minimal_tte();
    body.erase("hr_e2");
    EXPECT_EQ(raised([&] { parse_tte_request(body); }).field(), "hr_e2");

    body = minimal_tte();
    body["rho"] = "high";
    EXPECT_EQ(raised([&] { parse_tte_request(body); }).field(), "rho");

    body = minimal_tte();
    body["copula"] = "t";
    EXPECT_EQ(raised([&] { parse_tte_request(body); }).field(), "copula");

    body = minimal_tte();
    body["case"] = 2.5;
    EXPECT_EQ(raised([&] { parse_tte_request(body); }).field(), "case");

    body = minimal_tte();
    body["grid"] = -3;
    EXPECT_EQ(raised([&] { parse_tte_request(body); }).field(), "grid");

    EXPECT_EQ(raised([] { parse_tte_request(json::array()); }).status(), CD_ERR_VALIDATION);
}

TEST(CBERequest, PowerReplacesBeta) {
    json body = {{"p0_e1", 0.1}, {"p0_e2", 0.2}, {"eff_e1", -0.03}, {"eff_e2", -0.05}, {"power", 0.9}};
    EXPECT_DOUBLE_EQ(parse_cbe_request(body).design.beta, 0.1);
    body["beta"] = 0.1;
    EXPECT_EQ(raised([&] { parse_cbe_request(body); }).field(), "power");
    body.erase("power");
    body["unpooled"] = 1;
    EXPECT_EQ(raised([&] { parse_cbe_request(body); }).field(), "unpooled");
}

TEST(Scenario, ParsesValuesByShape) {
    const json doc = parse_scenario(
        "# header\n"
        "\n"
        "  p0-e1 = 0.25  # trailing comment\n"
        "case = 3\n"
        "copula = Clayton\n"
        "unpooled = false\n"
        "rho_grid = 0.1, 0.2,0.3\n"
        "alpha = 5e-2\n");
    EXPECT_EQ(doc["p0_e1"], 0.25);
    EXPECT_TRUE(doc["case"].is_number_integer());
    EXPECT_EQ(doc["copula"], "Clayton");
    EXPECT_EQ(doc["unpooled"], false);
    EXPECT_EQ(doc["rho_grid"], json::array({0.1, 0.2, 0.3}));
    EXPECT_EQ(doc["alpha"], 0.05);
}

TEST(Scenario, MalformedLinesAndDuplicates) {
    EXPECT_EQ(raised([] { parse_scenario("a = 1\nb\n"); }).field(), "line 2");
    EXPECT_EQ(raised([] { parse_scenario("a = \n"); }).field(), "line 1");
    EXPECT_EQ(raised([] { parse_scenario("a = 1\na = 2\n"); }).field(), "a");
    EXPECT_EQ(raised([] { parse_scenario("g = 1, x\n"); }).field(), "g");
}

TEST(Compute, OperationNamesRoundTrip) {
    for (const char* name : {"effectsize-tte", "samplesize-tte", "are-tte", "curves-tte", "simulate-tte", "prob-cbe",
                             "corr-bounds", "effectsize-cbe", "samplesize-cbe", "are-cbe", "simulate-cbe"}) {
        const auto op = parse_operation(name);
        ASSERT_TRUE(op.has_value()) << name;
        EXPECT_STREQ(to_string(*op), name);
    }
    EXPECT_FALSE(parse_operation("plot").has_value());
}

TEST(Compute, LimitsAreEnforced) {
    Limits limits;
    limits.max_grid = 10;
    limits.max_sample_size = 5;
    json body = minimal_tte();
    body["grid"] = 11;
    EXPECT_THROW(compute(Operation::CurvesTTE, body, limits), LimitExceeded);
    body["grid"] = 10;
    body["rho_grid"] = json::array({0.1, 0.2});
    EXPECT_NO_THROW(compute(Operation::CurvesTTE, body, limits));
    body = minimal_tte();
    body["sample_size"] = 6;
    EXPECT_THROW(compute(Operation::SimulateTTE, body, limits), LimitExceeded);
}

TEST(Compute, UndetectableComponentRendersAsNA) {
    json body = minimal_tte();
    body["hr_e2"] = 1.0;
    const json doc = compute(Operation::SamplesizeTTE, body);
    EXPECT_TRUE(doc["endpoint2"].is_null());
    EXPECT_TRUE(doc["details"]["endpoint2"]["undetectable"].get<bool>());
    const std::string table = render(Operation::SamplesizeTTE, doc, OutputFormat::Table);
    EXPECT_NE(table.find("Endpoint 2         NA"), std::string::npos);
}

TEST(Report, ShortestRoundTrips) {
    for (double x : {0.1, 1.0 / 3.0, 6162.0, 1e-300, 0.7989221955049769}) {
        EXPECT_EQ(std::stod(shortest(x)), x);
    }
    EXPECT_EQ(shortest(4.0), "4");
}
