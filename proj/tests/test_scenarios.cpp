#include <gtest/gtest.h>

#include "xtal/scenarios.hpp"

using namespace xtal;
using namespace xtal::scenarios;

namespace {

void expect_pass(const Certificate& c) {
    EXPECT_TRUE(c.error.empty()) << c.id << ": " << c.error;
    EXPECT_FALSE(c.checks.empty()) << c.id;
    for (const auto& k : c.checks)
        EXPECT_TRUE(k.pass()) << c.id << " / " << k.name << ": expected " << k.expected.dump() << ", got "
                              << k.computed.dump();
}

}  // namespace

TEST(Scenarios, Rank4Interval) { expect_pass(s1_rank4_interval()); }

TEST(Scenarios, DisconnectedChainFamily) {
    for (int n = 3; n <= 5; ++n) expect_pass(s2_disconnected_chains(n));
}

TEST(Scenarios, ProductConstruction) {
    expect_pass(s3_product_mobius(1));
    expect_pass(s3_product_mobius(2));
    const auto p = product_construction(2);
    EXPECT_EQ(p.shape, (Shape{8, 7, 4, 3}));
    EXPECT_EQ(p.n, 8);
    EXPECT_THROW(product_construction(0), std::invalid_argument);
    EXPECT_THROW(product_construction(5), std::invalid_argument);
}

TEST(Scenarios, NonLatticeAndFiber) {
    expect_pass(s4_non_lattice());
    expect_pass(s5_disconnected_fiber());
}

TEST(Scenarios, MatrixScenarios) {
    for (const auto& [shape, n] : default_matrix()) {
        expect_pass(s6_lower_interval_mobius(shape, n));
        expect_pass(s7_axioms_and_connectivity(shape, n));
    }
}

TEST(Scenarios, WitnessAndStaircase) {
    expect_pass(s8_witness_from_mobius());
    expect_pass(s10_rho_sphere());
}

TEST(Suite, OptionsAndDeterminism) {
    SuiteOptions one;
    one.only = "s5";
    const auto a = run_suite(one);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].id, "s5");

    SuiteOptions serial, parallel;
    parallel.jobs = 3;
    const auto x = run_suite(serial), y = run_suite(parallel);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_EQ(to_json(x[k]).dump(), to_json(y[k]).dump());
    EXPECT_FALSE(to_json(x[0]).contains("seconds"));
    EXPECT_TRUE(to_json(x[0], true).contains("seconds"));

    SuiteOptions bad;
    bad.only = "s99";
    EXPECT_THROW(run_suite(bad), std::invalid_argument);
    bad.only = "";
    bad.n_max = 6;
    EXPECT_THROW(run_suite(bad), std::invalid_argument);
    bad.n_max = 7;
    bad.allow_n6 = true;
    EXPECT_THROW(run_suite(bad), std::invalid_argument);
}

TEST(Certificate, FailsOnMismatchOrError) {
    Certificate c;
    EXPECT_FALSE(c.pass());
    c.expect("x", "identity", 1, 1);
    EXPECT_TRUE(c.pass());
    c.expect("y", "identity", 1, 2);
    EXPECT_FALSE(c.pass());
    Certificate d;
    d.expect("x", "identity", 1, 1);
    d.error = "boom";
    EXPECT_FALSE(d.pass());
}
