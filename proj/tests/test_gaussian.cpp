#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cstdio>

#include <cgkit/gaussian.hpp>
#include <cgkit/graph_io.hpp>
#include <cgkit/learn_amp.hpp>
#include <cgkit/equivalence.hpp>
#include <cgkit/oracle.hpp>

using namespace cgkit;

TEST_CASE("probit") {
    CHECK(probit(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(probit(0.975) == doctest::Approx(1.959964).epsilon(1e-5));
    CHECK(probit(0.025) == doctest::Approx(-1.959964).epsilon(1e-5));
    CHECK(probit(0.999) == doctest::Approx(3.090232).epsilon(1e-5));
    CHECK(probit(0.9) > probit(0.8));
}

TEST_CASE("partial correlation on a hand built covariance") {
    // x -> y -> z with unit innovations: cov is [[1,1,1],[1,2,2],[1,2,3]]
    Eigen::MatrixXd cov(3, 3);
    cov << 1, 1, 1, 1, 2, 2, 1, 2, 3;

    CHECK(partial_correlation(cov, 0, 2, bit(1)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(partial_correlation(cov, 0, 2, 0) == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(partial_correlation(cov, 0, 1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(partial_correlation(cov, 0, 1, bit(2)) != doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("generated models reproduce the graph oracle") {
    for (const char* spec : {"A->C, B->C, C--D", "A--B, B<->C", "A->B, B--C, B--D, C--D"}) {
        MixedGraph g = graph_of(spec);
        GraphOracle truth(g);
        ExactGaussianOracle numeric(gen_gaussian(g, 17));
        NodeSet all = g.all_nodes();
        for (int a = 0; a < g.node_count(); ++a) {
            for (int b = a + 1; b < g.node_count(); ++b) {
                for_each_subset(all & ~bit(a) & ~bit(b), [&](NodeSet s) {
                    CHECK(truth.independent(a, b, s) == numeric.independent(a, b, s));
                });
            }
        }
    }
}

TEST_CASE("model generation is seed deterministic") {
    MixedGraph g = graph_of("A->B, B--C");
    GaussianModel m1 = gen_gaussian(g, 5);
    GaussianModel m2 = gen_gaussian(g, 5);
    GaussianModel m3 = gen_gaussian(g, 6);
    CHECK(m1.names == m2.names);
    CHECK((m1.cov - m2.cov).norm() == 0.0);
    CHECK((m1.cov - m3.cov).norm() > 0.0);
}

TEST_CASE("sampling and csv round trip") {
    GaussianModel model = gen_gaussian(graph_of("A->B, B--C"), 11);
    Eigen::MatrixXd data = sample_data(model, 40, 3);
    REQUIRE(data.rows() == 40);
    REQUIRE(data.cols() == 3);
    CHECK((sample_data(model, 40, 3) - data).norm() == 0.0);
    CHECK((sample_data(model, 40, 4) - data).norm() > 0.0);

    const char* path = "/tmp/cgkit_test_data.csv";
    save_csv(path, model.names, data);
    auto [names, loaded] = load_csv(path);
    CHECK(names == model.names);
    CHECK((loaded - data).norm() == doctest::Approx(0.0).epsilon(1e-12));
    std::remove(path);
}

TEST_CASE("covariance json round trip") {
    GaussianModel model = gen_gaussian(graph_of("A--B, B<->C"), 2);
    const char* path = "/tmp/cgkit_test_cov.json";
    save_cov_json(path, model);
    GaussianModel loaded = load_cov_json(path);
    CHECK(loaded.names == model.names);
    CHECK(loaded.cov.isApprox(model.cov, 1e-12));
    std::remove(path);
}

TEST_CASE("fisher z finds the truth at one hundred thousand rows") {
    MixedGraph g = graph_of("A->B, B->C");
    GaussianModel model = gen_gaussian(g, 8);
    Eigen::MatrixXd data = sample_data(model, 100000, 8);
    FisherZOracle oracle(model.names, data, 0.01);

    CHECK(oracle.independent(0, 2, bit(1)));
    CHECK(!oracle.independent(0, 1, 0));
    CHECK(!oracle.independent(1, 2, 0));
    CHECK(!oracle.independent(0, 2, 0));
}

TEST_CASE("structure recovery from finite samples") {
    MixedGraph g = graph_of("A->C, B->C, C--D");
    GaussianModel model = gen_gaussian(g, 21);
    Eigen::MatrixXd data = sample_data(model, 100000, 21);
    AmpLearnResult res = learn_amp(FisherZOracle(model.names, data, 0.01));
    CHECK(res.ok);
    CHECK(triplex_equivalent(res.graph, g, GraphFamily::ChainGraph));
}
