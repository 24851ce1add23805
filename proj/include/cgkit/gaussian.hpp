#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "cgkit/mixed_graph.hpp"
#include "cgkit/oracle.hpp"
#include "cgkit/separation.hpp"

namespace cgkit {

struct GaussianModel {
    std::vector<std::string> names;  // sorted, indices match rows of cov
    Eigen::MatrixXd cov;
};

// partial correlation of a and b given s, from a covariance matrix
double partial_correlation(const Eigen::MatrixXd& cov, int a, int b, NodeSet s);

// covariance of a block-recursive normal model for a chain graph: each
// undirected component gets a sparse diagonally dominant precision over its
// internal edges and regression weights on its parents. For an MCCG the model
// comes from its latent expansion, marginalized back to the named variables.
// Draws are rejected until vanishing partial correlations match separation
// exactly (all conditioning sets when the graph has at most eight nodes,
// conditioning sets up to size two otherwise).
GaussianModel gen_gaussian(const MixedGraph& g, SepKind kind, std::uint64_t seed);
GaussianModel gen_gaussian(const MixedGraph& g, std::uint64_t seed);

inline constexpr double kParcorTol = 1e-9;

// independence = |partial correlation| <= tol on an explicit covariance
class ExactGaussianOracle : public IndependenceOracle {
  public:
    explicit ExactGaussianOracle(GaussianModel model, double tol = kParcorTol);
    const std::vector<std::string>& variable_names() const override { return model_.names; }
    bool independent(int a, int b, NodeSet s) const override;

  private:
    GaussianModel model_;
    double tol_;
};

// Fisher z test on sample partial correlations at level alpha
class FisherZOracle : public IndependenceOracle {
  public:
    // data rows are observations; columns follow names, which get sorted
    FisherZOracle(std::vector<std::string> names, const Eigen::MatrixXd& data, double alpha);
    const std::vector<std::string>& variable_names() const override { return names_; }
    bool independent(int a, int b, NodeSet s) const override;

  private:
    std::vector<std::string> names_;
    Eigen::MatrixXd cov_;
    int sample_size_;
    double threshold_;  // probit(1 - alpha / 2)
};

// inverse standard normal cdf
double probit(double p);

// n rows drawn from N(0, model.cov), reproducible for a fixed seed
Eigen::MatrixXd sample_data(const GaussianModel& model, int n, std::uint64_t seed);

void save_csv(const std::string& path, const std::vector<std::string>& names,
              const Eigen::MatrixXd& data);
std::pair<std::vector<std::string>, Eigen::MatrixXd> load_csv(const std::string& path);

void save_cov_json(const std::string& path, const GaussianModel& model);
GaussianModel load_cov_json(const std::string& path);

}  // namespace cgkit
