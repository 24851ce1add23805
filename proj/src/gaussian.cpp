#include "cgkit/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cgkit/errors.hpp"
#include "cgkit/rng.hpp"

namespace cgkit {

namespace {

// undirected components in a topological order of the directed edges between
// them, smallest component root first among the ready ones
std::vector<NodeSet> topo_components(const MixedGraph& g) {
    std::vector<NodeSet> comps = g.undirected_components();
    const int m = static_cast<int>(comps.size());
    std::vector<int> of(g.node_count(), -1);
    for (int i = 0; i < m; ++i)
        for (int v : set_nodes(comps[i])) of[v] = i;

    std::vector<std::set<int>> succ(m);
    std::vector<int> indeg(m, 0);
    for (const Edge& e : g.edge_list()) {
        if (e.type != EdgeType::Directed) continue;
        int ca = of[g.index_of(e.a)], cb = of[g.index_of(e.b)];
        if (ca != cb && succ[ca].insert(cb).second) ++indeg[cb];
    }
    std::set<int> ready;
    for (int i = 0; i < m; ++i)
        if (indeg[i] == 0) ready.insert(i);
    std::vector<NodeSet> out;
    while (!ready.empty()) {
        int i = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(comps[i]);
        for (int j : succ[i])
            if (--indeg[j] == 0) ready.insert(j);
    }
    if (static_cast<int>(out.size()) != m)
        throw input_error("gen_gaussian: directed cycle between components");
    return out;
}

Eigen::MatrixXd cg_covariance(const MixedGraph& g, Rng& rng) {
    const int n = g.node_count();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(n, n);
    for (NodeSet comp : topo_components(g)) {
        std::vector<int> members = set_nodes(comp);
        const int k = static_cast<int>(members.size());

        Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(k, n);
        for (int i = 0; i < k; ++i)
            for (int p : set_nodes(g.parents(bit(members[i]))))
                coef(i, p) = rng.signed_uniform(0.2, 0.8);

        Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.edge_type(members[i], members[j]) == EdgeType::Undirected) {
                    double v = rng.signed_uniform(0.1, 0.5);
                    lambda(i, j) = lambda(j, i) = v;
                }
        for (int i = 0; i < k; ++i) {
            double slack = rng.uniform(0.5, 1.5);
            lambda(i, i) = lambda.row(i).cwiseAbs().sum() + slack;
        }

        Eigen::MatrixXd noise = lambda.inverse();
        Eigen::MatrixXd cross = coef * sigma;                            // k x n
        Eigen::MatrixXd block = cross * coef.transpose() + noise;       // k x k

        for (int i = 0; i < k; ++i) {
            for (int c = 0; c < n; ++c) {
                sigma(members[i], c) = cross(i, c);
                sigma(c, members[i]) = cross(i, c);
            }
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sigma(members[i], members[j]) = block(i, j);
    }
    return sigma;
}

}  // namespace

double partial_correlation(const Eigen::MatrixXd& cov, int a, int b, NodeSet s) {
    std::vector<int> idx = {a, b};
    for (int v : set_nodes(s)) idx.push_back(v);
    const int k = static_cast<int>(idx.size());
    Eigen::MatrixXd sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = cov(idx[i], idx[j]);
    Eigen::MatrixXd prec = sub.inverse();
    return -prec(0, 1) / std::sqrt(prec(0, 0) * prec(1, 1));
}

GaussianModel gen_gaussian(const MixedGraph& g, SepKind kind, std::uint64_t seed) {
    if (kind == SepKind::Amp && !is_chain_graph(g))
        throw input_error("gen_gaussian: graph is not a chain graph");
    if (kind == SepKind::Mccg && !is_mccg(g))
        throw input_error("gen_gaussian: graph is not an MCCG");

    const MixedGraph base = kind == SepKind::Amp ? g : latent_expand(g);
    const int n = g.node_count();
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[i] = base.index_of(g.name_of(i));

    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Eigen::MatrixXd full = cg_covariance(base, rng);
        Eigen::MatrixXd cov(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cov(i, j) = full(where[i], where[j]);

        const int max_cond = n <= 8 ? n - 2 : 2;
        bool faithful = true;
        for (int a = 0; a < n && faithful; ++a) {
            for (int b = a + 1; b < n && faithful; ++b) {
                NodeSet rest = g.all_nodes() & ~bit(a) & ~bit(b);
                for_each_subset(rest, [&](NodeSet s) {
                    if (!faithful || set_size(s) > max_cond) return;
                    bool sep = separated_unchecked(g, kind, bit(a), bit(b), s);
                    bool zero = std::abs(partial_correlation(cov, a, b, s)) <= kParcorTol;
                    if (sep != zero) faithful = false;
                });
            }
        }
        if (faithful) return {g.names(), cov};
    }
    throw algorithm_error("gen_gaussian: no faithful draw within 100 attempts");
}

GaussianModel gen_gaussian(const MixedGraph& g, std::uint64_t seed) {
    return gen_gaussian(g, auto_sep_kind(g), seed);
}

ExactGaussianOracle::ExactGaussianOracle(GaussianModel model, double tol)
    : model_(std::move(model)), tol_(tol) {
    if (!std::is_sorted(model_.names.begin(), model_.names.end()))
        throw input_error("ExactGaussianOracle: names must be sorted");
    if (model_.cov.rows() != model_.cov.cols() ||
        model_.cov.rows() != static_cast<int>(model_.names.size()))
        throw input_error("ExactGaussianOracle: covariance shape does not match names");
}

bool ExactGaussianOracle::independent(int a, int b, NodeSet s) const {
    return std::abs(partial_correlation(model_.cov, a, b, s)) <= tol_;
}

FisherZOracle::FisherZOracle(std::vector<std::string> names, const Eigen::MatrixXd& data,
                             double alpha) {
    const int p = static_cast<int>(names.size());
    if (data.cols() != p) throw input_error("FisherZOracle: column count does not match names");
    if (!(alpha > 0.0 && alpha < 1.0)) throw input_error("FisherZOracle: alpha must be in (0,1)");
    sample_size_ = static_cast<int>(data.rows());
    if (sample_size_ < 8) throw input_error("FisherZOracle: need at least 8 observations");

    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return names[i] < names[j]; });
    names_.reserve(p);
    Eigen::MatrixXd x(sample_size_, p);
    for (int j = 0; j < p; ++j) {
        names_.push_back(names[order[j]]);
        x.col(j) = data.col(order[j]);
    }
    for (int j = 1; j < p; ++j)
        if (names_[j] == names_[j - 1]) throw input_error("FisherZOracle: duplicate name");

    Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    cov_ = x.transpose() * x / static_cast<double>(sample_size_ - 1);
    threshold_ = probit(1.0 - alpha / 2.0);
}

bool FisherZOracle::independent(int a, int b, NodeSet s) const {
    const int df = sample_size_ - set_size(s) - 3;
    if (df <= 0) throw input_error("FisherZOracle: conditioning set too large for sample size");
    double r = partial_correlation(cov_, a, b, s);
    r = std::clamp(r, -1.0 + 1e-12, 1.0 - 1e-12);
    double stat = std::sqrt(static_cast<double>(df)) * std::abs(std::atanh(r));
    return stat <= threshold_;
}

double probit(double p) {
    if (!(p > 0.0 && p < 1.0)) throw input_error("probit: argument must be in (0,1)");
    // rational approximation followed by one Halley step against erfc
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    double x;
    if (p < 0.02425) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 0.97575) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double err = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = err * std::sqrt(2.0 * 3.14159265358979323846) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

Eigen::MatrixXd sample_data(const GaussianModel& model, int n, std::uint64_t seed) {
    const int p = static_cast<int>(model.names.size());
    Eigen::LLT<Eigen::MatrixXd> llt(model.cov);
    if (llt.info() != Eigen::Success)
        throw input_error("sample_data: covariance is not positive definite");
    Eigen::MatrixXd l = llt.matrixL();
    Rng rng(seed);
    Eigen::MatrixXd z(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) z(i, j) = rng.normal();
    return z * l.transpose();
}

void save_csv(const std::string& path, const std::vector<std::string>& names,
              const Eigen::MatrixXd& data) {
    if (data.cols() != static_cast<int>(names.size()))
        throw input_error("save_csv: column count does not match names");
    std::ofstream out(path);
    if (!out) throw input_error("save_csv: cannot open '" + path + "'");
    for (std::size_t j = 0; j < names.size(); ++j)
        out << (j ? "," : "") << names[j];
    out << "\n";
    out.precision(17);
    for (int i = 0; i < data.rows(); ++i) {
        for (int j = 0; j < data.cols(); ++j)
            out << (j ? "," : "") << data(i, j);
        out << "\n";
    }
}

std::pair<std::vector<std::string>, Eigen::MatrixXd> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("load_csv: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw input_error("load_csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> names;
    {
        std::stringstream head(line);
        std::string cell;
        while (std::getline(head, cell, ',')) names.push_back(cell);
    }
    if (names.empty()) throw input_error("load_csv: no columns");
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw input_error("load_csv: bad number '" + cell + "'");
            }
        }
        if (row.size() != names.size())
            throw input_error("load_csv: ragged row with " + std::to_string(row.size()) +
                              " cells");
        rows.push_back(std::move(row));
    }
    Eigen::MatrixXd data(rows.size(), names.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < names.size(); ++j) data(i, j) = rows[i][j];
    return {names, data};
}

void save_cov_json(const std::string& path, const GaussianModel& model) {
    nlohmann::json j;
    j["names"] = model.names;
    std::vector<double> flat;
    flat.reserve(model.cov.size());
    for (int i = 0; i < model.cov.rows(); ++i)
        for (int c = 0; c < model.cov.cols(); ++c) flat.push_back(model.cov(i, c));
    j["cov"] = flat;
    std::ofstream out(path);
    if (!out) throw input_error("save_cov_json: cannot open '" + path + "'");
    out << j.dump() << "\n";
}

GaussianModel load_cov_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("load_cov_json: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("load_cov_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("names") || !j.contains("cov"))
        throw input_error("load_cov_json: expected object with 'names' and 'cov'");
    GaussianModel m;
    m.names = j["names"].get<std::vector<std::string>>();
    std::vector<double> flat = j["cov"].get<std::vector<double>>();
    const int p = static_cast<int>(m.names.size());
    if (static_cast<int>(flat.size()) != p * p)
        throw input_error("load_cov_json: cov length is not names^2");
    if (!std::is_sorted(m.names.begin(), m.names.end()))
        throw input_error("load_cov_json: names must be sorted");
    m.cov.resize(p, p);
    for (int i = 0; i < p; ++i)
        for (int c = 0; c < p; ++c) m.cov(i, c) = flat[i * p + c];
    return m;
}

}  // namespace cgkit
