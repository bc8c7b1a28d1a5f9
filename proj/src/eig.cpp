#include "platemps/eig.hpp"

#include <stdexcept>

namespace platemps {

TensionSolution smallest_tensions(const GramPair& pair, int m, double reg_eps) {
  const Eigen::Index n = pair.G.rows();
  if (m < 1) throw std::invalid_argument("smallest_tensions: m must be at least 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_g(pair.G);
  if (es_g.info() != Eigen::Success)
    throw std::runtime_error("smallest_tensions: eigendecomposition of G failed");
  const Eigen::VectorXd lam = es_g.eigenvalues();  // ascending
  const double lmax = lam(n - 1);
  if (!(lmax > 0.0)) throw std::runtime_error("smallest_tensions: G is numerically zero");

  Eigen::Index first = 0;
  while (first < n && lam(first) < reg_eps * lmax) ++first;
  const Eigen::Index r = n - first;
  if (r == 0) throw std::runtime_error("smallest_tensions: G is numerically zero");
  if (m > r)
    throw std::invalid_argument("smallest_tensions: m exceeds retained dimension");

  Eigen::MatrixXcd W = es_g.eigenvectors().rightCols(r);
  for (Eigen::Index j = 0; j < r; ++j) W.col(j) /= std::sqrt(lam(first + j));

  Eigen::MatrixXcd M = W.adjoint() * pair.F * W;
  M = 0.5 * (M + Eigen::MatrixXcd(M.adjoint()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_m(M);
  if (es_m.info() != Eigen::Success)
    throw std::runtime_error("smallest_tensions: reduced eigendecomposition failed");

  TensionSolution sol;
  sol.retained_dim = static_cast<int>(r);
  sol.g_condition = lmax / lam(first);
  sol.taus = es_m.eigenvalues().head(m);
  sol.vectors = W * es_m.eigenvectors().leftCols(m);
  return sol;
}

}  // namespace platemps
