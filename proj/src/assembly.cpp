#include "platemps/assembly.hpp"

#include <stdexcept>

namespace platemps {

Eigen::MatrixXcd interior_gram(const BasisSet& basis, const InteriorSampleSet& interior) {
  const EvalTable vals = eval_basis(basis, interior.points, 0);
  const Eigen::MatrixXcd& A = vals.deriv(0, 0);
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(A.cols(), A.cols());
  G.selfadjointView<Eigen::Lower>().rankUpdate(A.adjoint(), interior.cell_weight);
  G = Eigen::MatrixXcd(G.selfadjointView<Eigen::Lower>());  // mirror the accumulated half
  G = 0.5 * (G + Eigen::MatrixXcd(G.adjoint()));
  return G;
}

GramPair assemble(const BasisSet& basis, const std::vector<BoundarySample>& boundary,
                  const InteriorSampleSet& interior, const PlateMaterial& material) {
  if (interior.points.empty()) throw std::invalid_argument("assemble: no interior points");
  const ResidualRowSet rows = residual_rows(basis, boundary, material);
  if (rows.B.cols() != basis.total()) throw std::invalid_argument("assemble: dimension mismatch");
  GramPair pair;
  pair.k = basis.scan_k;
  pair.F = Eigen::MatrixXcd::Zero(basis.total(), basis.total());
  pair.F.selfadjointView<Eigen::Lower>().rankUpdate(rows.B.adjoint(), 1.0);
  pair.F = Eigen::MatrixXcd(pair.F.selfadjointView<Eigen::Lower>());
  pair.F = 0.5 * (pair.F + Eigen::MatrixXcd(pair.F.adjoint()));
  pair.G = interior_gram(basis, interior);
  return pair;
}

}  // namespace platemps
