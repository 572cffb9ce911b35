#include "kpz/fredholm.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "kpz/airy.hpp"

namespace kpz {

double airy_kernel(double s, double x, double y, const QuadratureRule& rule) {
  double k = 0;
  for (int i = 0; i < rule.m; i++)
    k += rule.weights[i] * airy_ai(x + rule.nodes[i] + s) *
         airy_ai(y + rule.nodes[i] + s);
  return k;
}

DiscretizedKernel discretize_kernel(double s, const QuadratureRule& rule) {
  const int m = rule.m;
  // A_ij = Ai(x_i + l_j + s) with the lambda nodes shared with the x nodes,
  // so K = A diag(w) A^T comes from one m x m table of Airy values
  Eigen::MatrixXd A(m, m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j <= i; j++)
      A(i, j) = A(j, i) = airy_ai(rule.nodes[i] + rule.nodes[j] + s);
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), m);
  Eigen::MatrixXd K = A * w.asDiagonal() * A.transpose();

  DiscretizedKernel dk;
  dk.s = s;
  dk.rule = rule;
  dk.matrix.resize((size_t)m * m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++)
      dk.matrix[(size_t)i * m + j] =
          std::sqrt(rule.weights[i]) * K(i, j) * std::sqrt(rule.weights[j]);
  return dk;
}

double fredholm_det_airy(double s, int m, double L) {
  QuadratureRule rule = build_rule(m, L);
  DiscretizedKernel dk = discretize_kernel(s, rule);
  Eigen::Map<const Eigen::MatrixXd> M(dk.matrix.data(), m, m);
  Eigen::MatrixXd ImM = Eigen::MatrixXd::Identity(m, m) - M;
  return Eigen::PartialPivLU<Eigen::MatrixXd>(ImM).determinant();
}

std::vector<double> resolvent_apply(const DiscretizedKernel& k,
                                    const std::vector<double>& rhs) {
  const int m = k.rule.m;
  if ((int)rhs.size() != m)
    throw std::invalid_argument("resolvent_apply: rhs size mismatch");
  // symmetrize: (I - M) ut = sqrt(w) rhs, u = ut / sqrt(w)
  Eigen::Map<const Eigen::MatrixXd> M(k.matrix.data(), m, m);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; i++) b(i) = std::sqrt(k.rule.weights[i]) * rhs[i];
  Eigen::MatrixXd ImM = Eigen::MatrixXd::Identity(m, m) - M;
  Eigen::VectorXd ut = Eigen::PartialPivLU<Eigen::MatrixXd>(ImM).solve(b);
  std::vector<double> u(m);
  for (int i = 0; i < m; i++) u[i] = ut(i) / std::sqrt(k.rule.weights[i]);
  return u;
}

namespace {
// composite Gauss-Legendre nodes on [-Z, 0]; panels of width <= 2 with 24
// points resolve the Ai oscillation (period >= ~0.5 at depth 150) to ~1e-14
void left_rule(double Z, std::vector<double>& zs, std::vector<double>& zw) {
  int npanel = (int)std::ceil(Z / 2.0);
  composite_rule(-Z, 0.0, npanel, 24, zs, zw);
}
}  // namespace

std::vector<double> psi_hat(double s, double w, const QuadratureRule& rule,
                            double Z) {
  std::vector<double> zs, zw;
  left_rule(Z, zs, zw);
  std::vector<double> psi(rule.m, 0.0);
  for (int i = 0; i < rule.m; i++) {
    double acc = 0;
    for (size_t k = 0; k < zs.size(); k++)
      acc += zw[k] * std::exp(2.0 * w * zs[k]) *
             airy_ai(rule.nodes[i] + zs[k] + s);
    psi[i] = acc;
  }
  return psi;
}

double g_fn(double s, double w, int m, double L, double Z) {
  if (w < 0.05)
    throw std::domain_error(
        "g_fn: w below 0.05; the left-tail damping is lost -- evaluate via "
        "the Painleve route (y_fn) instead");
  QuadratureRule rule = build_rule(m, L);
  DiscretizedKernel dk = discretize_kernel(s, rule);

  std::vector<double> zs, zw;
  left_rule(Z, zs, zw);

  // diagonal-slice reduction of the R^2_- double integral:
  // T1 = int_{-inf}^0 (-sigma) e^{2 w sigma} Ai(sigma+s) dsigma
  double t1 = 0;
  for (size_t k = 0; k < zs.size(); k++)
    t1 += zw[k] * std::exp(2.0 * w * zs[k]) * (-zs[k]) * airy_ai(zs[k] + s);

  // Psi-hat on the nodes; Phi-hat via the lambda-form of the kernel, with the
  // lambda nodes shared with the x nodes
  std::vector<double> psi = psi_hat(s, w, rule, Z);
  double shift = std::exp(2.0 * w * s);
  std::vector<double> phi(m, 0.0);
  for (int i = 0; i < m; i++) {
    double acc = 0;
    for (int j = 0; j < m; j++)
      acc += rule.weights[j] * airy_ai(rule.nodes[i] + rule.nodes[j] + s) *
             psi[j];
    phi[i] = shift * acc;
  }

  std::vector<double> u = resolvent_apply(dk, psi);
  double t2 = 0;
  for (int i = 0; i < m; i++) t2 += rule.weights[i] * phi[i] * u[i];

  return std::exp(-8.0 / 3.0 * w * w * w) * (shift * t1 + t2);
}

}  // namespace kpz
