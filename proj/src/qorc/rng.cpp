#include "qorc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qorc {

std::uint64_t SeededRng::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a offset basis
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  SeededRng mix(master_seed ^ h);
  return mix.next_u64();
}

Eigen::MatrixXcd haar_unitary(int modes, SeededRng& rng) {
  if (modes < 1) throw std::invalid_argument("haar_unitary: modes must be >= 1");
  Eigen::MatrixXcd a(modes, modes);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      a(i, j) = std::complex<double>(re * inv_sqrt2, im * inv_sqrt2);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  // Fix the QR gauge freedom: multiply each column by the phase of the
  // corresponding R diagonal so the distribution is Haar.
  for (int j = 0; j < modes; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    const std::complex<double> phase = (mag == 0.0) ? 1.0 : d / mag;
    q.col(j) *= phase;
  }
  return q;
}

Eigen::MatrixXd orthonormal_projection(int rows, int cols, SeededRng& rng) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("orthonormal_projection: dimensions must be >= 1");
  if (rows > cols)
    throw std::invalid_argument("orthonormal_projection: rows must be <= cols");
  Eigen::MatrixXd g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.gaussian();
  // Orthonormalize the rows: thin QR of G^T, sign-corrected on the R diagonal.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g.transpose());
  Eigen::MatrixXd thin_q = qr.householderQ() * Eigen::MatrixXd::Identity(cols, rows);
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int j = 0; j < rows; ++j) {
    if (r(j, j) < 0.0) thin_q.col(j) = -thin_q.col(j);
  }
  return thin_q.transpose();
}

std::vector<std::uint8_t> bernoulli_mask(int length, double keep_prob, SeededRng& rng) {
  if (length < 0) throw std::invalid_argument("bernoulli_mask: negative length");
  if (keep_prob < 0.0 || keep_prob > 1.0)
    throw std::invalid_argument("bernoulli_mask: keep_prob must be in [0, 1]");
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(length));
  for (auto& bit : mask) bit = rng.uniform() < keep_prob ? 1 : 0;
  return mask;
}

}  // namespace qorc
