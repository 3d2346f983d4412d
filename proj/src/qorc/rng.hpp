#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qorc {

// Deterministic seeded randomness.
//
// The generator is SplitMix64 (Steele/Lea/Flood): the state advances by the
// golden-ratio increment and each output is a finalizer mix of the state.
// The 64-bit integer stream is bit-exact on every platform. Floating-point
// variates (uniform, gaussian) are deterministic given the platform's libm;
// gaussians use the Marsaglia polar method so only sqrt/log are involved.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform double in [0, 1), 53 random bits.
  double uniform();

  // Standard normal via the polar method, with the spare cached.
  double gaussian();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Derives an independent sub-seed from a master seed and a textual label
// ("R1.U1", "ae.init", "ae.mask.epoch3.batch0", ...). The label is hashed
// with 64-bit FNV-1a, XORed into the master seed, and passed through one
// SplitMix64 step. Every consumer of randomness gets its own labelled
// stream so the full pipeline is reproducible from the single master seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label);

// m x m Haar-distributed unitary: QR of an i.i.d. complex-Gaussian matrix
// (entries drawn row by row, real part then imaginary part) with the
// R-diagonal phase correction, so the result is exactly Haar rather than
// merely orthogonalized.
Eigen::MatrixXcd haar_unitary(int modes, SeededRng& rng);

// rows x cols real matrix W with orthonormal rows (W W^T = I), obtained by
// QR-orthonormalizing i.i.d. Gaussian rows. Requires rows <= cols.
Eigen::MatrixXd orthonormal_projection(int rows, int cols, SeededRng& rng);

// i.i.d. Bernoulli(keep_prob) 0/1 vector.
std::vector<std::uint8_t> bernoulli_mask(int length, double keep_prob, SeededRng& rng);

}  // namespace qorc
