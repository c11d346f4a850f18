#pragma once

#include <array>
#include <cmath>

namespace contactwav {

// Quaternion convention: w-first, Hamilton product, used everywhere in the
// pipeline. q and -q encode the same rotation.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
};

// 3x3 rotation matrix, row-major.
struct RotMat {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double operator()(int r, int c) const { return m[std::size_t(3 * r + c)]; }
  double& operator()(int r, int c) { return m[std::size_t(3 * r + c)]; }
};

// 6D rotation encoding: the first two matrix columns, concatenated
// column-major, i.e. v = (r00, r10, r20, r01, r11, r21). This ordering is
// fixed here and documented in the dataset format.
struct SixD {
  std::array<double, 6> v{1, 0, 0, 0, 1, 0};
};

// Throws NonUnitQuaternion if |q| deviates from 1 by more than 1e-6.
RotMat quat_to_rotmat(const Quaternion& q);

SixD rotmat_to_sixd(const RotMat& r);

// Gram-Schmidt decoding: c1 = normalize(v[0:3]),
// c2 = normalize(v[3:6] - (v[3:6].c1) c1), c3 = c1 x c2.
// Throws DegenerateSixD for zero or parallel inputs.
RotMat sixd_to_rotmat(const SixD& v);

double determinant(const RotMat& r);

// max abs element of R^T R - I.
double orthonormality_residual(const RotMat& r);

}  // namespace contactwav
