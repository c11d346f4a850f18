#include "contactwav/rotation.hpp"

#include <cmath>
#include <string>

#include "contactwav/error.hpp"

namespace contactwav {

RotMat quat_to_rotmat(const Quaternion& q) {
  const double n = q.norm();
  if (std::abs(n - 1.0) > 1e-6)
    fail(Errc::non_unit_quaternion,
         "quaternion norm " + std::to_string(n) + " deviates from 1");

  const double w = q.w / n, x = q.x / n, y = q.y / n, z = q.z / n;
  RotMat r;
  r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)};
  return r;
}

SixD rotmat_to_sixd(const RotMat& r) {
  SixD v;
  v.v = {r(0, 0), r(1, 0), r(2, 0), r(0, 1), r(1, 1), r(2, 1)};
  return v;
}

RotMat sixd_to_rotmat(const SixD& v) {
  const double* a = v.v.data();
  const double* b = v.v.data() + 3;

  const double na = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  if (na <= 1e-8) fail(Errc::degenerate_sixd, "first 3-vector has near-zero norm");
  const double c1[3] = {a[0] / na, a[1] / na, a[2] / na};

  const double dot = b[0] * c1[0] + b[1] * c1[1] + b[2] * c1[2];
  double c2[3] = {b[0] - dot * c1[0], b[1] - dot * c1[1], b[2] - dot * c1[2]};
  const double nb = std::sqrt(c2[0] * c2[0] + c2[1] * c2[1] + c2[2] * c2[2]);
  const double nb_in = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
  // Parallel (or zero) second vector leaves nothing after projection.
  if (nb_in <= 1e-8 || nb / nb_in <= 1e-8)
    fail(Errc::degenerate_sixd, "second 3-vector is parallel to the first");
  c2[0] /= nb;
  c2[1] /= nb;
  c2[2] /= nb;

  const double c3[3] = {c1[1] * c2[2] - c1[2] * c2[1],
                        c1[2] * c2[0] - c1[0] * c2[2],
                        c1[0] * c2[1] - c1[1] * c2[0]};

  RotMat r;
  r.m = {c1[0], c2[0], c3[0], c1[1], c2[1], c3[1], c1[2], c2[2], c3[2]};
  return r;
}

double determinant(const RotMat& r) {
  return r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
         r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
         r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
}

double orthonormality_residual(const RotMat& r) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += r(k, i) * r(k, j);
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot - target));
    }
  }
  return worst;
}

}  // namespace contactwav
