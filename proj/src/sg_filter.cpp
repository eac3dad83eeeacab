#include "mppinav/sg_filter.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace mppinav {
namespace {

// Mirror reflection of an out-of-range index into [0, n).
int mirror_index(int t, int n) {
  if (n == 1) return 0;
  const int period = 2 * n - 2;
  int m = t % period;
  if (m < 0) m += period;
  return m < n ? m : period - m;
}

}  // namespace

std::vector<double> savitzky_golay_weights(int window, int order) {
  if (window < 1 || window % 2 == 0 || order < 0 || window <= order) {
    throw std::invalid_argument("SG filter requires an odd window larger than the order");
  }
  const int h = window / 2;
  const int m = order + 1;

  // Normal equations of the polynomial fit in the scaled variable j/h,
  // evaluated at the window center (only the constant coefficient matters).
  Eigen::MatrixXd ata = Eigen::MatrixXd::Zero(m, m);
  const double scale = h > 0 ? 1.0 / h : 1.0;
  for (int j = -h; j <= h; ++j) {
    Eigen::VectorXd basis(m);
    double pw = 1.0;
    for (int k = 0; k < m; ++k) {
      basis[k] = pw;
      pw *= j * scale;
    }
    ata += basis * basis.transpose();
  }
  const Eigen::VectorXd z = ata.ldlt().solve(Eigen::VectorXd::Unit(m, 0));

  std::vector<double> w(static_cast<std::size_t>(window));
  for (int j = -h; j <= h; ++j) {
    double pw = 1.0, acc = 0.0;
    for (int k = 0; k < m; ++k) {
      acc += z[k] * pw;
      pw *= j * scale;
    }
    w[static_cast<std::size_t>(j + h)] = acc;
  }
  return w;
}

ControlSequence sg_filter_with_weights(const ControlSequence& u,
                                       const std::vector<double>& weights) {
  const int window = static_cast<int>(weights.size());
  const int h = window / 2;
  const int n = u.horizon();
  ControlSequence out(n);
  for (int c = 0; c < 4; ++c) {
    for (int t = 0; t < n; ++t) {
      double acc = 0.0;
      for (int j = -h; j <= h; ++j) {
        acc += weights[static_cast<std::size_t>(j + h)] *
               u.channel(mirror_index(t + j, n), c);
      }
      out.set_channel(t, c, acc);
    }
  }
  return out;
}

ControlSequence sg_filter(const ControlSequence& u, int window, int order) {
  return sg_filter_with_weights(u, savitzky_golay_weights(window, order));
}

}  // namespace mppinav
