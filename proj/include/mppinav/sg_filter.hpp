#pragma once

#include <vector>

#include "mppinav/control_sequence.hpp"

namespace mppinav {

// Savitzky-Golay smoothing weights: the center-point evaluation of a
// least-squares polynomial fit of the given order over an odd window.
// Throws std::invalid_argument unless window is odd and > order.
std::vector<double> savitzky_golay_weights(int window, int order);

// Applies the SG convolution per channel with mirror padding of length
// (window-1)/2 on both ends. Polynomials of degree <= order are reproduced
// exactly in the interior; constants are preserved everywhere.
ControlSequence sg_filter(const ControlSequence& u, int window, int order);

// Same, with precomputed weights (hot path inside the controller).
ControlSequence sg_filter_with_weights(const ControlSequence& u,
                                       const std::vector<double>& weights);

}  // namespace mppinav
