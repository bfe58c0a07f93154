#pragma once

#include <Eigen/Dense>

namespace gscs {

using Scalar = double;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

} // namespace gscs
