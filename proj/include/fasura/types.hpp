#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace fasura {

using cxd = std::complex<double>;
using cxf = std::complex<float>;

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using CMatF = Eigen::MatrixXcf;

// Bits are stored one per byte, values 0/1.
using BitVec = std::vector<std::uint8_t>;

}  // namespace fasura
