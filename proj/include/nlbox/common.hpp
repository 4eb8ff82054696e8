#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace nlbox {

// Dense aliases used throughout. Rows of a box table are input pairs, columns
// are outcome pairs; atoms of a quasi-distribution are stacked in a 16-vector.
using Table4 = Eigen::Matrix<double, 4, 4, Eigen::RowMajor>;
using Atoms16 = Eigen::Matrix<double, 16, 1>;
using Matrix2 = Eigen::Matrix2d;
using Vector2 = Eigen::Vector2d;
using Vector4 = Eigen::Vector4d;
using VectorX = Eigen::VectorXd;
using MatrixX = Eigen::MatrixXd;

namespace tol {
inline constexpr double kValidation = 1e-12;
inline constexpr double kEquality = 1e-9;
inline constexpr double kObservableNegativity = 1e-9;
inline constexpr double kVerdict = 1e-9;
}  // namespace tol

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Correlators requested from a box whose marginals depend on the remote input.
struct SignalingMarginals : std::domain_error {
  using std::domain_error::domain_error;
};

struct ObservableNegativity : std::domain_error {
  using std::domain_error::domain_error;
};

struct SizeLimit : std::length_error {
  using std::length_error::length_error;
};

struct NoJqpdExists : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonOrthogonalEvents : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int bit(int value, int position) { return (value >> position) & 1; }

inline void require_bit(int b, const char* name) {
  if (b != 0 && b != 1) throw InvalidArgument(std::string(name) + " must be 0 or 1");
}

}  // namespace nlbox
