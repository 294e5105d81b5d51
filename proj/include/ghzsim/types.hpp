#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ghzsim {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr Complex imag_unit{0.0, 1.0};

// An integration run left its quality envelope (norm or trace drift,
// positivity loss). The run is not trustworthy; retry with a smaller step.
class IntegrationQualityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The instantaneous Hamiltonian has more than one (or no) near-zero
// eigenvalue, so "the" dark state is not defined at this instant.
class DegenerateDarkSpaceError : public std::runtime_error {
public:
    DegenerateDarkSpaceError(const std::string& what, int nullity)
        : std::runtime_error(what), nullity_(nullity) {}
    int nullity() const { return nullity_; }

private:
    int nullity_;
};

} // namespace ghzsim
