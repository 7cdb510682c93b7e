#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "treeq/errors.hpp"

namespace treeq {

using Complex = std::complex<double>;

inline constexpr int kMaxQuantumDim = 64;
inline constexpr double kUnitNormTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kOrthonormalTol = 1e-8;
inline constexpr double kSchmidtTol = 1e-8;
inline constexpr double kZeroVectorTol = 1e-12;

/// Boltzmann constant, exact SI value (J/K).
inline constexpr double kBoltzmann = 1.380649e-23;

/// A normalized pure state of a finite-dimensional system. Construction
/// enforces unit norm; use StateVector::normalized to scale raw amplitudes.
class StateVector {
  public:
    explicit StateVector(Eigen::VectorXcd amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    /// Scales the amplitudes to unit norm. Throws ZeroVector when the input
    /// is numerically null.
    static StateVector normalized(const Eigen::VectorXcd& amplitudes);
    static StateVector normalized(const std::vector<Complex>& amplitudes);

    /// k-th standard basis vector of the given dimension.
    static StateVector basis(int dim, int k);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    Complex amplitude(int i) const { return amplitudes_(i); }

  private:
    Eigen::VectorXcd amplitudes_;
};

/// A physical observable: Hermitian matrix, checked at construction.
class Observable {
  public:
    explicit Observable(Eigen::MatrixXcd matrix);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

  private:
    Eigen::MatrixXcd matrix_;
};

/// A pure state of a two-part system, stored as the coefficient matrix
/// C(i, j) of |i>|j>. Frobenius norm 1 enforced at construction.
class BipartiteState {
  public:
    explicit BipartiteState(Eigen::MatrixXcd coefficients);

    int dim_first() const { return static_cast<int>(coefficients_.rows()); }
    int dim_second() const { return static_cast<int>(coefficients_.cols()); }
    const Eigen::MatrixXcd& coefficients() const { return coefficients_; }

    /// Singular values of the coefficient matrix, descending.
    Eigen::VectorXd schmidt_values() const;

    /// Reduced density matrix of the first subsystem, C C^dagger.
    Eigen::MatrixXcd reduced_first() const;

  private:
    Eigen::MatrixXcd coefficients_;
};

struct SuperposeResult {
    StateVector state;
    /// Norm of the raw combination before rescaling to unit length.
    double normalization;
};

/// Linear combination sum_i coeffs[i] * states[i], renormalized.
/// Throws DimensionMismatch on ragged input, ZeroVector when the sum is
/// numerically null.
SuperposeResult superpose(const std::vector<StateVector>& states,
                          const std::vector<Complex>& coeffs);

struct EigenPair {
    double value;
    Eigen::VectorXcd vector;
};

struct EigenSpace {
    double value;
    int multiplicity;
    Eigen::MatrixXcd projector;
};

struct Eigensystem {
    /// Eigenvalues ascending, eigenvectors orthonormal.
    std::vector<EigenPair> pairs;
    /// Degenerate eigenvalues grouped into eigenspace projectors.
    std::vector<EigenSpace> spaces;
};

Eigensystem eigensystem(const Observable& a, double degeneracy_tol = 1e-10);

/// Born probabilities |<basis_i|s>|^2. The basis must be orthonormal within
/// kOrthonormalTol; it may span only part of the space, in which case the
/// probabilities sum to less than one.
std::vector<double> born_probabilities(const StateVector& s,
                                       const std::vector<StateVector>& basis);

struct CollapseResult {
    std::size_t outcome;
    StateVector post;
};

/// Projective measurement: samples an outcome by the Born probabilities
/// using the seeded generator and returns the selected basis vector as the
/// post-state. Requires a complete basis. Deterministic per seed.
CollapseResult collapse(const StateVector& s, const std::vector<StateVector>& basis,
                        std::uint64_t seed);

/// Repeated collapse with per-trial derived seeds; outcome counts are
/// independent of the thread count.
std::vector<std::uint64_t> collapse_counts(const StateVector& s,
                                           const std::vector<StateVector>& basis,
                                           std::uint64_t seed, std::uint64_t trials,
                                           unsigned threads = 1);

/// Premeasurement: correlates a two-state system with a pointer device,
/// |psi>|ready> -> c_1|1>|branch_1> + c_2|2>|branch_2>. The ready state
/// fixes the device dimension; the transition targets are the branches.
/// Norm-preserving because the system basis states are orthogonal.
BipartiteState premeasure(const StateVector& system, const StateVector& pointer_ready,
                          const StateVector& branch1, const StateVector& branch2);

/// Number of singular values of the coefficient matrix above tol;
/// 1 exactly when the state factorizes.
int schmidt_rank(const BipartiteState& b, double tol = kSchmidtTol);

/// Overlap of two pointer readings modeled as products of n_dof subsystems
/// with per-subsystem overlap g: returns g^n_dof. With g = 1/e this is the
/// exponential decay e^(-n_dof) in the device's degrees of freedom.
double pointer_overlap(std::uint32_t n_dof, double per_dof_overlap);

/// Minimum dissipated heat k_B T ln2 per erased bit, times the bit count.
/// Throws NonphysicalTemperature for T <= 0.
double landauer_cost(double temperature_kelvin, double bits);

}  // namespace treeq
