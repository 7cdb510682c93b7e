#include "treeq/quantum.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "treeq/rng.hpp"

namespace treeq {

namespace {

void validate_dim(Eigen::Index dim, const char* what) {
    if (dim < 1 || dim > kMaxQuantumDim) {
        throw DimensionMismatch(std::string(what) + " dimension must lie in [1, " +
                                std::to_string(kMaxQuantumDim) + "], got " + std::to_string(dim));
    }
}

}  // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    validate_dim(amplitudes_.size(), "state");
    const double n = amplitudes_.norm();
    if (std::abs(n - 1.0) > kUnitNormTol) {
        throw NotNormalized("state norm is " + std::to_string(n) +
                            ", expected 1; use StateVector::normalized");
    }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(Eigen::Map<const Eigen::VectorXcd>(std::data(amplitudes),
                                                     static_cast<Eigen::Index>(amplitudes.size()))) {}

StateVector StateVector::normalized(const Eigen::VectorXcd& amplitudes) {
    validate_dim(amplitudes.size(), "state");
    const double n = amplitudes.norm();
    if (n < kZeroVectorTol) throw ZeroVector("cannot normalize a numerically null vector");
    return StateVector(Eigen::VectorXcd(amplitudes / n));
}

StateVector StateVector::normalized(const std::vector<Complex>& amplitudes) {
    return normalized(Eigen::Map<const Eigen::VectorXcd>(
        amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size())));
}

StateVector StateVector::basis(int dim, int k) {
    if (k < 0 || k >= dim) throw InvalidArgument("basis index out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(k) = 1.0;
    return StateVector(std::move(v));
}

Observable::Observable(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw DimensionMismatch("observable matrix must be square");
    }
    validate_dim(matrix_.rows(), "observable");
    const double defect = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (defect > kHermitianTol) {
        throw NotHermitian("matrix deviates from its conjugate transpose by " +
                           std::to_string(defect));
    }
}

BipartiteState::BipartiteState(Eigen::MatrixXcd coefficients)
    : coefficients_(std::move(coefficients)) {
    validate_dim(coefficients_.rows(), "first subsystem");
    validate_dim(coefficients_.cols(), "second subsystem");
    const double n = coefficients_.norm();
    if (std::abs(n - 1.0) > kUnitNormTol) {
        throw NotNormalized("bipartite coefficient matrix has Frobenius norm " +
                            std::to_string(n) + ", expected 1");
    }
}

Eigen::VectorXd BipartiteState::schmidt_values() const {
    return coefficients_.jacobiSvd().singularValues();
}

Eigen::MatrixXcd BipartiteState::reduced_first() const {
    return coefficients_ * coefficients_.adjoint();
}

SuperposeResult superpose(const std::vector<StateVector>& states,
                          const std::vector<Complex>& coeffs) {
    if (states.empty() || states.size() != coeffs.size()) {
        throw DimensionMismatch("superpose needs matching, nonempty states and coefficients");
    }
    const int dim = states.front().dim();
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(dim);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].dim() != dim) {
            throw DimensionMismatch("all superposed states must share one dimension");
        }
        sum += coeffs[i] * states[i].amplitudes();
    }
    const double n = sum.norm();
    if (n < kZeroVectorTol) throw ZeroVector("superposition is numerically null");
    return {StateVector(Eigen::VectorXcd(sum / n)), n};
}

Eigensystem eigensystem(const Observable& a, double degeneracy_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition failed to converge");
    }
    Eigensystem result;
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        result.pairs.push_back({values(i), vectors.col(i)});
        const bool fresh =
            result.spaces.empty() ||
            std::abs(values(i) - result.spaces.back().value) > degeneracy_tol * scale;
        if (fresh) {
            result.spaces.push_back(
                {values(i), 0, Eigen::MatrixXcd::Zero(a.dim(), a.dim())});
        }
        auto& space = result.spaces.back();
        space.multiplicity += 1;
        space.projector += vectors.col(i) * vectors.col(i).adjoint();
    }
    return result;
}

namespace {

void validate_orthonormal(const std::vector<StateVector>& basis) {
    if (basis.empty()) throw NonOrthonormalBasis("measurement basis is empty");
    const int dim = basis.front().dim();
    for (const auto& b : basis) {
        if (b.dim() != dim) throw DimensionMismatch("basis vectors must share one dimension");
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Complex g = basis[i].amplitudes().dot(basis[j].amplitudes());
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) > kOrthonormalTol) {
                throw NonOrthonormalBasis("basis Gram matrix deviates from identity at (" +
                                          std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
}

}  // namespace

std::vector<double> born_probabilities(const StateVector& s,
                                       const std::vector<StateVector>& basis) {
    validate_orthonormal(basis);
    if (basis.front().dim() != s.dim()) {
        throw DimensionMismatch("basis dimension does not match the state");
    }
    std::vector<double> probabilities;
    probabilities.reserve(basis.size());
    for (const auto& b : basis) {
        probabilities.push_back(std::norm(b.amplitudes().dot(s.amplitudes())));
    }
    return probabilities;
}

namespace {

std::vector<double> spanning_probabilities(const StateVector& s,
                                           const std::vector<StateVector>& basis) {
    auto probabilities = born_probabilities(s, basis);
    double total = 0.0;
    for (double p : probabilities) total += p;
    if (std::abs(total - 1.0) > kOrthonormalTol) {
        throw NonOrthonormalBasis("measurement basis does not span the state (probability mass " +
                                  std::to_string(total) + ")");
    }
    for (double& p : probabilities) p /= total;
    return probabilities;
}

}  // namespace

CollapseResult collapse(const StateVector& s, const std::vector<StateVector>& basis,
                        std::uint64_t seed) {
    const auto probabilities = spanning_probabilities(s, basis);
    SeededRng rng(seed);
    const std::size_t outcome = sample_index(probabilities, rng.uniform01());
    return {outcome, basis[outcome]};
}

std::vector<std::uint64_t> collapse_counts(const StateVector& s,
                                           const std::vector<StateVector>& basis,
                                           std::uint64_t seed, std::uint64_t trials,
                                           unsigned threads) {
    const auto probabilities = spanning_probabilities(s, basis);
    const unsigned workers = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(probabilities.size(), 0));

    auto worker = [&](unsigned w) {
        auto& counts = partial[w];
        for (std::uint64_t t = w; t < trials; t += workers) {
            counts[sample_index(probabilities, SeededRng::trial_uniform(seed, t))] += 1;
        }
    };
    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    for (const auto& c : partial) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += c[i];
    }
    return counts;
}

BipartiteState premeasure(const StateVector& system, const StateVector& pointer_ready,
                          const StateVector& branch1, const StateVector& branch2) {
    if (system.dim() != 2) {
        throw DimensionMismatch("premeasurement models a two-state system");
    }
    if (branch1.dim() != branch2.dim() || pointer_ready.dim() != branch1.dim()) {
        throw DimensionMismatch("pointer ready state and branches must share one dimension");
    }
    Eigen::MatrixXcd coefficients(2, branch1.dim());
    coefficients.row(0) = system.amplitude(0) * branch1.amplitudes().transpose();
    coefficients.row(1) = system.amplitude(1) * branch2.amplitudes().transpose();
    return BipartiteState(std::move(coefficients));
}

int schmidt_rank(const BipartiteState& b, double tol) {
    const Eigen::VectorXd values = b.schmidt_values();
    int rank = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values(i) > tol) ++rank;
    }
    return rank;
}

double pointer_overlap(std::uint32_t n_dof, double per_dof_overlap) {
    if (per_dof_overlap < 0.0 || per_dof_overlap > 1.0) {
        throw InvalidArgument("per-subsystem overlap must lie in [0, 1]");
    }
    return std::pow(per_dof_overlap, static_cast<double>(n_dof));
}

double landauer_cost(double temperature_kelvin, double bits) {
    if (temperature_kelvin <= 0.0) {
        throw NonphysicalTemperature("temperature must be positive, got " +
                                     std::to_string(temperature_kelvin));
    }
    if (bits < 0.0) throw InvalidArgument("bit count must be nonnegative");
    return kBoltzmann * temperature_kelvin * bits * std::numbers::ln2;
}

}  // namespace treeq
