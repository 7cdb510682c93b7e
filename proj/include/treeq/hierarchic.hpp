#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "treeq/errors.hpp"
#include "treeq/padic.hpp"

namespace treeq {

using Prefix = std::vector<std::uint8_t>;
using Amplitude = std::complex<double>;

inline constexpr double kHierUnitTol = 1e-10;
inline constexpr double kHierResidualTol = 1e-8;
inline constexpr double kHierHermitianTol = 1e-12;
inline constexpr std::size_t kZpPointBudget = 1'048'576;

/// Level weight p^(-k); level k addresses prefixes of k + 1 digits.
double level_weight(std::uint32_t p, std::uint32_t level);

/// A vector in the hierarchic space over base-p digit strings: complex
/// amplitudes on prefixes of length 1..K, graded by level. Prefix kets are
/// orthonormal within a level; levels enter the inner product with weight
/// p^(-k). Amplitudes are stored unweighted; the weights live entirely in
/// the inner product.
///
/// Raw states carry amplitudes as given. Unit states additionally satisfy
/// hier_inner(s, s) = 1, which is the mode measurement probabilities are
/// defined in. Immutable after construction.
class HierarchicState {
  public:
    enum class Mode { Raw, Unit };

    HierarchicState(std::uint32_t p, std::uint32_t depth, Mode mode,
                    std::map<Prefix, Amplitude> terms);

    /// The hierarchic vector of a classical label: amplitude on every prefix
    /// of its digit string. Raw mode keeps amplitude 1 per level; unit mode
    /// scales all levels by 1/sqrt(sum_k p^(-k)).
    static HierarchicState basis_info_state(const PAdicLabel& x, Mode mode);

    std::uint32_t prime() const { return p_; }
    std::uint32_t depth() const { return depth_; }
    Mode mode() const { return mode_; }
    const std::map<Prefix, Amplitude>& terms() const { return terms_; }

    /// Amplitude on a prefix; zero when absent.
    Amplitude amplitude(const Prefix& prefix) const;

  private:
    std::uint32_t p_;
    std::uint32_t depth_;
    Mode mode_;
    std::map<Prefix, Amplitude> terms_;
};

/// Level-weighted inner product sum_k p^(-k) <a_k|b_k>, conjugate-linear in
/// the first argument. Throws MismatchedSpace when (p, K) differ.
Amplitude hier_inner(const HierarchicState& a, const HierarchicState& b);

/// sqrt(<s|s>).
double hier_norm(const HierarchicState& s);

/// Linear combination of hierarchic states, renormalized to unit mode.
/// For mutually orthogonal unit inputs the squared coefficient moduli are
/// the collapse probabilities. Throws ZeroVector on a null combination.
HierarchicState hier_superpose(const std::vector<std::pair<Amplitude, HierarchicState>>& terms);

/// The classical reading left behind by a hierarchic collapse: the digits
/// the measurement made definite, possibly shorter than the space depth.
struct InformationState {
    PAdicLabel label;
};

struct HierMeasurement {
    std::size_t index;
    InformationState outcome;
    HierarchicState post;
};

struct HierAlternatives {
    std::vector<HierarchicState> states;
    std::vector<PAdicLabel> labels;
    std::vector<double> probabilities;
};

/// Resolves the state into mutually orthogonal unit alternatives and their
/// Born weights. With an explicit alternative list the coefficients come
/// from projection; without one the candidates are the unit basis states of
/// the full-depth labels present in the state. Throws NotDecomposable when
/// alternatives overlap, leave a residual above kHierResidualTol, or carry
/// no definite leading digits to label an outcome with.
HierAlternatives decompose_alternatives(const HierarchicState& s,
                                        const std::vector<HierarchicState>& alternatives);
HierAlternatives decompose_alternatives(const HierarchicState& s);

/// Hierarchic collapse: samples alternative i with probability |alpha_i|^2;
/// the post-state is the selected unit alternative and the outcome label
/// records its definite digits. Deterministic per seed.
HierMeasurement hier_measure(const HierarchicState& s,
                             const std::vector<HierarchicState>& alternatives,
                             std::uint64_t seed);
HierMeasurement hier_measure(const HierarchicState& s, std::uint64_t seed);

/// Repeated measurement with per-trial derived seeds; counts align with the
/// decomposition order and are independent of the thread count.
std::vector<std::uint64_t> hier_measure_counts(const HierarchicState& s,
                                               const std::vector<HierarchicState>& alternatives,
                                               std::uint64_t seed, std::uint64_t trials,
                                               unsigned threads = 1);
std::vector<std::uint64_t> hier_measure_counts(const HierarchicState& s, std::uint64_t seed,
                                               std::uint64_t trials, unsigned threads = 1);

/// Wavefunction of a p-adic argument: phi(x) = <[phi]|[x]> against the raw
/// basis vector of x.
Amplitude wavefunction_eval(const HierarchicState& phi, const PAdicLabel& x);

/// Model amplitude profile sqrt(|x|_p) <= 1.
double scale_profile(const PAdicLabel& x);

/// Haar-measure quadrature over the depth-K truncation of Z_p: the mean of
/// f over all p^K digit strings. Exact for integrands constant on depth-K
/// balls. Summation is a fixed pairwise tree, so totals do not depend on
/// the thread count. Throws BudgetExceeded when p^K > kZpPointBudget.
double zp_integrate(const std::function<double(const PAdicLabel&)>& f, std::uint32_t p,
                    std::uint32_t depth, unsigned threads = 1);

/// A measurement operator given per hierarchy level: level k holds a sparse
/// Hermitian matrix on the p^(k+1)-dimensional prefix space. Levels not
/// supplied act as zero.
class OperatorTree {
  public:
    struct Entry {
        std::uint64_t row;
        std::uint64_t col;
        Amplitude value;
    };

    OperatorTree(std::uint32_t p, std::uint32_t depth,
                 std::map<std::uint32_t, std::vector<Entry>> levels);

    /// Explicit identity at every level; small depths only.
    static OperatorTree identity(std::uint32_t p, std::uint32_t depth);

    std::uint32_t prime() const { return p_; }
    std::uint32_t depth() const { return depth_; }
    const std::map<std::uint32_t, std::vector<Entry>>& levels() const { return levels_; }

  private:
    std::uint32_t p_;
    std::uint32_t depth_;
    std::map<std::uint32_t, std::vector<Entry>> levels_;
};

/// Index of a prefix in its level space: digit 0 is the most significant,
/// so index = x_0 p^k + x_1 p^(k-1) + ... + x_k for a length-(k+1) prefix.
std::uint64_t prefix_index(const Prefix& prefix, std::uint32_t p);

/// Prefix of the given length decoded from its level-space index.
Prefix prefix_of_index(std::uint64_t index, std::uint32_t p, std::uint32_t length);

/// Level-weighted expectation sum_k p^(-k) <s_k|A_k|s_k>; real for Hermitian
/// levels. Throws MismatchedSpace when (p, K) differ.
double operator_tree_expect(const OperatorTree& a, const HierarchicState& s);

}  // namespace treeq
