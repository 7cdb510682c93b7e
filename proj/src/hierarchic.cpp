#include "treeq/hierarchic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "treeq/rng.hpp"

namespace treeq {

double level_weight(std::uint32_t p, std::uint32_t level) {
    return std::pow(static_cast<double>(p), -static_cast<double>(level));
}

namespace {

std::string prefix_text(const Prefix& prefix) {
    std::string text = "(";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(prefix[i]);
    }
    return text + ")";
}

double self_inner(std::uint32_t p, const std::map<Prefix, Amplitude>& terms) {
    double total = 0.0;
    for (const auto& [prefix, amp] : terms) {
        total += level_weight(p, static_cast<std::uint32_t>(prefix.size() - 1)) * std::norm(amp);
    }
    return total;
}

void require_same_space(const HierarchicState& a, const HierarchicState& b) {
    if (a.prime() != b.prime() || a.depth() != b.depth()) {
        throw MismatchedSpace("states live in different hierarchic spaces");
    }
}

}  // namespace

HierarchicState::HierarchicState(std::uint32_t p, std::uint32_t depth, Mode mode,
                                 std::map<Prefix, Amplitude> terms)
    : p_(p), depth_(depth), mode_(mode), terms_(std::move(terms)) {
    if (p_ < 2 || p_ > kMaxPrime || !is_prime(p_)) {
        throw NotPrime("hierarchic base must be a prime in [2, 97]");
    }
    if (depth_ < 1 || depth_ > kMaxDepth) {
        throw InvalidArgument("hierarchic depth K must lie in [1, 64]");
    }
    for (const auto& [prefix, amp] : terms_) {
        if (prefix.empty() || prefix.size() > depth_) {
            throw InvalidArgument("prefix " + prefix_text(prefix) + " has invalid length");
        }
        for (std::uint8_t d : prefix) {
            if (d >= p_) {
                throw InvalidArgument("prefix " + prefix_text(prefix) + " has digit >= p");
            }
        }
        (void)amp;
    }
    if (mode_ == Mode::Unit) {
        const double n = self_inner(p_, terms_);
        if (std::abs(n - 1.0) > kHierUnitTol) {
            throw NotNormalized("unit-mode state has self inner product " + std::to_string(n));
        }
    }
}

HierarchicState HierarchicState::basis_info_state(const PAdicLabel& x, Mode mode) {
    const auto p = x.prime();
    const auto depth = static_cast<std::uint32_t>(x.depth());
    double scale = 1.0;
    if (mode == Mode::Unit) {
        double total = 0.0;
        for (std::uint32_t k = 0; k < depth; ++k) total += level_weight(p, k);
        scale = 1.0 / std::sqrt(total);
    }
    std::map<Prefix, Amplitude> terms;
    Prefix prefix;
    prefix.reserve(depth);
    for (std::uint32_t k = 0; k < depth; ++k) {
        prefix.push_back(x.digit(k));
        terms.emplace(prefix, Amplitude(scale, 0.0));
    }
    return HierarchicState(p, depth, mode, std::move(terms));
}

Amplitude HierarchicState::amplitude(const Prefix& prefix) const {
    const auto it = terms_.find(prefix);
    return it == terms_.end() ? Amplitude(0.0, 0.0) : it->second;
}

Amplitude hier_inner(const HierarchicState& a, const HierarchicState& b) {
    require_same_space(a, b);
    // Iterate the smaller support; the std::map order fixes the summation.
    const bool a_smaller = a.terms().size() <= b.terms().size();
    const auto& lead = a_smaller ? a.terms() : b.terms();
    const auto& other = a_smaller ? b.terms() : a.terms();
    Amplitude total(0.0, 0.0);
    for (const auto& [prefix, amp] : lead) {
        const auto it = other.find(prefix);
        if (it == other.end()) continue;
        const Amplitude& a_amp = a_smaller ? amp : it->second;
        const Amplitude& b_amp = a_smaller ? it->second : amp;
        const double w = level_weight(a.prime(), static_cast<std::uint32_t>(prefix.size() - 1));
        total += w * std::conj(a_amp) * b_amp;
    }
    return total;
}

double hier_norm(const HierarchicState& s) {
    return std::sqrt(self_inner(s.prime(), s.terms()));
}

HierarchicState hier_superpose(const std::vector<std::pair<Amplitude, HierarchicState>>& terms) {
    if (terms.empty()) throw InvalidArgument("hier_superpose needs at least one term");
    const auto& first = terms.front().second;
    std::map<Prefix, Amplitude> combined;
    for (const auto& [coeff, state] : terms) {
        require_same_space(first, state);
        for (const auto& [prefix, amp] : state.terms()) {
            combined[prefix] += coeff * amp;
        }
    }
    std::erase_if(combined, [](const auto& kv) { return kv.second == Amplitude(0.0, 0.0); });
    const double n = std::sqrt(self_inner(first.prime(), combined));
    if (n < 1e-12) throw ZeroVector("hierarchic superposition is numerically null");
    for (auto& [prefix, amp] : combined) amp /= n;
    return HierarchicState(first.prime(), first.depth(), HierarchicState::Mode::Unit,
                           std::move(combined));
}

namespace {

// The digits an alternative makes definite: the longest common prefix of the
// maximal elements of its support. In the lexicographically sorted term map
// every extension of a prefix sorts directly after it, so a prefix is
// maximal exactly when its successor does not extend it.
PAdicLabel definite_label(const HierarchicState& u) {
    std::vector<Prefix> maximal;
    const auto& terms = u.terms();
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        const auto next = std::next(it);
        const bool extended = next != terms.end() &&
                              next->first.size() > it->first.size() &&
                              std::equal(it->first.begin(), it->first.end(),
                                         next->first.begin());
        if (!extended) maximal.push_back(it->first);
    }
    if (maximal.empty()) {
        throw NotDecomposable("alternative has empty support");
    }
    Prefix common = maximal.front();
    for (const auto& prefix : maximal) {
        std::size_t keep = 0;
        while (keep < common.size() && keep < prefix.size() && common[keep] == prefix[keep]) {
            ++keep;
        }
        common.resize(keep);
    }
    if (common.empty()) {
        throw NotDecomposable("alternative carries no definite leading digit");
    }
    return PAdicLabel(u.prime(), std::move(common));
}

}  // namespace

HierAlternatives decompose_alternatives(const HierarchicState& s,
                                        const std::vector<HierarchicState>& alternatives) {
    if (s.mode() != HierarchicState::Mode::Unit) {
        throw InvalidArgument("measurement probabilities are defined for unit-mode states");
    }
    if (alternatives.empty()) throw NotDecomposable("no measurement alternatives");
    for (const auto& u : alternatives) {
        require_same_space(s, u);
        if (std::abs(self_inner(u.prime(), u.terms()) - 1.0) > kHierUnitTol) {
            throw NotDecomposable("alternative is not unit-normalized");
        }
    }
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        for (std::size_t j = i + 1; j < alternatives.size(); ++j) {
            if (std::abs(hier_inner(alternatives[i], alternatives[j])) > kHierUnitTol) {
                throw NotDecomposable("alternatives " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are not orthogonal");
            }
        }
    }

    HierAlternatives result;
    result.states = alternatives;
    std::map<Prefix, Amplitude> residual = s.terms();
    double total = 0.0;
    for (const auto& u : alternatives) {
        const Amplitude alpha = hier_inner(u, s);
        result.probabilities.push_back(std::norm(alpha));
        total += std::norm(alpha);
        result.labels.push_back(definite_label(u));
        for (const auto& [prefix, amp] : u.terms()) {
            residual[prefix] -= alpha * amp;
        }
    }
    if (std::sqrt(self_inner(s.prime(), residual)) > kHierResidualTol) {
        throw NotDecomposable("state has a component outside the span of the alternatives");
    }
    for (double& prob : result.probabilities) prob /= total;
    return result;
}

HierAlternatives decompose_alternatives(const HierarchicState& s) {
    std::vector<HierarchicState> alternatives;
    for (const auto& [prefix, amp] : s.terms()) {
        if (prefix.size() == s.depth() && std::abs(amp) > 0.0) {
            alternatives.push_back(HierarchicState::basis_info_state(
                PAdicLabel(s.prime(), prefix), HierarchicState::Mode::Unit));
        }
    }
    if (alternatives.empty()) {
        throw NotDecomposable("state has no full-depth components to project on");
    }
    return decompose_alternatives(s, alternatives);
}

namespace {

HierMeasurement select_outcome(const HierAlternatives& parts, std::size_t index) {
    return {index, InformationState{parts.labels[index]}, parts.states[index]};
}

std::vector<std::uint64_t> run_trials(const HierAlternatives& parts, std::uint64_t seed,
                                      std::uint64_t trials, unsigned threads) {
    const unsigned workers = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(parts.probabilities.size(), 0));
    auto worker = [&](unsigned w) {
        auto& counts = partial[w];
        for (std::uint64_t t = w; t < trials; t += workers) {
            counts[sample_index(parts.probabilities, SeededRng::trial_uniform(seed, t))] += 1;
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
    std::vector<std::uint64_t> counts(parts.probabilities.size(), 0);
    for (const auto& c : partial) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += c[i];
    }
    return counts;
}

}  // namespace

HierMeasurement hier_measure(const HierarchicState& s,
                             const std::vector<HierarchicState>& alternatives,
                             std::uint64_t seed) {
    const auto parts = decompose_alternatives(s, alternatives);
    SeededRng rng(seed);
    return select_outcome(parts, sample_index(parts.probabilities, rng.uniform01()));
}

HierMeasurement hier_measure(const HierarchicState& s, std::uint64_t seed) {
    const auto parts = decompose_alternatives(s);
    SeededRng rng(seed);
    return select_outcome(parts, sample_index(parts.probabilities, rng.uniform01()));
}

std::vector<std::uint64_t> hier_measure_counts(const HierarchicState& s,
                                               const std::vector<HierarchicState>& alternatives,
                                               std::uint64_t seed, std::uint64_t trials,
                                               unsigned threads) {
    return run_trials(decompose_alternatives(s, alternatives), seed, trials, threads);
}

std::vector<std::uint64_t> hier_measure_counts(const HierarchicState& s, std::uint64_t seed,
                                               std::uint64_t trials, unsigned threads) {
    return run_trials(decompose_alternatives(s), seed, trials, threads);
}

Amplitude wavefunction_eval(const HierarchicState& phi, const PAdicLabel& x) {
    if (phi.prime() != x.prime() || phi.depth() != x.depth()) {
        throw MismatchedSpace("wavefunction argument lives in a different space");
    }
    return hier_inner(phi, HierarchicState::basis_info_state(x, HierarchicState::Mode::Raw));
}

double scale_profile(const PAdicLabel& x) {
    return std::sqrt(norm(x).value());
}

namespace {

constexpr std::uint64_t kSumBlock = 256;

double pairwise_sum(std::uint64_t lo, std::uint64_t hi,
                    const std::function<double(std::uint64_t)>& term, unsigned spawn_depth) {
    if (hi - lo <= kSumBlock) {
        double acc = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
        return acc;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (spawn_depth > 0) {
        auto left = std::async(std::launch::async, pairwise_sum, lo, mid, std::cref(term),
                               spawn_depth - 1);
        const double right = pairwise_sum(mid, hi, term, spawn_depth - 1);
        return left.get() + right;
    }
    return pairwise_sum(lo, mid, term, 0) + pairwise_sum(mid, hi, term, 0);
}

}  // namespace

double zp_integrate(const std::function<double(const PAdicLabel&)>& f, std::uint32_t p,
                    std::uint32_t depth, unsigned threads) {
    const auto points = checked_pow(p, depth);
    if (!points || *points > kZpPointBudget) {
        throw BudgetExceeded("quadrature needs p^K <= " + std::to_string(kZpPointBudget) +
                             " evaluation points");
    }
    unsigned spawn_depth = 0;
    while ((1u << spawn_depth) < std::max(1u, threads)) ++spawn_depth;
    const std::function<double(std::uint64_t)> term = [&](std::uint64_t n) {
        return f(PAdicLabel::from_integer(n, p, depth));
    };
    const double total = pairwise_sum(0, *points, term, spawn_depth);
    return total / static_cast<double>(*points);
}

OperatorTree::OperatorTree(std::uint32_t p, std::uint32_t depth,
                           std::map<std::uint32_t, std::vector<Entry>> levels)
    : p_(p), depth_(depth), levels_(std::move(levels)) {
    if (p_ < 2 || p_ > kMaxPrime || !is_prime(p_)) {
        throw NotPrime("operator tree base must be a prime in [2, 97]");
    }
    if (depth_ < 1 || depth_ > kMaxDepth) {
        throw InvalidArgument("operator tree depth K must lie in [1, 64]");
    }
    for (const auto& [level, entries] : levels_) {
        if (level >= depth_) {
            throw InvalidArgument("operator level " + std::to_string(level) +
                                  " exceeds depth K = " + std::to_string(depth_));
        }
        const auto dim = checked_pow(p_, level + 1);
        if (!dim) {
            throw BudgetExceeded("operator level dimension exceeds the addressable range");
        }
        std::map<std::pair<std::uint64_t, std::uint64_t>, Amplitude> matrix;
        for (const auto& entry : entries) {
            if (entry.row >= *dim || entry.col >= *dim) {
                throw InvalidArgument("operator entry outside the level-" + std::to_string(level) +
                                      " space of dimension " + std::to_string(*dim));
            }
            if (!matrix.emplace(std::make_pair(entry.row, entry.col), entry.value).second) {
                throw InvalidArgument("duplicate operator entry at level " + std::to_string(level));
            }
        }
        for (const auto& [pos, value] : matrix) {
            const auto mirror = matrix.find({pos.second, pos.first});
            const Amplitude transposed =
                mirror == matrix.end() ? Amplitude(0.0, 0.0) : mirror->second;
            if (std::abs(value - std::conj(transposed)) > kHierHermitianTol) {
                throw NotHermitian("operator level " + std::to_string(level) +
                                   " is not Hermitian at (" + std::to_string(pos.first) + ", " +
                                   std::to_string(pos.second) + ")");
            }
        }
    }
}

OperatorTree OperatorTree::identity(std::uint32_t p, std::uint32_t depth) {
    const auto top = checked_pow(p, depth);
    if (!top || *top > kZpPointBudget) {
        throw BudgetExceeded("explicit identity tree needs p^K <= " +
                             std::to_string(kZpPointBudget));
    }
    std::map<std::uint32_t, std::vector<Entry>> levels;
    for (std::uint32_t k = 0; k < depth; ++k) {
        const std::uint64_t dim = *checked_pow(p, k + 1);
        std::vector<Entry> entries;
        entries.reserve(dim);
        for (std::uint64_t i = 0; i < dim; ++i) entries.push_back({i, i, Amplitude(1.0, 0.0)});
        levels.emplace(k, std::move(entries));
    }
    return OperatorTree(p, depth, std::move(levels));
}

std::uint64_t prefix_index(const Prefix& prefix, std::uint32_t p) {
    std::uint64_t index = 0;
    for (std::uint8_t d : prefix) index = index * p + d;
    return index;
}

Prefix prefix_of_index(std::uint64_t index, std::uint32_t p, std::uint32_t length) {
    Prefix prefix(length, 0);
    for (std::uint32_t i = length; i-- > 0;) {
        prefix[i] = static_cast<std::uint8_t>(index % p);
        index /= p;
    }
    return prefix;
}

double operator_tree_expect(const OperatorTree& a, const HierarchicState& s) {
    if (a.prime() != s.prime() || a.depth() != s.depth()) {
        throw MismatchedSpace("operator tree and state live in different spaces");
    }
    Amplitude total(0.0, 0.0);
    for (const auto& [level, entries] : a.levels()) {
        Amplitude level_sum(0.0, 0.0);
        for (const auto& entry : entries) {
            const Amplitude bra = s.amplitude(prefix_of_index(entry.row, a.prime(), level + 1));
            if (bra == Amplitude(0.0, 0.0)) continue;
            const Amplitude ket = s.amplitude(prefix_of_index(entry.col, a.prime(), level + 1));
            level_sum += std::conj(bra) * entry.value * ket;
        }
        total += level_weight(a.prime(), level) * level_sum;
    }
    if (std::abs(total.imag()) > 1e-10) {
        throw NotHermitian("expectation has a nonreal component");
    }
    return total.real();
}

}  // namespace treeq
