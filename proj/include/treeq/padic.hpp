#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeq/errors.hpp"

namespace treeq {

inline constexpr std::uint32_t kMaxPrime = 97;
inline constexpr std::size_t kMaxDepth = 64;

/// Trial-division primality check for the supported base range.
bool is_prime(std::uint32_t n);

/// p^e with overflow detection; nullopt when the value exceeds uint64.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

/// A truncated p-adic integer: prime base p and K digits, digit k being the
/// coefficient of p^k. Digit 0 carries the top of the hierarchy (coarsest
/// scale, most significant for ordering by importance). Immutable.
class PAdicLabel {
  public:
    /// Validates 2 <= p <= 97 prime, 1 <= K <= 64, digits < p.
    PAdicLabel(std::uint32_t p, std::vector<std::uint8_t> digits);

    /// Base-p expansion of n, least-significant power first.
    /// Throws OverflowDepth when n >= p^K, NotPrime when p is composite.
    static PAdicLabel from_integer(std::uint64_t n, std::uint32_t p, std::size_t depth);

    static PAdicLabel zero(std::uint32_t p, std::size_t depth);

    std::uint32_t prime() const { return p_; }
    std::size_t depth() const { return digits_.size(); }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::uint8_t digit(std::size_t k) const { return digits_.at(k); }

    /// Reassembles sum digit_k * p^k. Throws OverflowDepth when the value
    /// does not fit in 64 bits.
    std::uint64_t to_integer() const;

    bool is_zero() const;

    bool operator==(const PAdicLabel& other) const = default;

    /// Lexicographic on (p, digits); orders labels for deterministic output.
    bool operator<(const PAdicLabel& other) const;

  private:
    std::uint32_t p_;
    std::vector<std::uint8_t> digits_;
};

/// Exact p-adic norm value: either 0 or p^(-v) with 0 <= v < K. Stored as
/// (p, valuation) so comparisons never round.
class PNorm {
  public:
    static PNorm zero(std::uint32_t p) { return PNorm(p, std::nullopt); }
    static PNorm of_valuation(std::uint32_t p, std::uint32_t v) { return PNorm(p, v); }

    bool is_zero() const { return !valuation_.has_value(); }

    /// Valuation v of a nonzero norm p^(-v). Throws InvalidArgument on zero.
    std::uint32_t valuation() const;

    std::uint32_t prime() const { return p_; }

    /// Approximate double value, for display only; comparisons stay exact.
    double value() const;

    std::uint64_t numerator() const { return is_zero() ? 0 : 1; }

    /// Exact denominator p^v as a decimal string (1 for the zero norm).
    std::string denominator_string() const;

    /// Denominator when it fits in 64 bits.
    std::optional<std::uint64_t> denominator_u64() const;

    /// Exact comparisons. Both sides must share the prime unless the values
    /// are trivially comparable (zero against zero, one against one).
    bool operator==(const PNorm& other) const;
    bool operator!=(const PNorm& other) const { return !(*this == other); }
    bool operator<(const PNorm& other) const;
    bool operator<=(const PNorm& other) const;

  private:
    PNorm(std::uint32_t p, std::optional<std::uint32_t> v) : p_(p), valuation_(v) {}

    std::uint32_t p_;
    std::optional<std::uint32_t> valuation_;
};

/// Standard p-adic norm: 0 for the zero label, otherwise p^(-v) with v the
/// smallest index holding a nonzero digit.
PNorm norm(const PAdicLabel& x);

/// Ultrametric distance |x - y|_p on truncated labels: p^(-j) at the first
/// differing digit index j, 0 when all digits agree.
/// Throws MismatchedField when p or K differ.
PNorm distance(const PAdicLabel& x, const PAdicLabel& y);

}  // namespace treeq
