#include "treeq/padic.hpp"

#include <algorithm>

namespace treeq {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

namespace {

void validate_base(std::uint32_t p) {
    if (p < 2 || p > kMaxPrime) {
        throw InvalidArgument("base p must lie in [2, 97], got " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw NotPrime("base p must be prime, got " + std::to_string(p));
    }
}

void validate_depth(std::size_t depth) {
    if (depth < 1 || depth > kMaxDepth) {
        throw InvalidArgument("truncation depth K must lie in [1, 64], got " +
                              std::to_string(depth));
    }
}

}  // namespace

PAdicLabel::PAdicLabel(std::uint32_t p, std::vector<std::uint8_t> digits)
    : p_(p), digits_(std::move(digits)) {
    validate_base(p_);
    validate_depth(digits_.size());
    for (std::uint8_t d : digits_) {
        if (d >= p_) {
            throw InvalidArgument("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(p_));
        }
    }
}

PAdicLabel PAdicLabel::from_integer(std::uint64_t n, std::uint32_t p, std::size_t depth) {
    validate_base(p);
    validate_depth(depth);
    const auto capacity = checked_pow(p, static_cast<std::uint32_t>(depth));
    if (capacity && n >= *capacity) {
        throw OverflowDepth("integer " + std::to_string(n) + " needs more than " +
                            std::to_string(depth) + " base-" + std::to_string(p) + " digits");
    }
    std::vector<std::uint8_t> digits(depth, 0);
    for (std::size_t k = 0; k < depth && n != 0; ++k) {
        digits[k] = static_cast<std::uint8_t>(n % p);
        n /= p;
    }
    return PAdicLabel(p, std::move(digits));
}

PAdicLabel PAdicLabel::zero(std::uint32_t p, std::size_t depth) {
    return from_integer(0, p, depth);
}

std::uint64_t PAdicLabel::to_integer() const {
    std::uint64_t value = 0;
    for (std::size_t k = digits_.size(); k-- > 0;) {
        const std::uint64_t d = digits_[k];
        if (value > (UINT64_MAX - d) / p_) {
            throw OverflowDepth("label value does not fit in 64 bits");
        }
        value = value * p_ + d;
    }
    return value;
}

bool PAdicLabel::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d == 0; });
}

bool PAdicLabel::operator<(const PAdicLabel& other) const {
    if (p_ != other.p_) return p_ < other.p_;
    return digits_ < other.digits_;
}

std::uint32_t PNorm::valuation() const {
    if (is_zero()) throw InvalidArgument("zero norm has no finite valuation");
    return *valuation_;
}

double PNorm::value() const {
    if (is_zero()) return 0.0;
    double v = 1.0;
    for (std::uint32_t i = 0; i < *valuation_; ++i) v /= p_;
    return v;
}

std::string PNorm::denominator_string() const {
    if (is_zero()) return "1";
    // Small big-integer: decimal digits, most significant first.
    std::string dec = "1";
    for (std::uint32_t i = 0; i < *valuation_; ++i) {
        std::uint32_t carry = 0;
        for (std::size_t j = dec.size(); j-- > 0;) {
            const std::uint32_t prod = static_cast<std::uint32_t>(dec[j] - '0') * p_ + carry;
            dec[j] = static_cast<char>('0' + prod % 10);
            carry = prod / 10;
        }
        while (carry != 0) {
            dec.insert(dec.begin(), static_cast<char>('0' + carry % 10));
            carry /= 10;
        }
    }
    return dec;
}

std::optional<std::uint64_t> PNorm::denominator_u64() const {
    if (is_zero()) return 1;
    return checked_pow(p_, *valuation_);
}

namespace {

void require_comparable(const PNorm& a, const PNorm& b) {
    if (a.prime() != b.prime()) {
        throw MismatchedField("cannot compare norms over different primes");
    }
}

}  // namespace

bool PNorm::operator==(const PNorm& other) const {
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    if (*valuation_ == 0 && other.valuation() == 0) return true;  // both exactly 1
    require_comparable(*this, other);
    return *valuation_ == other.valuation();
}

bool PNorm::operator<(const PNorm& other) const {
    if (other.is_zero()) return false;
    if (is_zero()) return true;
    if (*valuation_ == 0 && other.valuation() == 0) return false;
    require_comparable(*this, other);
    return *valuation_ > other.valuation();  // larger valuation, smaller value
}

bool PNorm::operator<=(const PNorm& other) const {
    return *this < other || *this == other;
}

PNorm norm(const PAdicLabel& x) {
    const auto& digits = x.digits();
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] != 0) return PNorm::of_valuation(x.prime(), static_cast<std::uint32_t>(k));
    }
    return PNorm::zero(x.prime());
}

PNorm distance(const PAdicLabel& x, const PAdicLabel& y) {
    if (x.prime() != y.prime() || x.depth() != y.depth()) {
        throw MismatchedField("distance requires matching p and K");
    }
    for (std::size_t k = 0; k < x.depth(); ++k) {
        if (x.digit(k) != y.digit(k)) {
            return PNorm::of_valuation(x.prime(), static_cast<std::uint32_t>(k));
        }
    }
    return PNorm::zero(x.prime());
}

}  // namespace treeq
