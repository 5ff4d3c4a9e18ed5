#pragma once

#include "majorant/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace majorant {

/// Raised when finite data cannot decide a question (missing tail bounds,
/// missing support declarations). Callers map it to an Unknown outcome.
class UndecidableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A nonnegative count that may be infinite. Used for kernel dimensions,
/// zero-set differences and the p parameter of the shifted relations.
class Cardinal {
public:
    constexpr Cardinal() = default;
    constexpr Cardinal(std::uint64_t v) : value_(v) {}  // NOLINT: implicit, reads like an integer
    static constexpr Cardinal infinite() {
        Cardinal c;
        c.infinite_ = true;
        return c;
    }

    [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
    [[nodiscard]] constexpr std::uint64_t value() const {
        return infinite_ ? UINT64_MAX : value_;
    }

    friend constexpr bool operator==(const Cardinal& a, const Cardinal& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(const Cardinal& a, const Cardinal& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(const Cardinal& a, const Cardinal& b) { return a == b || a < b; }

    friend constexpr Cardinal operator+(const Cardinal& a, const Cardinal& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return {a.value_ + b.value_};
    }
    friend constexpr Cardinal min(const Cardinal& a, const Cardinal& b) { return a < b ? a : b; }

    [[nodiscard]] std::string str() const {
        return infinite_ ? "inf" : std::to_string(value_);
    }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

enum class SequenceKind { FinitelySupported, Truncated };

/// A nonnegative sequence. FinitelySupported lists every nonzero term
/// (unlisted terms are exactly zero). Truncated lists a prefix of an
/// infinite sequence; what is known about the unlisted tail is carried
/// explicitly:
///   tail_bound      — every unlisted term <= tail_bound
///   tail_sum_bound  — the sum of all unlisted terms <= tail_sum_bound
///                     (absent when the tail is not known summable)
///   monotone        — the full sequence is nonincreasing
///   infinite_support — the full sequence has infinitely many nonzero terms
struct Sequence {
    std::vector<Rational> terms;
    SequenceKind kind = SequenceKind::FinitelySupported;
    std::optional<Rational> tail_bound;
    std::optional<Rational> tail_sum_bound;
    bool monotone = false;
    std::optional<bool> infinite_support;

    static Sequence finite(std::vector<Rational> terms);
    static Sequence truncated(std::vector<Rational> terms, Rational tail_bound,
                              std::optional<Rational> tail_sum_bound, bool monotone,
                              std::optional<bool> infinite_support = std::nullopt);

    [[nodiscard]] std::size_t size() const { return terms.size(); }

    /// Throws std::invalid_argument on a violated invariant (negative term,
    /// tail bound above the last listed term of a declared-monotone prefix, ...).
    void validate() const;

    /// Sum of the listed terms.
    [[nodiscard]] Rational listed_sum() const;
};

struct PartialSumTable {
    std::vector<Rational> sums;       // sums[k-1] = sum of the first k terms
    std::optional<Rational> total;    // present only when the full sum is exact
};

/// Decreasing rearrangement. Finitely supported input keeps its zeros at the
/// end; a truncated prefix drops listed zeros and rearranges the support,
/// since the monotonization of an infinitely supported sequence reflects
/// neither its zeros nor their multiplicity.
Sequence monotonize(const Sequence& s);

/// Exact prefix sums of the listed terms up to `horizon` (1-based count).
/// Throws std::out_of_range when horizon exceeds the listed data.
PartialSumTable partial_sums(const Sequence& s, std::size_t horizon);

/// |a^{-1}(0) \ b^{-1}(0)|: indices where a vanishes and b does not, counting
/// the cofinite all-zero tail of finitely supported sequences. Throws
/// UndecidableError when truncated inputs lack the support declarations
/// needed to settle the tail.
Cardinal zero_count_gap(const Sequence& a, const Sequence& b);

/// The 2-ampliation: every term duplicated in place, kind preserved.
Sequence ampliate2(const Sequence& s);

/// Length of the leading block of the decreasing rearrangement that is
/// pinned down by the listed data alone. For finitely supported input this
/// is the whole (infinite) sequence, reported as terms.size(); for a
/// truncated prefix it is the number of monotonized entries that no
/// unlisted tail term can displace.
std::size_t reliable_star_prefix(const Sequence& s);

}  // namespace majorant
