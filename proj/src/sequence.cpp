#include "majorant/sequence.hpp"

#include <algorithm>
#include <functional>

namespace majorant {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("Sequence: " + what);
}

}  // namespace

Sequence Sequence::finite(std::vector<Rational> terms) {
    Sequence s;
    s.terms = std::move(terms);
    s.kind = SequenceKind::FinitelySupported;
    s.validate();
    return s;
}

Sequence Sequence::truncated(std::vector<Rational> terms, Rational tail_bound,
                             std::optional<Rational> tail_sum_bound, bool monotone,
                             std::optional<bool> infinite_support) {
    Sequence s;
    s.terms = std::move(terms);
    s.kind = SequenceKind::Truncated;
    s.tail_bound = std::move(tail_bound);
    s.tail_sum_bound = std::move(tail_sum_bound);
    s.monotone = monotone;
    s.infinite_support = infinite_support;
    s.validate();
    return s;
}

void Sequence::validate() const {
    for (const auto& t : terms) require(t.sign() >= 0, "negative term");
    if (tail_bound) require(tail_bound->sign() >= 0, "negative tail bound");
    if (tail_sum_bound) require(tail_sum_bound->sign() >= 0, "negative tail sum bound");
    if (monotone) {
        for (std::size_t i = 1; i < terms.size(); ++i)
            require(terms[i] <= terms[i - 1], "declared monotone but listed terms increase");
        if (kind == SequenceKind::Truncated && tail_bound && !terms.empty())
            require(*tail_bound <= terms.back(),
                    "declared monotone but tail bound exceeds last listed term");
    }
    if (kind == SequenceKind::Truncated && monotone && infinite_support.value_or(false)) {
        for (const auto& t : terms)
            require(t.sign() > 0, "declared monotone with infinite support but lists a zero");
    }
    if (kind == SequenceKind::FinitelySupported) {
        require(!tail_bound && !tail_sum_bound, "finitely supported input carries tail bounds");
        require(!infinite_support.value_or(false),
                "finitely supported input declared infinitely supported");
    }
}

Rational Sequence::listed_sum() const {
    Rational acc;
    for (const auto& t : terms) acc += t;
    return acc;
}

Sequence monotonize(const Sequence& s) {
    std::vector<Rational> sorted;
    sorted.reserve(s.terms.size());
    if (s.kind == SequenceKind::FinitelySupported) {
        sorted = s.terms;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        return Sequence::finite(std::move(sorted));
    }
    for (const auto& t : s.terms)
        if (t.sign() > 0) sorted.push_back(t);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Sequence out = s;
    out.terms = std::move(sorted);
    out.monotone = s.tail_bound && (out.terms.empty() || *s.tail_bound <= out.terms.back())
                       ? true
                       : s.monotone;
    out.validate();
    return out;
}

PartialSumTable partial_sums(const Sequence& s, std::size_t horizon) {
    if (horizon > s.terms.size())
        throw std::out_of_range("partial_sums: horizon " + std::to_string(horizon) +
                                " beyond listed length " + std::to_string(s.terms.size()));
    PartialSumTable table;
    table.sums.reserve(horizon);
    Rational acc;
    for (std::size_t i = 0; i < horizon; ++i) {
        acc += s.terms[i];
        table.sums.push_back(acc);
    }
    if (s.kind == SequenceKind::FinitelySupported) table.total = s.listed_sum();
    return table;
}

namespace {

enum class Tri { Yes, No, Unknown };

// Is term i (0-based) of s zero? Settled from listed data where possible,
// otherwise from the kind and support declarations.
Tri is_zero_at(const Sequence& s, std::size_t i) {
    if (i < s.terms.size()) return s.terms[i].is_zero() ? Tri::Yes : Tri::No;
    if (s.kind == SequenceKind::FinitelySupported) return Tri::Yes;
    if (s.monotone && s.infinite_support.value_or(false)) return Tri::No;
    if (s.monotone && !s.terms.empty() && s.terms.back().is_zero()) return Tri::Yes;
    return Tri::Unknown;
}

// Does s have infinitely many nonzero terms beyond every finite index?
Tri tail_infinitely_nonzero(const Sequence& s) {
    if (s.kind == SequenceKind::FinitelySupported) return Tri::No;
    if (s.infinite_support.has_value()) return *s.infinite_support ? Tri::Yes : Tri::No;
    if (s.monotone && !s.terms.empty() && s.terms.back().is_zero()) return Tri::No;
    return Tri::Unknown;
}

// Is s zero at every index beyond its listed prefix?
Tri tail_all_zero(const Sequence& s) {
    if (s.kind == SequenceKind::FinitelySupported) return Tri::Yes;
    if (s.tail_bound && s.tail_bound->is_zero()) return Tri::Yes;
    if (s.monotone && !s.terms.empty() && s.terms.back().is_zero()) return Tri::Yes;
    if (s.monotone && s.infinite_support.value_or(false)) return Tri::No;
    return Tri::Unknown;
}

}  // namespace

Cardinal zero_count_gap(const Sequence& a, const Sequence& b) {
    const std::size_t window = std::max(a.terms.size(), b.terms.size());

    std::uint64_t count = 0;
    for (std::size_t i = 0; i < window; ++i) {
        const Tri az = is_zero_at(a, i);
        const Tri bz = is_zero_at(b, i);
        if (az == Tri::No || bz == Tri::Yes) continue;  // settled: not in the difference
        if (az == Tri::Yes && bz == Tri::No) {
            ++count;
            continue;
        }
        throw UndecidableError("zero_count_gap: index " + std::to_string(i + 1) +
                               " undecidable without a support declaration");
    }

    // Tail beyond both prefixes.
    const Tri a_zero_tail = tail_all_zero(a);
    if (a_zero_tail == Tri::Yes) {
        // Every large index is a zero of a; the difference there is the nonzero set of b.
        const Tri b_nonzero = tail_infinitely_nonzero(b);
        if (b_nonzero == Tri::Yes) return Cardinal::infinite();
        if (b_nonzero == Tri::No && tail_all_zero(b) == Tri::Yes) return {count};
        if (b_nonzero == Tri::No)
            throw UndecidableError(
                "zero_count_gap: b's tail has finitely many nonzero terms at unknown indices");
        throw UndecidableError("zero_count_gap: b's tail support undeclared");
    }
    if (a.kind == SequenceKind::Truncated && a.monotone && a.infinite_support.value_or(false))
        return {count};  // a never vanishes, tail contributes nothing
    if (a_zero_tail == Tri::No && tail_infinitely_nonzero(a) == Tri::Yes &&
        !(a.monotone && a.infinite_support.value_or(false)))
        throw UndecidableError("zero_count_gap: a's tail may still contain zeros");
    throw UndecidableError("zero_count_gap: a's tail support undeclared");
}

Sequence ampliate2(const Sequence& s) {
    Sequence out = s;
    out.terms.clear();
    out.terms.reserve(2 * s.terms.size());
    for (const auto& t : s.terms) {
        out.terms.push_back(t);
        out.terms.push_back(t);
    }
    if (s.tail_sum_bound) out.tail_sum_bound = *s.tail_sum_bound * Rational(2);
    out.validate();
    return out;
}

std::size_t reliable_star_prefix(const Sequence& s) {
    const Sequence star = monotonize(s);
    if (s.kind == SequenceKind::FinitelySupported || s.monotone) return star.terms.size();
    if (!s.tail_bound) return 0;
    std::size_t n = 0;
    while (n < star.terms.size() && star.terms[n] >= *s.tail_bound) ++n;
    return n;
}

}  // namespace majorant
