#pragma once

#include "majorant/sequence.hpp"

#include <span>
#include <string>
#include <vector>

namespace majorant {

enum class Status { Holds, Fails, Unknown };

std::string to_string(Status s);

struct RelationParams {
    std::string relation;
    Cardinal p{0};
    std::optional<Rational> epsilon;
    std::size_t horizon = 0;
};

/// Outcome of a relation query. Fails always comes with a concrete violated
/// inequality reproducible from the inputs (witness = the violating prefix
/// length, absent only when the violation is the total-sum equality).
/// Holds on truncated inputs is issued only when tail bounds or an analytic
/// certificate settle every unlisted prefix.
struct Verdict {
    Status status = Status::Unknown;
    std::optional<std::size_t> witness;  // 1-based: N_p / N_{p,eps}, first violating n, or horizon
    std::vector<Rational> margin_trace;  // per-n slack of the defining inequality
    RelationParams params;
    std::vector<std::string> notes;

    [[nodiscard]] bool holds() const { return status == Status::Holds; }
    [[nodiscard]] bool fails() const { return status == Status::Fails; }
    [[nodiscard]] bool unknown() const { return status == Status::Unknown; }
};

/// A closed-form claim about a relation on a generated family, hard-coded by
/// the generator that emitted the pair. The relation procedures re-verify a
/// certificate against the listed window before trusting it for the tail;
/// a contradiction throws CertificateContradiction.
struct AnalyticCertificate {
    std::string family;
    std::string relation;
    Cardinal p{0};
    std::optional<Rational> epsilon;  // absent = claim holds for every epsilon > 0
    Status asserted = Status::Unknown;
    std::optional<std::size_t> witness;
    std::string reason;

    [[nodiscard]] bool matches(const std::string& rel, const Cardinal& pp,
                               const std::optional<Rational>& eps) const;
};

class CertificateContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// xi majorized by eta: prefix sums of the decreasing rearrangements dominate
/// and the totals agree.
Verdict majorize(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                 const AnalyticCertificate* cert = nullptr);

/// Prefix-sum domination plus vanishing liminf of the cumulative gap.
/// Decidable exactly on finitely supported input (where it coincides with
/// majorize); truncated input reports the windowed gap and stays Unknown
/// without an analytic liminf certificate.
Verdict strong_majorize(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                        const AnalyticCertificate* cert = nullptr);

/// Majorization plus eventual p-shifted domination: some N_p with
/// sum_{k<=n+p} xi* <= sum_{k<=n} eta* for all n >= N_p. p may be infinite,
/// in which case the finite p up to a horizon-derived bound are checked and
/// a certificate (or finite support) settles the rest.
Verdict p_majorize(const Sequence& xi, const Sequence& eta, Cardinal p, std::size_t horizon,
                   const AnalyticCertificate* cert = nullptr);

/// p-shifted domination with slack epsilon * eta*_{n+1}, for the given
/// epsilon. The for-every-epsilon quantifier is exposed through
/// approx_p_curve and through generator certificates.
Verdict approx_p_majorize(const Sequence& xi, const Sequence& eta, Cardinal p,
                          const Rational& epsilon, std::size_t horizon,
                          const AnalyticCertificate* cert = nullptr);

/// N_{p,eps} as a function of eps over a caller-supplied grid.
std::vector<std::pair<Rational, Verdict>> approx_p_curve(const Sequence& xi, const Sequence& eta,
                                                         Cardinal p,
                                                         std::span<const Rational> epsilons,
                                                         std::size_t horizon,
                                                         const AnalyticCertificate* cert = nullptr);

enum class EdgeOutcome { Confirmed, Skipped, Violated };

struct HierarchyEdge {
    std::string name;
    Status antecedent = Status::Unknown;
    Status consequent = Status::Unknown;
    EdgeOutcome outcome = EdgeOutcome::Skipped;
    std::string detail;
};

struct HierarchyReport {
    std::vector<std::pair<std::string, Verdict>> verdicts;
    std::vector<HierarchyEdge> edges;
    bool any_violation = false;
};

struct HierarchyOptions {
    std::size_t p_max = 4;
    Rational epsilon = Rational(1, 2);
};

/// Evaluates the whole relation family on (xi, eta) and asserts every
/// implication edge between them; a violated edge is a library bug.
HierarchyReport hierarchy_check(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                                std::span<const AnalyticCertificate> certs = {},
                                const HierarchyOptions& options = {});

}  // namespace majorant
