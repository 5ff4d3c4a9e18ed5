#include "majorant/relations.hpp"

#include <algorithm>
#include <limits>

namespace majorant {

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

bool AnalyticCertificate::matches(const std::string& rel, const Cardinal& pp,
                                  const std::optional<Rational>& eps) const {
    if (relation != rel || !(p == pp)) return false;
    if (!epsilon.has_value()) return true;  // claim quantified over every epsilon
    return eps.has_value() && *eps == *epsilon;
}

namespace {

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// Monotonized window of a sequence together with what the listed data pins
// down exactly: psum(n) and value(n) are authoritative for n <= exact_n
// (everything, with saturation, in the finitely supported case).
struct StarView {
    bool fin = true;
    std::vector<Rational> values;
    std::vector<Rational> psums;
    std::size_t exact_n = 0;
    Rational listed_total;
    std::optional<Rational> total_upper;
    std::size_t support = 0;

    [[nodiscard]] Rational psum(std::size_t n) const {
        if (n == 0) return {};
        if (n <= psums.size()) return psums[n - 1];
        return listed_total;  // fin only: saturated
    }
    [[nodiscard]] bool psum_exact(std::size_t n) const { return fin || n <= exact_n; }
    [[nodiscard]] Rational value(std::size_t j) const {
        if (j <= values.size()) return values[j - 1];
        return {};  // fin only: zero tail
    }
    [[nodiscard]] bool value_exact(std::size_t j) const { return fin || j <= exact_n; }
};

StarView make_star(const Sequence& s, Verdict& v, const char* label) {
    const Sequence star = monotonize(s);
    StarView view;
    view.fin = s.kind == SequenceKind::FinitelySupported;
    view.values = star.terms;
    view.psums.reserve(star.terms.size());
    Rational acc;
    for (const auto& t : star.terms) {
        acc += t;
        view.psums.push_back(acc);
        if (t.sign() > 0) ++view.support;
    }
    view.exact_n = reliable_star_prefix(s);
    view.listed_total = s.listed_sum();
    if (view.fin)
        view.total_upper = view.listed_total;
    else if (s.tail_sum_bound)
        view.total_upper = view.listed_total + *s.tail_sum_bound;
    if (star.terms != s.terms)
        v.notes.push_back(std::string(label) + ": listed order differs from monotonized order");
    return view;
}

const AnalyticCertificate* pick_cert(const AnalyticCertificate* cert, const std::string& rel,
                                     const Cardinal& p, const std::optional<Rational>& eps) {
    if (cert && cert->matches(rel, p, eps)) return cert;
    return nullptr;
}

void note_cert(Verdict& v, const AnalyticCertificate& cert) {
    v.notes.push_back("certificate[" + cert.family + "]: " + cert.reason);
}

[[noreturn]] void contradiction(const AnalyticCertificate& cert, const std::string& what) {
    throw CertificateContradiction("certificate[" + cert.family + "] asserting " +
                                   to_string(cert.asserted) + " for " + cert.relation +
                                   " contradicted by window data: " + what);
}

struct ShiftScan {
    std::vector<Rational> trace;
    std::optional<std::size_t> first_violation;
    std::optional<std::size_t> last_violation;
    std::size_t scanned = 0;
    bool complete = false;  // scan provably covers every n
};

// Margins of eta-psum(n) [+ eps * eta-value(n+1)] - xi-psum(n+p) over the
// exactly decidable range. For finitely supported pairs the scan runs past
// the saturation point, after which the margin is constant, so the scan is
// complete.
ShiftScan scan_shift(const StarView& xiv, const StarView& etav, std::size_t p,
                     const Rational* eps, std::size_t horizon) {
    ShiftScan out;
    std::size_t limit;
    if (xiv.fin && etav.fin) {
        const std::size_t xi_sat = xiv.values.size() > p ? xiv.values.size() - p : 0;
        limit = std::max(etav.values.size(), xi_sat) + 1;
        out.complete = true;
    } else {
        std::size_t xi_lim = xiv.fin ? kNoLimit : (xiv.exact_n >= p ? xiv.exact_n - p : 0);
        std::size_t eta_lim = etav.fin ? kNoLimit : (eps ? (etav.exact_n > 0 ? etav.exact_n - 1 : 0)
                                                         : etav.exact_n);
        limit = std::min({xi_lim, eta_lim, horizon});
    }
    for (std::size_t n = 1; n <= limit; ++n) {
        Rational margin = etav.psum(n) - xiv.psum(n + p);
        if (eps) margin += *eps * etav.value(n + 1);
        if (n <= horizon) out.trace.push_back(margin);
        if (margin.sign() < 0) {
            if (!out.first_violation) out.first_violation = n;
            out.last_violation = n;
        }
    }
    out.scanned = limit;
    return out;
}

}  // namespace

Verdict majorize(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                 const AnalyticCertificate* cert) {
    Verdict v;
    v.params = {"majorize", Cardinal(0), std::nullopt, horizon};
    const StarView xiv = make_star(xi, v, "xi");
    const StarView etav = make_star(eta, v, "eta");
    cert = pick_cert(cert, "majorize", Cardinal(0), std::nullopt);

    const ShiftScan scan = scan_shift(xiv, etav, 0, nullptr, horizon);
    v.margin_trace = scan.trace;

    if (scan.first_violation) {
        if (cert && cert->asserted == Status::Holds)
            contradiction(*cert, "prefix inequality violated at n=" +
                                     std::to_string(*scan.first_violation));
        v.status = Status::Fails;
        v.witness = scan.first_violation;
        v.notes.push_back("prefix-sum inequality violated at n=" +
                          std::to_string(*scan.first_violation));
        return v;
    }

    // Total-sum equality.
    bool totals_equal_certain = false;
    if (xiv.fin && etav.fin) {
        if (xiv.listed_total == etav.listed_total) {
            totals_equal_certain = true;
        } else {
            if (cert && cert->asserted == Status::Holds) contradiction(*cert, "totals differ");
            v.status = Status::Fails;
            v.notes.push_back("total sums differ: " + xiv.listed_total.str() + " vs " +
                              etav.listed_total.str());
            return v;
        }
    } else {
        // Intervals [listed, listed + tail-sum-bound]; provably disjoint means Fails.
        const bool xi_above = etav.total_upper && xiv.listed_total > *etav.total_upper;
        const bool eta_above = xiv.total_upper && etav.listed_total > *xiv.total_upper;
        if (xi_above || eta_above) {
            if (cert && cert->asserted == Status::Holds)
                contradiction(*cert, "total-sum intervals are disjoint");
            v.status = Status::Fails;
            v.notes.push_back("total sums provably differ (tail-sum intervals disjoint)");
            return v;
        }
    }

    if (cert) {
        if (cert->asserted == Status::Holds) {
            v.status = Status::Holds;
            note_cert(v, *cert);
            return v;
        }
        if (cert->asserted == Status::Fails) {
            v.status = Status::Fails;
            note_cert(v, *cert);
            return v;
        }
    }

    if (scan.complete && totals_equal_certain) {
        v.status = Status::Holds;
        return v;
    }
    v.status = Status::Unknown;
    v.witness = horizon;
    v.notes.push_back(totals_equal_certain ? "tail prefixes uncertified beyond horizon"
                                           : "total-sum equality uncertified from tail bounds");
    return v;
}

Verdict strong_majorize(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                        const AnalyticCertificate* cert) {
    cert = pick_cert(cert, "strong-majorize", Cardinal(0), std::nullopt);
    if (xi.kind == SequenceKind::FinitelySupported &&
        eta.kind == SequenceKind::FinitelySupported) {
        Verdict v = majorize(xi, eta, horizon);
        v.params.relation = "strong-majorize";
        v.notes.push_back(
            "finitely supported: cumulative gap is eventually constant, so strong "
            "majorization coincides with majorization");
        return v;
    }

    Verdict v;
    v.params = {"strong-majorize", Cardinal(0), std::nullopt, horizon};
    const StarView xiv = make_star(xi, v, "xi");
    const StarView etav = make_star(eta, v, "eta");
    const ShiftScan scan = scan_shift(xiv, etav, 0, nullptr, horizon);
    v.margin_trace = scan.trace;

    if (scan.first_violation) {
        if (cert && cert->asserted == Status::Holds)
            contradiction(*cert, "prefix inequality violated");
        v.status = Status::Fails;
        v.witness = scan.first_violation;
        v.notes.push_back("prefix-sum inequality violated at n=" +
                          std::to_string(*scan.first_violation));
        return v;
    }

    if (!scan.trace.empty()) {
        std::size_t min_at = 0;
        Rational min_gap = scan.trace[0];
        Rational tail_min;
        bool tail_min_set = false;
        for (std::size_t i = 0; i < scan.trace.size(); ++i) {
            if (scan.trace[i] < min_gap) {
                min_gap = scan.trace[i];
                min_at = i;
            }
            if (i >= scan.trace.size() / 2 && (!tail_min_set || scan.trace[i] < tail_min)) {
                tail_min = scan.trace[i];
                tail_min_set = true;
            }
        }
        v.notes.push_back("min cumulative gap " + min_gap.str() + " at n=" +
                          std::to_string(min_at + 1));
        if (cert && cert->asserted == Status::Fails) {
            if (!tail_min_set || tail_min.sign() <= 0)
                contradiction(*cert, "window gap not bounded away from zero");
            v.status = Status::Fails;
            note_cert(v, *cert);
            return v;
        }
        if (cert && cert->asserted == Status::Holds) {
            v.status = Status::Holds;
            note_cert(v, *cert);
            return v;
        }
        if (tail_min_set && tail_min.sign() > 0)
            v.notes.push_back("liminf>0 evidence: cumulative gap >= " + tail_min.str() +
                              " over the tail half of the window");
    }
    v.status = Status::Unknown;
    v.witness = horizon;
    return v;
}

namespace {

Verdict p_majorize_finite(const Sequence& xi, const Sequence& eta, std::size_t p,
                          std::size_t horizon, const AnalyticCertificate* cert) {
    Verdict v;
    v.params = {"p-majorize", Cardinal(p), std::nullopt, horizon};
    const StarView xiv = make_star(xi, v, "xi");
    const StarView etav = make_star(eta, v, "eta");

    const Verdict base = majorize(xi, eta, horizon);
    if (base.fails()) {
        if (cert && cert->asserted == Status::Holds)
            contradiction(*cert, "base majorization fails");
        v.status = Status::Fails;
        v.witness = base.witness;
        v.margin_trace = base.margin_trace;
        v.notes.push_back("base majorization fails");
        return v;
    }

    const ShiftScan scan = scan_shift(xiv, etav, p, nullptr, horizon);
    v.margin_trace = scan.trace;

    if (scan.complete) {  // finitely supported pair: fully decidable
        v.status = Status::Holds;
        v.witness = scan.last_violation ? *scan.last_violation + 1 : 1;
        return v;
    }

    if (cert) {
        if (cert->asserted == Status::Fails) {
            if (!scan.first_violation) contradiction(*cert, "no violation in window");
            v.status = Status::Fails;
            v.witness = scan.first_violation;
            note_cert(v, *cert);
            return v;
        }
        if (cert->asserted == Status::Holds) {
            if (scan.last_violation && *scan.last_violation >= scan.scanned)
                contradiction(*cert, "violations persist to the window edge");
            v.status = Status::Holds;
            v.witness = scan.last_violation ? *scan.last_violation + 1 : 1;
            note_cert(v, *cert);
            return v;
        }
    }

    v.status = Status::Unknown;
    v.witness = horizon;
    if (scan.first_violation)
        v.notes.push_back("window violations from n=" + std::to_string(*scan.first_violation) +
                          "; eventual behaviour uncertified");
    else
        v.notes.push_back("window clean; tail uncertified");
    return v;
}

Verdict p_majorize_infinite(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                            const AnalyticCertificate* cert) {
    Verdict v;
    v.params = {"p-majorize", Cardinal::infinite(), std::nullopt, horizon};
    const StarView xiv = make_star(xi, v, "xi");
    const StarView etav = make_star(eta, v, "eta");

    const Verdict base = majorize(xi, eta, horizon);
    if (base.fails()) {
        if (cert && cert->asserted == Status::Holds)
            contradiction(*cert, "base majorization fails");
        v.status = Status::Fails;
        v.witness = base.witness;
        v.notes.push_back("base majorization fails");
        return v;
    }

    if (xiv.fin && etav.fin && base.holds()) {
        // Beyond eta's support every shifted prefix sum is bounded by the total.
        v.status = Status::Holds;
        v.witness = std::max<std::size_t>(etav.support, 1);
        v.notes.push_back("eta finitely supported: p-majorization holds for every p");
        return v;
    }

    const std::size_t p_bound = std::max<std::size_t>(1, std::min<std::size_t>(64, horizon / 4));
    std::optional<std::size_t> failing_p;
    for (std::size_t q = 1; q <= p_bound; ++q) {
        const Verdict at_q = p_majorize_finite(xi, eta, q, horizon, nullptr);
        if (at_q.fails()) {
            failing_p = q;
            break;
        }
    }
    if (failing_p) {
        if (cert && cert->asserted == Status::Holds)
            contradiction(*cert, "finite p-majorization fails at p=" + std::to_string(*failing_p));
        v.status = Status::Fails;
        v.notes.push_back("p-majorization fails already at p=" + std::to_string(*failing_p));
        return v;
    }
    if (cert) {
        v.status = cert->asserted;
        v.witness = cert->witness;
        note_cert(v, *cert);
        return v;
    }
    v.status = Status::Unknown;
    v.witness = horizon;
    v.notes.push_back("checked p<=" + std::to_string(p_bound) +
                      "; infinite quantifier uncertified");
    return v;
}

}  // namespace

Verdict p_majorize(const Sequence& xi, const Sequence& eta, Cardinal p, std::size_t horizon,
                   const AnalyticCertificate* cert) {
    cert = pick_cert(cert, "p-majorize", p, std::nullopt);
    if (p.is_infinite()) return p_majorize_infinite(xi, eta, horizon, cert);
    return p_majorize_finite(xi, eta, static_cast<std::size_t>(p.value()), horizon, cert);
}

Verdict approx_p_majorize(const Sequence& xi, const Sequence& eta, Cardinal p,
                          const Rational& epsilon, std::size_t horizon,
                          const AnalyticCertificate* cert) {
    if (epsilon.sign() <= 0) throw std::invalid_argument("approx_p_majorize: epsilon must be > 0");
    cert = pick_cert(cert, "approx-p-majorize", p, epsilon);

    if (p.is_infinite()) {
        // Approximate infinity-majorization coincides with infinity-majorization,
        // so a certificate for one settles the other.
        AnalyticCertificate translated;
        const AnalyticCertificate* inner = nullptr;
        if (cert) {
            translated = *cert;
            translated.relation = "p-majorize";
            translated.epsilon = std::nullopt;
            inner = &translated;
        }
        Verdict v = p_majorize(xi, eta, Cardinal::infinite(), horizon, inner);
        v.params.relation = "approx-p-majorize";
        v.params.epsilon = epsilon;
        v.notes.push_back("approximate infinity-majorization evaluated as infinity-majorization");
        return v;
    }

    const std::size_t pf = static_cast<std::size_t>(p.value());
    Verdict v;
    v.params = {"approx-p-majorize", p, epsilon, horizon};
    const StarView xiv = make_star(xi, v, "xi");
    const StarView etav = make_star(eta, v, "eta");

    const Verdict base = majorize(xi, eta, horizon);
    if (base.fails()) {
        if (cert && cert->asserted == Status::Holds)
            contradiction(*cert, "base majorization fails");
        v.status = Status::Fails;
        v.witness = base.witness;
        v.notes.push_back("base majorization fails");
        return v;
    }

    const ShiftScan scan = scan_shift(xiv, etav, pf, &epsilon, horizon);
    v.margin_trace = scan.trace;

    if (scan.complete) {
        v.status = Status::Holds;
        v.witness = scan.last_violation ? *scan.last_violation + 1 : 1;
        return v;
    }
    if (cert) {
        if (cert->asserted == Status::Holds) {
            if (scan.last_violation && *scan.last_violation >= scan.scanned)
                contradiction(*cert, "violations persist to the window edge");
            v.status = Status::Holds;
            v.witness = scan.last_violation ? *scan.last_violation + 1 : 1;
            note_cert(v, *cert);
            return v;
        }
        if (cert->asserted == Status::Fails) {
            if (!scan.first_violation) contradiction(*cert, "no violation in window");
            v.status = Status::Fails;
            v.witness = scan.first_violation;
            note_cert(v, *cert);
            return v;
        }
    }
    v.status = Status::Unknown;
    v.witness = horizon;
    v.notes.push_back(scan.first_violation
                          ? "window violations from n=" + std::to_string(*scan.first_violation) +
                                "; eventual behaviour uncertified"
                          : "window clean; tail uncertified");
    return v;
}

std::vector<std::pair<Rational, Verdict>> approx_p_curve(const Sequence& xi, const Sequence& eta,
                                                         Cardinal p,
                                                         std::span<const Rational> epsilons,
                                                         std::size_t horizon,
                                                         const AnalyticCertificate* cert) {
    std::vector<std::pair<Rational, Verdict>> curve;
    curve.reserve(epsilons.size());
    for (const auto& eps : epsilons)
        curve.emplace_back(eps, approx_p_majorize(xi, eta, p, eps, horizon, cert));
    return curve;
}

namespace {

const AnalyticCertificate* find_cert(std::span<const AnalyticCertificate> certs,
                                     const std::string& rel, const Cardinal& p,
                                     const std::optional<Rational>& eps) {
    for (const auto& c : certs)
        if (c.matches(rel, p, eps)) return &c;
    return nullptr;
}

}  // namespace

HierarchyReport hierarchy_check(const Sequence& xi, const Sequence& eta, std::size_t horizon,
                                std::span<const AnalyticCertificate> certs,
                                const HierarchyOptions& options) {
    HierarchyReport report;
    const std::size_t pmax = options.p_max;
    const Rational eps = options.epsilon;

    const Verdict maj = majorize(xi, eta, horizon, find_cert(certs, "majorize", 0, {}));
    const Verdict strong =
        strong_majorize(xi, eta, horizon, find_cert(certs, "strong-majorize", 0, {}));
    std::vector<Verdict> pmaj, amaj;
    for (std::size_t q = 0; q <= pmax; ++q)
        pmaj.push_back(p_majorize(xi, eta, q, horizon, find_cert(certs, "p-majorize", q, {})));
    const Verdict pinf = p_majorize(xi, eta, Cardinal::infinite(), horizon,
                                    find_cert(certs, "p-majorize", Cardinal::infinite(), {}));
    for (std::size_t q = 0; q <= pmax; ++q)
        amaj.push_back(approx_p_majorize(xi, eta, q, eps, horizon,
                                         find_cert(certs, "approx-p-majorize", q, eps)));
    const Verdict ainf =
        approx_p_majorize(xi, eta, Cardinal::infinite(), eps, horizon,
                          find_cert(certs, "approx-p-majorize", Cardinal::infinite(), eps));

    report.verdicts.emplace_back("majorize", maj);
    report.verdicts.emplace_back("strong-majorize", strong);
    for (std::size_t q = 0; q <= pmax; ++q)
        report.verdicts.emplace_back("p-majorize(" + std::to_string(q) + ")", pmaj[q]);
    report.verdicts.emplace_back("p-majorize(inf)", pinf);
    for (std::size_t q = 0; q <= pmax; ++q)
        report.verdicts.emplace_back("approx-p-majorize(" + std::to_string(q) + ")", amaj[q]);
    report.verdicts.emplace_back("approx-p-majorize(inf)", ainf);

    const auto edge = [&](const std::string& name, const Verdict& from, Status expect_from,
                          const Verdict& to, Status expect_to, const std::string& detail = "") {
        HierarchyEdge e;
        e.name = name;
        e.antecedent = from.status;
        e.consequent = to.status;
        e.detail = detail;
        if (from.status != expect_from || to.status == Status::Unknown) {
            e.outcome = EdgeOutcome::Skipped;
        } else if (to.status == expect_to) {
            e.outcome = EdgeOutcome::Confirmed;
        } else {
            e.outcome = EdgeOutcome::Violated;
            report.any_violation = true;
        }
        report.edges.push_back(e);
    };

    // p-monotonicity including the witness ordering N_{p'} <= N_p.
    for (std::size_t hi = 1; hi <= pmax; ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) {
            const std::string name =
                "p-maj(" + std::to_string(hi) + ") => p-maj(" + std::to_string(lo) + ")";
            edge(name, pmaj[hi], Status::Holds, pmaj[lo], Status::Holds);
            if (pmaj[hi].holds() && pmaj[lo].holds() && pmaj[hi].witness && pmaj[lo].witness &&
                *pmaj[lo].witness > *pmaj[hi].witness) {
                report.edges.back().outcome = EdgeOutcome::Violated;
                report.edges.back().detail = "witness ordering violated";
                report.any_violation = true;
            }
        }
    }
    for (std::size_t q = 0; q <= pmax; ++q)
        edge("inf-maj => p-maj(" + std::to_string(q) + ")", pinf, Status::Holds, pmaj[q],
             Status::Holds);
    for (std::size_t q = 1; q <= pmax; ++q)
        edge("app-p-maj(" + std::to_string(q) + ") => p-maj(" + std::to_string(q - 1) + ")",
             amaj[q], Status::Holds, pmaj[q - 1], Status::Holds, "epsilon<1 downgrade");
    for (std::size_t q = 0; q <= pmax; ++q)
        edge("p-maj(" + std::to_string(q) + ") => app-p-maj(" + std::to_string(q) + ")", pmaj[q],
             Status::Holds, amaj[q], Status::Holds);
    edge("inf-maj => app-inf-maj", pinf, Status::Holds, ainf, Status::Holds);
    edge("app-inf-maj => inf-maj", ainf, Status::Holds, pinf, Status::Holds);

    // Compound antecedent: majorized but not strongly majorized.
    Verdict compound;
    compound.status = (maj.unknown() || strong.unknown()) ? Status::Unknown
                      : (maj.holds() && strong.fails())   ? Status::Holds
                                                          : Status::Fails;
    edge("maj && !strong-maj => inf-maj", compound, Status::Holds, pinf, Status::Holds,
         "positive liminf forces every finite p");

    return report;
}

}  // namespace majorant
