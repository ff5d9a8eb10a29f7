#include "beurling/meanslab.hpp"

#include "beurling/errors.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace beurling {

Rational tolerance_geometric(std::int64_t k)
{
    return Rational(BigInt(1), pow2(static_cast<unsigned long>(std::max<std::int64_t>(k, 0))));
}

Rational tolerance_harmonic(std::int64_t k) { return Rational(BigInt(1), BigInt(static_cast<long>(k + 1))); }

Rational tolerance_quadratic(std::int64_t k)
{
    const BigInt d = static_cast<long>(k + 1);
    return Rational(BigInt(1), d * d);
}

ToleranceSchedule default_tolerance(const WeightFn &weight)
{
    if (weight.kind() == WeightFn::Kind::trivial) {
        return tolerance_geometric;
    }
    return tolerance_quadratic;
}

std::string default_tolerance_name(const WeightFn &weight)
{
    return weight.kind() == WeightFn::Kind::trivial ? "2^-k" : "1/(k+1)^2";
}

namespace {

ExpSum omega(const WeightFn &weight, const BigInt &n) { return ExpSum(weight.eval(n)); }

ExpSum abs_certified(const ExpSum &value, const CertifyPolicy &policy)
{
    switch (certified_sign(value, policy)) {
    case Sign::negative:
        return -value;
    case Sign::inconclusive:
        throw Inconclusive("sign of " + value.to_string() + " is undecided");
    case Sign::zero:
    case Sign::positive:
        break;
    }
    return value;
}

bool certainly_positive(const ExpSum &value, const CertifyPolicy &policy)
{
    const Sign sign = certified_sign(value, policy);
    if (sign == Sign::inconclusive) {
        throw Inconclusive("sign of " + value.to_string() + " is undecided");
    }
    return sign == Sign::positive;
}

double approximate(const ExpRatio &ratio)
{
    return ratio.num.enclose(64).upper_double() / ratio.den.enclose(64).lower_double();
}

} // namespace

// ---------------------------------------------------------------------------
// Cesaro state

CesaroState::CesaroState(WeightFn weight, ToleranceSchedule tolerance, BigInt search_bound,
                         std::string tolerance_name)
    : weight_(std::move(weight)), tolerance_(std::move(tolerance)), search_bound_(std::move(search_bound)),
      tolerance_name_(std::move(tolerance_name))
{
    const auto rho = weight_.known_radius();
    if (!rho || !(*rho == ExactExpValue::one())) {
        throw InvalidArgument("weight " + weight_.name() +
                              " does not have rho = 1; apply radius_normalize with its radius first");
    }
    nk_ = {BigInt(0), BigInt(1)};
    ck_ = {omega(weight_, 0), omega(weight_, 0) + omega(weight_, 1)};
    scan_n_ = 1;
    scan_c_ = ck_.back();
}

void CesaroState::extend_to(std::size_t k)
{
    while (last_index() < k) {
        const auto index = static_cast<std::int64_t>(last_index() + 1);
        const Rational tol = tolerance_(index);
        if (tol <= 0) {
            throw InvalidArgument("tolerance must be positive");
        }
        if (weight_.kind() == WeightFn::Kind::trivial) {
            // 1/(n+1) <= tol  iff  n + 1 >= 1/tol
            const BigInt need = (tol.get_den() + tol.get_num() - 1) / tol.get_num() - 1;
            const BigInt n = std::max<BigInt>(nk_.back() + 1, need);
            if (n > search_bound_) {
                throw SearchExhausted("no n_" + std::to_string(index) + " <= " + search_bound_.get_str() +
                                      "; need n >= " + need.get_str());
            }
            nk_.push_back(n);
            ck_.emplace_back(Rational(n + 1));
            scan_n_ = n;
            scan_c_ = ck_.back();
            continue;
        }
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        while (scan_n_ < search_bound_) {
            ++scan_n_;
            const ExpSum w = omega(weight_, scan_n_);
            scan_c_ += w;
            const Sign sign = certified_sign(scan_c_ * tol - w);
            if (sign == Sign::inconclusive) {
                throw Inconclusive("ratio test at n = " + scan_n_.get_str() + " is undecided");
            }
            if (sign != Sign::negative) {
                found = true;
                break;
            }
            best = std::min(best, approximate({w, scan_c_}));
        }
        if (!found) {
            throw SearchExhausted("no n_" + std::to_string(index) + " <= " + search_bound_.get_str() +
                                  " with ratio <= " + beurling::to_string(tol) + "; best ratio ~" +
                                  std::to_string(best));
        }
        nk_.push_back(scan_n_);
        ck_.push_back(scan_c_);
    }
}

ExpRatio CesaroState::ratio(std::size_t k) const { return {omega(weight_, nk_.at(k)), ck_.at(k)}; }

ExpRatio CesaroState::mean_of_one(std::size_t k) const { return {ExpSum(Rational(nk_.at(k) + 1)), ck_.at(k)}; }

std::optional<std::size_t> CesaroState::first_ratio_increase(const CertifyPolicy &policy) const
{
    for (std::size_t k = 1; k <= last_index(); ++k) {
        const ExpRatio a = ratio(k - 1);
        const ExpRatio b = ratio(k);
        if (certified_sign(b.num * a.den - a.num * b.den, policy) == Sign::positive) {
            return k;
        }
    }
    return std::nullopt;
}

CesaroState build_nk(const WeightFn &weight, std::size_t K, const ToleranceSchedule &tolerance,
                     const BigInt &search_bound, const std::string &tolerance_name)
{
    CesaroState state(weight, tolerance, search_bound, tolerance_name);
    state.extend_to(K);
    return state;
}

// ---------------------------------------------------------------------------
// window functions

const char *to_string(WindowBlock::Kind kind)
{
    switch (kind) {
    case WindowBlock::Kind::zero:
        return "zero";
    case WindowBlock::Kind::weight:
        return "weight";
    case WindowBlock::Kind::constant:
        return "value";
    }
    return "zero";
}

bool operator==(const WindowFn &a, const WindowFn &b)
{
    if (a.blocks_.size() != b.blocks_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
        const auto &x = a.blocks_[i];
        const auto &y = b.blocks_[i];
        if (x.lo != y.lo || x.hi != y.hi || x.kind != y.kind || !(x.value == y.value)) {
            return false;
        }
    }
    return true;
}

WindowFn WindowFn::of_weight(const BigInt &lo, const BigInt &hi)
{
    WindowFn f;
    f.append({lo, hi, WindowBlock::Kind::weight, {}});
    return f;
}

WindowFn WindowFn::constant(const BigInt &lo, const BigInt &hi, const ExpSum &value)
{
    WindowFn f;
    f.append({lo, hi, WindowBlock::Kind::constant, value});
    return f;
}

void WindowFn::append(WindowBlock block)
{
    if (block.lo > block.hi) {
        throw InvalidArgument("empty window block");
    }
    if (!blocks_.empty() && block.lo <= blocks_.back().hi) {
        throw InvalidArgument("window blocks must be appended in increasing order");
    }
    blocks_.push_back(std::move(block));
}

void WindowFn::set_point(const BigInt &i, const ExpSum &value)
{
    WindowBlock point{i, i, WindowBlock::Kind::constant, value};
    auto it = std::find_if(blocks_.begin(), blocks_.end(), [&](const WindowBlock &b) { return b.hi >= i; });
    if (it == blocks_.end() || it->lo > i) {
        blocks_.insert(it, std::move(point));
        return;
    }
    std::vector<WindowBlock> replacement;
    if (it->lo < i) {
        WindowBlock left = *it;
        left.hi = i - 1;
        replacement.push_back(std::move(left));
    }
    replacement.push_back(std::move(point));
    if (it->hi > i) {
        WindowBlock right = *it;
        right.lo = i + 1;
        replacement.push_back(std::move(right));
    }
    it = blocks_.erase(it);
    blocks_.insert(it, replacement.begin(), replacement.end());
}

ExpSum WindowFn::at(const BigInt &i, const WeightFn &weight) const
{
    for (const WindowBlock &b : blocks_) {
        if (b.lo <= i && i <= b.hi) {
            switch (b.kind) {
            case WindowBlock::Kind::zero:
                return {};
            case WindowBlock::Kind::weight:
                return omega(weight, i);
            case WindowBlock::Kind::constant:
                return b.value;
            }
        }
    }
    return {};
}

ExpSum WindowFn::sum(const BigInt &a, const BigInt &b, const WeightFn &weight) const
{
    ExpSum total;
    for (const WindowBlock &block : blocks_) {
        const BigInt lo = std::max(block.lo, a);
        const BigInt hi = std::min(block.hi, b);
        if (lo > hi) {
            continue;
        }
        switch (block.kind) {
        case WindowBlock::Kind::zero:
            break;
        case WindowBlock::Kind::weight:
            total += weight.range_sum(lo, hi);
            break;
        case WindowBlock::Kind::constant:
            total += block.value * Rational(hi - lo + 1);
            break;
        }
    }
    return total;
}

ExpRatio pair_cesaro(const CesaroState &state, std::size_t k, const WindowFn &f)
{
    return {f.sum(0, state.nk().at(k), state.weight()), state.Ck().at(k)};
}

ExpRatio pair_cesaro(const CesaroState &state, std::size_t k, const std::function<ExpSum(const BigInt &)> &f)
{
    ExpSum total;
    for (BigInt i = 0; i <= state.nk().at(k); ++i) {
        total += f(i);
    }
    return {total, state.Ck().at(k)};
}

// ---------------------------------------------------------------------------
// psi

namespace {

PsiCertificate build_psi_impl(const CesaroState &state, std::size_t J,
                              const std::function<bool(std::size_t)> &ensure, const CertifyPolicy &policy)
{
    if (J < 1) {
        throw InvalidArgument("J must be at least 1");
    }
    const auto &n = state.nk();
    const auto &C = state.Ck();
    PsiCertificate cert;
    cert.weight = state.weight().name();
    cert.tolerance = state.tolerance_name();

    cert.sj.push_back(0);
    cert.tj.push_back(1);
    cert.psi.append({BigInt(1), BigInt(1), WindowBlock::Kind::constant, C[1]});
    ExpSum running = C[1]; // sum of psi over [0, n_{t_k}]
    cert.pairings_s.push_back({ExpSum(), C[0]});
    cert.pairings_t.push_back({running, C[1]});

    for (std::size_t level = 2; level <= J; ++level) {
        const std::size_t t = cert.tj.back();
        const ExpSum bound_s = abs_certified(running, policy) * Rational(4);
        std::size_t s = t + 1;
        for (;; ++s) {
            if (!ensure(s)) {
                throw StateTooShort("state ends at index " + std::to_string(state.last_index()) +
                                    " before s_" + std::to_string(level) + " was found");
            }
            if (certainly_positive(C[s] - bound_s, policy)) {
                break;
            }
        }
        cert.psi.append({n[t] + 1, n[s], WindowBlock::Kind::zero, {}});
        cert.sj.push_back(s);
        cert.pairings_s.push_back({running, C[s]});

        const ExpSum bound_t = C[s] * Rational(8);
        std::size_t next = s + 1;
        for (;; ++next) {
            if (!ensure(next)) {
                throw StateTooShort("state ends at index " + std::to_string(state.last_index()) +
                                    " before t_" + std::to_string(level) + " was found");
            }
            if (certainly_positive(C[next] - bound_t, policy)) {
                break;
            }
        }
        cert.psi.append({n[s] + 1, n[next], WindowBlock::Kind::weight, {}});
        running += C[next] - C[s];
        cert.tj.push_back(next);
        cert.pairings_t.push_back({running, C[next]});
    }
    const std::size_t last = cert.tj.back();
    cert.nk.assign(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(last + 1));
    cert.Ck.assign(C.begin(), C.begin() + static_cast<std::ptrdiff_t>(last + 1));
    return cert;
}

} // namespace

PsiCertificate build_psi(const CesaroState &state, std::size_t J, const CertifyPolicy &policy)
{
    return build_psi_impl(
        state, J, [&](std::size_t index) { return index <= state.last_index(); }, policy);
}

PsiCertificate build_psi_extending(CesaroState &state, std::size_t J, std::size_t max_index,
                                   const CertifyPolicy &policy)
{
    return build_psi_impl(
        state, J,
        [&](std::size_t index) {
            if (index > max_index) {
                return false;
            }
            state.extend_to(index);
            return true;
        },
        policy);
}

// ---------------------------------------------------------------------------
// verification

bool PsiVerification::all_verified() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckEntry &c) { return c.status == CheckStatus::verified; });
}

namespace {

constexpr std::int64_t max_pointwise_block = 1'000'000;

CheckEntry structural(std::string name, bool ok)
{
    return {std::move(name), ok ? CheckStatus::verified : CheckStatus::failed, "", ""};
}

bool same_ratio(const ExpRatio &a, const ExpRatio &b) { return a.num * b.den == b.num * a.den; }

// |N|/D < q (wanted negative) or > q (wanted positive).
CheckEntry pairing_check(std::string name, const ExpRatio &ratio, const Rational &q, Sign wanted,
                         const CertifyPolicy &policy)
{
    CheckEntry entry;
    entry.name = std::move(name);
    entry.value = ratio.to_string();
    const Sign numerator_sign = certified_sign(ratio.num, policy);
    if (numerator_sign == Sign::inconclusive) {
        entry.status = CheckStatus::inconclusive;
        return entry;
    }
    const ExpSum magnitude = numerator_sign == Sign::negative ? -ratio.num : ratio.num;
    const ExpSum gap = wanted == Sign::negative ? ratio.den * q - magnitude : magnitude - ratio.den * q;
    entry.margin = ExpRatio{gap, ratio.den}.to_string();
    entry.status = status_from_sign(certified_sign(gap, policy), Sign::positive);
    return entry;
}

CheckEntry bound_check(const WindowBlock &block, const WeightFn &weight, const CertifyPolicy &policy)
{
    CheckEntry entry;
    entry.name = block.lo == block.hi ? "psi bound at i=" + block.lo.get_str()
                                      : "psi bound on [" + block.lo.get_str() + ", " + block.hi.get_str() + "]";
    entry.value = to_string(block.kind);
    if (block.lo <= 0) {
        // psi vanishes for i <= 0
        const bool zero = block.kind == WindowBlock::Kind::zero ||
                          (block.kind == WindowBlock::Kind::constant && block.value.is_zero());
        if (!zero) {
            entry.status = CheckStatus::failed;
            entry.margin = "nonzero at i <= 0";
            return entry;
        }
    }
    switch (block.kind) {
    case WindowBlock::Kind::zero:
        entry.margin = "0 <= 0 <= omega+1";
        return entry;
    case WindowBlock::Kind::weight:
        entry.margin = "0 < omega <= omega+1";
        return entry;
    case WindowBlock::Kind::constant:
        break;
    }
    entry.value = block.value.to_string();
    const Sign lower = certified_sign(block.value, policy);
    if (lower == Sign::inconclusive) {
        entry.status = CheckStatus::inconclusive;
        return entry;
    }
    if (lower == Sign::negative) {
        entry.status = CheckStatus::failed;
        entry.margin = block.value.to_string();
        return entry;
    }
    if (weight.kind() != WeightFn::Kind::trivial && block.hi - block.lo + 1 > max_pointwise_block) {
        entry.status = CheckStatus::budget_exceeded;
        return entry;
    }
    const BigInt last = weight.kind() == WeightFn::Kind::trivial ? block.lo : block.hi;
    std::optional<ExpSum> tightest;
    for (BigInt i = block.lo; i <= last; ++i) {
        const ExpSum slack = omega(weight, i) + ExpSum(Rational(1)) - block.value;
        const Sign sign = certified_sign(slack, policy);
        if (sign == Sign::inconclusive) {
            entry.status = CheckStatus::inconclusive;
            return entry;
        }
        if (sign == Sign::negative) {
            entry.status = CheckStatus::failed;
            entry.margin = slack.to_string();
            return entry;
        }
        if (!tightest) {
            tightest = slack;
        }
    }
    entry.margin = tightest ? tightest->to_string() : "";
    return entry;
}

} // namespace

PsiVerification verify_psi(const PsiCertificate &cert, const WeightFn &weight, const CertifyPolicy &policy)
{
    PsiVerification report;
    auto &checks = report.checks;

    const std::size_t J = cert.tj.size();
    bool shape = J >= 1 && cert.sj.size() == J && cert.pairings_s.size() == J && cert.pairings_t.size() == J &&
                 cert.nk.size() == cert.Ck.size() && cert.nk.size() >= 2 && cert.tj.back() < cert.nk.size();
    checks.push_back(structural("certificate shape", shape));
    if (!shape) {
        return report;
    }
    bool order = true;
    std::size_t previous = 0;
    for (std::size_t j = 0; j < J; ++j) {
        order = order && (j == 0 || cert.sj[j] > previous) && cert.tj[j] > cert.sj[j];
        previous = cert.tj[j];
    }
    checks.push_back(structural("s_1 < t_1 < ... < s_J < t_J", order));
    bool increasing = cert.nk[0] == 0 && cert.nk[1] == 1;
    for (std::size_t k = 1; k < cert.nk.size(); ++k) {
        increasing = increasing && cert.nk[k] > cert.nk[k - 1];
    }
    checks.push_back(structural("n_0 = 0, n_1 = 1, n_k increasing", increasing));
    if (!order || !increasing) {
        return report;
    }

    // C_k from the weight, independent of the stored values.
    std::vector<ExpSum> C;
    C.push_back(weight.range_sum(0, cert.nk[0]));
    for (std::size_t k = 1; k < cert.nk.size(); ++k) {
        C.push_back(C.back() + weight.range_sum(cert.nk[k - 1] + 1, cert.nk[k]));
    }
    checks.push_back(structural("C_k recomputed (" + std::to_string(C.size()) + " values)", C == cert.Ck));

    const Rational quarter(1, 4);
    const Rational three_quarters(3, 4);
    std::vector<ExpRatio> ps, pt;
    bool stored = true;
    for (std::size_t j = 0; j < J; ++j) {
        const std::size_t s = cert.sj[j];
        const std::size_t t = cert.tj[j];
        const ExpRatio a{cert.psi.sum(0, cert.nk[s], weight), C[s]};
        const ExpRatio b{cert.psi.sum(0, cert.nk[t], weight), C[t]};
        stored = stored && same_ratio(a, cert.pairings_s[j]) && same_ratio(b, cert.pairings_t[j]);
        const std::string level = std::to_string(j + 1);
        checks.push_back(pairing_check("|<Lambda_s" + level + ", psi>| < 1/4", a, quarter, Sign::negative, policy));
        checks.push_back(
            pairing_check("|<Lambda_t" + level + ", psi>| > 3/4", b, three_quarters, Sign::positive, policy));
        ps.push_back(a);
        pt.push_back(b);
    }
    checks.push_back(structural("stored pairings match recomputation", stored));

    // min_j |<Lambda_t, psi>| - max_j |<Lambda_s, psi>| > 1/2
    CheckStatus gap = CheckStatus::verified;
    for (const ExpRatio &a : ps) {
        for (const ExpRatio &b : pt) {
            const ExpSum na = abs_certified(a.num, policy);
            const ExpSum nb = abs_certified(b.num, policy);
            const ExpSum diff = nb * a.den - na * b.den - a.den * b.den * Rational(1, 2);
            const CheckStatus st = status_from_sign(certified_sign(diff, policy), Sign::positive);
            if (st == CheckStatus::failed || (st == CheckStatus::inconclusive && gap == CheckStatus::verified)) {
                gap = st;
            }
        }
    }
    checks.push_back({"oscillation gap > 1/2", gap, "", ""});

    const BigInt window_end = cert.nk[cert.tj.back()];
    bool inside = true;
    for (const WindowBlock &block : cert.psi.blocks()) {
        inside = inside && block.hi <= window_end;
        checks.push_back(bound_check(block, weight, policy));
    }
    checks.push_back(structural("psi supported in [0, n_tJ]", inside));
    return report;
}

InvarianceDefect invariance_defect(const CesaroState &state, std::size_t k, const CertifyPolicy &policy)
{
    const WeightFn &w = state.weight();
    const BigInt &n = state.nk().at(k);
    const ExpSum &c = state.Ck().at(k);
    InvarianceDefect out;
    out.exact = {omega(w, n + 1) + omega(w, 0), c};
    out.coarse = {ExpSum(w.eval(1) * w.eval(n)) + omega(w, 0), c};
    out.exact_vs_coarse = certified_sign(out.exact.num - out.coarse.num, policy);
    return out;
}

} // namespace beurling
