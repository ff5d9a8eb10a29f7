#pragma once

#include "beurling/expsum.hpp"
#include "beurling/status.hpp"
#include "beurling/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace beurling {

using ToleranceSchedule = std::function<Rational(std::int64_t)>;

// 2^{-k}
Rational tolerance_geometric(std::int64_t k);
// 1/(k+1)
Rational tolerance_harmonic(std::int64_t k);
// 1/(k+1)^2
Rational tolerance_quadratic(std::int64_t k);
// Geometric for the trivial weight, quadratic otherwise.
ToleranceSchedule default_tolerance(const WeightFn &weight);
std::string default_tolerance_name(const WeightFn &weight);

// n_0 = 0, n_1 = 1 and, for k >= 2, the least n_k > n_{k-1} with omega(n_k)/C_k <= tol(k),
// where C_k = omega(0) + ... + omega(n_k).
class CesaroState {
public:
    // Throws InvalidArgument unless rho_omega is known to be 1.
    CesaroState(WeightFn weight, ToleranceSchedule tolerance, BigInt search_bound,
                std::string tolerance_name = "custom");

    const WeightFn &weight() const { return weight_; }
    const std::vector<BigInt> &nk() const { return nk_; }
    const std::vector<ExpSum> &Ck() const { return ck_; }
    std::size_t last_index() const { return nk_.size() - 1; }
    const std::string &tolerance_name() const { return tolerance_name_; }
    const BigInt &search_bound() const { return search_bound_; }
    void set_search_bound(const BigInt &bound) { search_bound_ = bound; }

    // Appends indices up to k.  Throws SearchExhausted past the search bound.
    void extend_to(std::size_t k);

    Rational tolerance(std::int64_t k) const { return tolerance_(k); }
    // omega(n_k)/C_k
    ExpRatio ratio(std::size_t k) const;
    // (n_k + 1)/C_k, the value of Lambda_k on the constant 1.
    ExpRatio mean_of_one(std::size_t k) const;
    // First k with ratio(k) > ratio(k-1), if any.
    std::optional<std::size_t> first_ratio_increase(const CertifyPolicy &policy = {}) const;

private:
    WeightFn weight_;
    ToleranceSchedule tolerance_;
    BigInt search_bound_;
    std::string tolerance_name_;
    std::vector<BigInt> nk_;
    std::vector<ExpSum> ck_;
    BigInt scan_n_;
    ExpSum scan_c_;
};

CesaroState build_nk(const WeightFn &weight, std::size_t K, const ToleranceSchedule &tolerance,
                     const BigInt &search_bound, const std::string &tolerance_name = "custom");

// Piecewise function on Z: zero off the listed blocks; each block [lo, hi] is zero,
// the weight itself, or a constant.
struct WindowBlock {
    enum class Kind { zero, weight, constant };
    BigInt lo;
    BigInt hi;
    Kind kind = Kind::zero;
    ExpSum value; // constant blocks only
};

const char *to_string(WindowBlock::Kind kind);

class WindowFn {
public:
    WindowFn() = default;
    static WindowFn of_weight(const BigInt &lo, const BigInt &hi);
    static WindowFn constant(const BigInt &lo, const BigInt &hi, const ExpSum &value);

    // Appends a block after every existing one.
    void append(WindowBlock block);
    // Overwrites one point, splitting its block.
    void set_point(const BigInt &i, const ExpSum &value);

    const std::vector<WindowBlock> &blocks() const { return blocks_; }
    ExpSum at(const BigInt &i, const WeightFn &weight) const;
    // sum_{i=a}^{b} f(i)
    ExpSum sum(const BigInt &a, const BigInt &b, const WeightFn &weight) const;

    friend bool operator==(const WindowFn &, const WindowFn &);

private:
    std::vector<WindowBlock> blocks_;
};

// <Lambda_k, f> = (1/C_k) sum_{i=0}^{n_k} f(i).
ExpRatio pair_cesaro(const CesaroState &state, std::size_t k, const WindowFn &f);
ExpRatio pair_cesaro(const CesaroState &state, std::size_t k, const std::function<ExpSum(const BigInt &)> &f);

struct PsiCertificate {
    std::string weight;
    std::string tolerance;
    std::vector<BigInt> nk; // n_0 .. n_{t_J}
    std::vector<ExpSum> Ck;
    WindowFn psi;            // on [0, n_{t_J}]
    std::vector<std::size_t> sj;
    std::vector<std::size_t> tj;
    std::vector<ExpRatio> pairings_s;
    std::vector<ExpRatio> pairings_t;

    std::size_t levels() const { return tj.size(); }
};

// The proof's induction: s_1 = 0, t_1 = 1, psi(1) = C_1; s_{k+1} least with
// C_{t_k}/C_{s_{k+1}} < (1/4)/|<Lambda_{t_k}, psi>|, psi = 0 on (n_{t_k}, n_{s_{k+1}}];
// t_{k+1} least with C_{s_{k+1}}/C_{t_{k+1}} < 1/8, psi = omega on (n_{s_{k+1}}, n_{t_{k+1}}].
// Throws StateTooShort when the state runs out of indices.
PsiCertificate build_psi(const CesaroState &state, std::size_t J, const CertifyPolicy &policy = {});
// Same, extending the state on demand up to max_index.
PsiCertificate build_psi_extending(CesaroState &state, std::size_t J, std::size_t max_index,
                                   const CertifyPolicy &policy = {});

struct PsiVerification {
    std::vector<CheckEntry> checks;
    bool all_verified() const;
};

// Recomputes C_k from the weight and every pairing from the raw psi blocks.
PsiVerification verify_psi(const PsiCertificate &cert, const WeightFn &weight, const CertifyPolicy &policy = {});
inline PsiVerification verify_psi(const PsiCertificate &cert, const CesaroState &state,
                                  const CertifyPolicy &policy = {})
{
    return verify_psi(cert, state.weight(), policy);
}

struct InvarianceDefect {
    ExpRatio exact;    // (omega(n_k+1) + omega(0))/C_k
    ExpRatio coarse;   // (omega(1) omega(n_k) + omega(0))/C_k
    Sign exact_vs_coarse = Sign::zero; // sign(exact - coarse)
};

InvarianceDefect invariance_defect(const CesaroState &state, std::size_t k, const CertifyPolicy &policy = {});

} // namespace beurling
