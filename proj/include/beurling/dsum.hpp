#pragma once

#include "beurling/finsupp.hpp"
#include "beurling/l1z.hpp"
#include "beurling/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace beurling {

// Finitely supported point of the direct sum of copies of Z; coordinates are 1-based.
// Stored as sorted (coordinate, value) pairs with no zero values.
class GElem {
public:
    GElem() = default;
    // n * e_i
    static GElem unit(std::int64_t coordinate, std::int64_t n = 1);
    // (n_1, n_2, ...)
    static GElem from_vector(const std::vector<std::int64_t> &values);

    const std::vector<std::pair<std::int64_t, std::int64_t>> &entries() const { return entries_; }
    std::int64_t at(std::int64_t coordinate) const;
    bool is_identity() const { return entries_.empty(); }
    // Same point with coordinate i set to 0.
    GElem without(std::int64_t coordinate) const;
    std::vector<std::int64_t> to_vector() const;

    friend GElem operator+(const GElem &a, const GElem &b);
    friend GElem operator-(const GElem &a);
    friend auto operator<=>(const GElem &, const GElem &) = default;
    friend bool operator==(const GElem &, const GElem &) = default;

private:
    std::vector<std::pair<std::int64_t, std::int64_t>> entries_;
};

inline GElem key_add(const GElem &a, const GElem &b) { return a + b; }

// "(1,0,-1)"; the identity prints as "()".
std::string to_string(const GElem &s);

using FinSuppG = FinSupp<GElem, Rational>;

inline FinSuppG delta_g(const GElem &s, const Rational &coefficient = Rational(1))
{
    return FinSuppG::delta(s, coefficient);
}

// f -> sum f(s) delta_{pi_i(s)}
FinSuppG pi_i(const FinSuppG &f, std::int64_t coordinate);
FinSuppG iota_i(const FinSuppZ &f, std::int64_t coordinate);

// M_{j,k} = (1/k) sum_{i=1}^{k} delta_i^{(j)}
FinSuppG make_M(std::int64_t j, std::int64_t k);
// sigma_{j,k} = (1/k) sum_{i=1}^{k} (delta_i^{(j)} - delta_{-i}^{(j)})
FinSuppG make_sigma(std::int64_t j, std::int64_t k);

// Sum of coefficients over points with every coordinate >= 0.
Rational h_pair(const FinSuppG &f);

struct ProductRule {
    Rational lhs; // <pi_i(f) * iota_i(g), h>
    Rational rhs; // <pi_i(f), h> <iota_i(g), h>
    bool holds() const { return lhs == rhs; }
};

ProductRule check_product_rule(const FinSuppG &f, const FinSuppZ &g, std::int64_t coordinate);

// || delta_s * M_{j,k} - delta_{pi_j(s)} * M_{j,k} ||_1
Rational translation_defect(std::int64_t j, std::int64_t k, const GElem &s);

// Index of factor position i (1 = leftmost) is base * growth^{i-1}.
struct StaircaseSchedule {
    std::int64_t factors = 1;
    std::int64_t base = 4;
    std::int64_t growth = 4;

    std::int64_t index(std::int64_t position) const;
    void validate() const;
};

// sigma_{1,k_1} * sigma_{2,k_2} * ... * sigma_{j,k_j} with k_i = sched.index(i).
FinSuppG sigma_chain(std::int64_t j, const StaircaseSchedule &sched,
                     std::size_t support_cap = default_support_cap);

// Lambda_1 = sigma_{1,b}; Lambda_j = M_{j,b} * Lambda_{j-1} (at index b*g) + sigma_{j,b}.
FinSuppG build_ladder(std::int64_t j, std::int64_t base, std::int64_t growth,
                      std::size_t support_cap = default_support_cap);

// Sum of rational multiples of products of one-dimensional integer arrays, one per
// coordinate; supports that would be enormous once expanded stay small here.
class TensorSum {
public:
    struct Axis {
        std::int64_t offset = 0;          // point of values[0]
        std::vector<std::int64_t> values; // integer counts
    };
    struct Term {
        Rational coefficient;
        std::map<std::int64_t, Axis> axes; // missing coordinate = point mass at 0
    };

    TensorSum() = default;
    static TensorSum from_terms(std::vector<Term> terms);
    static TensorSum M(std::int64_t j, std::int64_t k);
    static TensorSum sigma(std::int64_t j, std::int64_t k);

    const std::vector<Term> &terms() const { return terms_; }

    friend TensorSum operator+(const TensorSum &a, const TensorSum &b);
    friend TensorSum operator*(const TensorSum &a, const TensorSum &b);

    TensorSum pi(std::int64_t coordinate) const;
    Rational h() const;
    Rational l1_upper() const; // sum over terms of |c| * prod ||axis||_1
    FinSuppG expand(std::size_t support_cap = default_support_cap) const;

private:
    std::vector<Term> terms_;
};

TensorSum ladder_tensor(std::int64_t j, std::int64_t base, std::int64_t growth);

struct LadderPowerOptions {
    // Occurrence q (0-based) of Lambda_j uses base * occurrence_growth^q; 0 means growth^j.
    std::int64_t occurrence_growth = 0;
};

// <Lambda_j^{*p}, h> with independent staircase indices per occurrence.
Rational ladder_powers(std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t p,
                       const LadderPowerOptions &options = {});
std::int64_t occurrence_growth(std::int64_t j, std::int64_t growth, const LadderPowerOptions &options);
// Same product as a TensorSum.
TensorSum ladder_power_tensor(std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t p,
                              const LadderPowerOptions &options = {});

} // namespace beurling
