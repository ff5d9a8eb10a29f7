#include "beurling/dsum.hpp"

#include "beurling/errors.hpp"

#include <algorithm>

namespace beurling {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ResourceLimit("integer overflow in a tensor count");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ResourceLimit("integer overflow in a staircase index or tensor count");
    }
    return out;
}

void require_coordinate(std::int64_t coordinate)
{
    if (coordinate < 1) {
        throw InvalidArgument("coordinates are 1-based");
    }
}

void require_positive(std::int64_t value, const char *what)
{
    if (value < 1) {
        throw InvalidArgument(std::string(what) + " must be at least 1");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// GElem

GElem GElem::unit(std::int64_t coordinate, std::int64_t n)
{
    require_coordinate(coordinate);
    GElem out;
    if (n != 0) {
        out.entries_.emplace_back(coordinate, n);
    }
    return out;
}

GElem GElem::from_vector(const std::vector<std::int64_t> &values)
{
    GElem out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) {
            out.entries_.emplace_back(static_cast<std::int64_t>(i + 1), values[i]);
        }
    }
    return out;
}

std::int64_t GElem::at(std::int64_t coordinate) const
{
    for (const auto &[c, v] : entries_) {
        if (c == coordinate) {
            return v;
        }
    }
    return 0;
}

GElem GElem::without(std::int64_t coordinate) const
{
    GElem out;
    for (const auto &entry : entries_) {
        if (entry.first != coordinate) {
            out.entries_.push_back(entry);
        }
    }
    return out;
}

std::vector<std::int64_t> GElem::to_vector() const
{
    if (entries_.empty()) {
        return {};
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(entries_.back().first), 0);
    for (const auto &[c, v] : entries_) {
        out[static_cast<std::size_t>(c - 1)] = v;
    }
    return out;
}

GElem operator+(const GElem &a, const GElem &b)
{
    GElem out;
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
            out.entries_.push_back(*i++);
        } else if (i == a.entries_.end() || j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            const std::int64_t v = key_add(i->second, j->second);
            if (v != 0) {
                out.entries_.emplace_back(i->first, v);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

GElem operator-(const GElem &a)
{
    GElem out = a;
    for (auto &entry : out.entries_) {
        entry.second = -entry.second;
    }
    return out;
}

std::string to_string(const GElem &s)
{
    std::string out = "(";
    const auto values = s.to_vector();
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// FinSuppG operators

FinSuppG pi_i(const FinSuppG &f, std::int64_t coordinate)
{
    require_coordinate(coordinate);
    FinSuppG out;
    for (const auto &[s, c] : f.terms()) {
        out.add(s.without(coordinate), c);
    }
    return out;
}

FinSuppG iota_i(const FinSuppZ &f, std::int64_t coordinate)
{
    require_coordinate(coordinate);
    FinSuppG out;
    for (const auto &[n, c] : f.terms()) {
        out.add(GElem::unit(coordinate, n), c);
    }
    return out;
}

FinSuppG make_M(std::int64_t j, std::int64_t k)
{
    require_coordinate(j);
    require_positive(k, "k");
    const Rational weight = make_rational(1, k);
    FinSuppG out;
    for (std::int64_t i = 1; i <= k; ++i) {
        out.add(GElem::unit(j, i), weight);
    }
    return out;
}

FinSuppG make_sigma(std::int64_t j, std::int64_t k)
{
    require_coordinate(j);
    require_positive(k, "k");
    const Rational weight = make_rational(1, k);
    FinSuppG out;
    for (std::int64_t i = 1; i <= k; ++i) {
        out.add(GElem::unit(j, i), weight);
        out.add(GElem::unit(j, -i), -weight);
    }
    return out;
}

Rational h_pair(const FinSuppG &f)
{
    Rational total = 0;
    for (const auto &[s, c] : f.terms()) {
        const bool nonnegative = std::all_of(s.entries().begin(), s.entries().end(),
                                             [](const auto &entry) { return entry.second >= 0; });
        if (nonnegative) {
            total += c;
        }
    }
    return total;
}

ProductRule check_product_rule(const FinSuppG &f, const FinSuppZ &g, std::int64_t coordinate)
{
    const FinSuppG projected = pi_i(f, coordinate);
    const FinSuppG embedded = iota_i(g, coordinate);
    return {h_pair(convolve(projected, embedded)), h_pair(projected) * h_pair(embedded)};
}

Rational translation_defect(std::int64_t j, std::int64_t k, const GElem &s)
{
    const FinSuppG M = make_M(j, k);
    return l1_norm(convolve(delta_g(s), M) - convolve(delta_g(s.without(j)), M));
}

std::int64_t StaircaseSchedule::index(std::int64_t position) const
{
    validate();
    if (position < 1) {
        throw InvalidArgument("staircase positions are 1-based");
    }
    std::int64_t out = base;
    for (std::int64_t i = 1; i < position; ++i) {
        out = checked_mul(out, growth);
    }
    return out;
}

void StaircaseSchedule::validate() const
{
    require_positive(factors, "factor count");
    require_positive(base, "base");
    if (growth < 2) {
        throw InvalidArgument("staircase growth must be at least 2");
    }
}

FinSuppG sigma_chain(std::int64_t j, const StaircaseSchedule &sched, std::size_t support_cap)
{
    require_positive(j, "j");
    FinSuppG out = delta_g(GElem());
    for (std::int64_t i = 1; i <= j; ++i) {
        out = convolve(out, make_sigma(i, sched.index(i)), support_cap);
    }
    return out;
}

FinSuppG build_ladder(std::int64_t j, std::int64_t base, std::int64_t growth, std::size_t support_cap)
{
    StaircaseSchedule{1, base, growth}.validate();
    require_positive(j, "j");
    if (j == 1) {
        return make_sigma(1, base);
    }
    const FinSuppG inner = build_ladder(j - 1, checked_mul(base, growth), growth, support_cap);
    return convolve(make_M(j, base), inner, support_cap) + make_sigma(j, base);
}

// ---------------------------------------------------------------------------
// TensorSum

namespace {

using Axis = TensorSum::Axis;

void trim(Axis &axis)
{
    std::size_t first = 0;
    while (first < axis.values.size() && axis.values[first] == 0) {
        ++first;
    }
    std::size_t last = axis.values.size();
    while (last > first && axis.values[last - 1] == 0) {
        --last;
    }
    axis.offset += static_cast<std::int64_t>(first);
    axis.values = std::vector<std::int64_t>(axis.values.begin() + static_cast<std::ptrdiff_t>(first),
                                            axis.values.begin() + static_cast<std::ptrdiff_t>(last));
}

struct Run {
    std::size_t lo;
    std::size_t hi;
    std::int64_t value;
};

std::vector<Run> runs_of(const Axis &axis)
{
    std::vector<Run> out;
    for (std::size_t i = 0; i < axis.values.size(); ++i) {
        const std::int64_t v = axis.values[i];
        if (!out.empty() && out.back().value == v && out.back().hi + 1 == i) {
            out.back().hi = i;
        } else if (v != 0) {
            out.push_back({i, i, v});
        }
    }
    return out;
}

// Convolution of two integer arrays; piecewise-constant runs of b go through prefix sums of a.
Axis convolve_axes(const Axis &a_in, const Axis &b_in)
{
    const bool swap = runs_of(a_in).size() < runs_of(b_in).size();
    const Axis &a = swap ? b_in : a_in;
    const Axis &b = swap ? a_in : b_in;
    Axis out;
    if (a.values.empty() || b.values.empty()) {
        return out;
    }
    out.offset = key_add(a.offset, b.offset);
    const std::size_t la = a.values.size();
    const std::size_t lb = b.values.size();
    out.values.assign(la + lb - 1, 0);
    std::vector<std::int64_t> prefix(la + 1, 0);
    for (std::size_t t = 0; t < la; ++t) {
        prefix[t + 1] = checked_add(prefix[t], a.values[t]);
    }
    const auto prefix_at = [&](std::int64_t i) {
        return prefix[static_cast<std::size_t>(std::clamp<std::int64_t>(i, 0, static_cast<std::int64_t>(la)))];
    };
    for (const Run &run : runs_of(b)) {
        for (std::size_t n = run.lo; n < la + run.hi; ++n) {
            // sum of a[t] over n - hi <= t <= n - lo
            const auto top = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(run.lo) + 1;
            const auto bottom = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(run.hi);
            const std::int64_t window = prefix_at(top) - prefix_at(bottom);
            out.values[n] = checked_add(out.values[n], checked_mul(run.value, window));
        }
    }
    trim(out);
    return out;
}

std::int64_t total_mass(const Axis &axis)
{
    std::int64_t total = 0;
    for (std::int64_t v : axis.values) {
        total = checked_add(total, v);
    }
    return total;
}

std::int64_t nonnegative_mass(const Axis &axis)
{
    std::int64_t total = 0;
    for (std::size_t i = 0; i < axis.values.size(); ++i) {
        if (axis.offset + static_cast<std::int64_t>(i) >= 0) {
            total = checked_add(total, axis.values[i]);
        }
    }
    return total;
}

BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

} // namespace

TensorSum TensorSum::from_terms(std::vector<Term> terms)
{
    TensorSum out;
    for (Term &term : terms) {
        if (term.coefficient != 0) {
            out.terms_.push_back(std::move(term));
        }
    }
    return out;
}

TensorSum TensorSum::M(std::int64_t j, std::int64_t k)
{
    require_coordinate(j);
    require_positive(k, "k");
    Term term;
    term.coefficient = make_rational(1, k);
    term.axes[j] = Axis{1, std::vector<std::int64_t>(static_cast<std::size_t>(k), 1)};
    return from_terms({term});
}

TensorSum TensorSum::sigma(std::int64_t j, std::int64_t k)
{
    require_coordinate(j);
    require_positive(k, "k");
    Term term;
    term.coefficient = make_rational(1, k);
    Axis axis{-k, std::vector<std::int64_t>(static_cast<std::size_t>(2 * k + 1), 1)};
    std::fill(axis.values.begin(), axis.values.begin() + k + 1, -1);
    axis.values[static_cast<std::size_t>(k)] = 0;
    term.axes[j] = std::move(axis);
    return from_terms({term});
}

TensorSum operator+(const TensorSum &a, const TensorSum &b)
{
    TensorSum out = a;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

TensorSum operator*(const TensorSum &a, const TensorSum &b)
{
    TensorSum out;
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            TensorSum::Term term;
            term.coefficient = x.coefficient * y.coefficient;
            term.axes = x.axes;
            bool vanished = false;
            for (const auto &[c, axis] : y.axes) {
                auto it = term.axes.find(c);
                if (it == term.axes.end()) {
                    term.axes.emplace(c, axis);
                } else {
                    it->second = convolve_axes(it->second, axis);
                    vanished = vanished || it->second.values.empty();
                }
            }
            if (!vanished && term.coefficient != 0) {
                out.terms_.push_back(std::move(term));
            }
        }
    }
    return out;
}

TensorSum TensorSum::pi(std::int64_t coordinate) const
{
    require_coordinate(coordinate);
    std::vector<Term> out;
    for (Term term : terms_) {
        auto it = term.axes.find(coordinate);
        if (it != term.axes.end()) {
            term.coefficient *= to_big(total_mass(it->second));
            term.axes.erase(it);
        }
        out.push_back(std::move(term));
    }
    return from_terms(std::move(out));
}

Rational TensorSum::h() const
{
    Rational total = 0;
    for (const Term &term : terms_) {
        BigInt mass = 1;
        for (const auto &[c, axis] : term.axes) {
            mass *= to_big(nonnegative_mass(axis));
        }
        total += term.coefficient * mass;
    }
    return total;
}

Rational TensorSum::l1_upper() const
{
    Rational total = 0;
    for (const Term &term : terms_) {
        BigInt mass = 1;
        for (const auto &[c, axis] : term.axes) {
            BigInt sum = 0;
            for (std::int64_t v : axis.values) {
                sum += to_big(v < 0 ? -v : v);
            }
            mass *= sum;
        }
        total += abs(term.coefficient) * mass;
    }
    return total;
}

FinSuppG TensorSum::expand(std::size_t support_cap) const
{
    FinSuppG out;
    for (const Term &term : terms_) {
        std::vector<std::pair<GElem, BigInt>> points{{GElem(), BigInt(1)}};
        for (const auto &[c, axis] : term.axes) {
            std::vector<std::pair<GElem, BigInt>> next;
            for (const auto &[s, m] : points) {
                for (std::size_t i = 0; i < axis.values.size(); ++i) {
                    if (axis.values[i] != 0) {
                        next.emplace_back(s + GElem::unit(c, axis.offset + static_cast<std::int64_t>(i)),
                                          m * to_big(axis.values[i]));
                    }
                }
                if (next.size() > support_cap) {
                    throw ResourceLimit("tensor expansion exceeds " + std::to_string(support_cap) + " points");
                }
            }
            points = std::move(next);
        }
        for (const auto &[s, m] : points) {
            out.add(s, term.coefficient * m);
        }
        if (out.size() > support_cap) {
            throw ResourceLimit("tensor expansion exceeds " + std::to_string(support_cap) + " points");
        }
    }
    return out;
}

TensorSum ladder_tensor(std::int64_t j, std::int64_t base, std::int64_t growth)
{
    StaircaseSchedule{1, base, growth}.validate();
    require_positive(j, "j");
    if (j == 1) {
        return TensorSum::sigma(1, base);
    }
    return TensorSum::M(j, base) * ladder_tensor(j - 1, checked_mul(base, growth), growth) +
           TensorSum::sigma(j, base);
}

std::int64_t occurrence_growth(std::int64_t j, std::int64_t growth, const LadderPowerOptions &options)
{
    if (options.occurrence_growth != 0) {
        if (options.occurrence_growth < 1) {
            throw InvalidArgument("occurrence growth must be positive");
        }
        return options.occurrence_growth;
    }
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < j; ++i) {
        out = checked_mul(out, growth);
    }
    return out;
}

TensorSum ladder_power_tensor(std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t p,
                              const LadderPowerOptions &options)
{
    require_positive(p, "power");
    const std::int64_t step = occurrence_growth(j, growth, options);
    std::int64_t b = base;
    TensorSum out = ladder_tensor(j, b, growth);
    for (std::int64_t q = 1; q < p; ++q) {
        b = checked_mul(b, step);
        out = out * ladder_tensor(j, b, growth);
    }
    return out;
}

Rational ladder_powers(std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t p,
                       const LadderPowerOptions &options)
{
    return ladder_power_tensor(j, base, growth, p, options).h();
}

} // namespace beurling
