#pragma once

#include <memory>
#include <vector>

#include "rledtw/rational.hpp"
#include "rledtw/rle.hpp"

namespace rledtw {

// Letter-pair cost oracle. delta(a,a) = 0 and delta(a,b) >= 0; symmetry and
// the triangle inequality are deliberately not required. All built-in
// families emit integers; only the rounded family emits non-integers.
class DistanceFn {
public:
    enum class Kind { Hamming, AbsDiff, Matrix, Rounded };

    static DistanceFn hamming();
    static DistanceFn absdiff();
    // Rows index the first argument, columns the second. The diagonal must
    // be all zeros and every entry nonnegative.
    static DistanceFn matrix(std::vector<std::vector<long long>> table);

    Kind kind() const { return kind_; }
    bool integral() const { return kind_ != Kind::Rounded; }

    Rational operator()(Letter a, Letter b) const;

    // Integer fast path; only valid when integral().
    long long eval_int(Letter a, Letter b) const;

    // Rounded kind only.
    const Rational& epsilon1() const;

private:
    friend DistanceFn round_distance_fn(const DistanceFn&, const Rational&);
    DistanceFn() = default;

    Kind kind_ = Kind::Hamming;
    std::shared_ptr<const std::vector<std::vector<long long>>> table_;
    std::shared_ptr<const DistanceFn> base_;
    Rational eps1_;
};

// Least power of (1+eps1) that is >= v, computed by exact rational
// iteration. Requires v >= 1; the result lies in [v, (1+eps1)*v).
Rational cpow(const Rational& one_plus_eps1, const Rational& v);

// Geometric rounding delta_eps1: zero distances stay zero, every nonzero
// distance is rounded up to the next power of (1+eps1). The base function
// must be integer-valued (so nonzero values are >= 1).
DistanceFn round_distance_fn(const DistanceFn& base, const Rational& eps1);

}  // namespace rledtw
