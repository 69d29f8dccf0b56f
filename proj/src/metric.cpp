#include "rledtw/metric.hpp"

#include <cstdlib>

namespace rledtw {

DistanceFn DistanceFn::hamming() {
    DistanceFn d;
    d.kind_ = Kind::Hamming;
    return d;
}

DistanceFn DistanceFn::absdiff() {
    DistanceFn d;
    d.kind_ = Kind::AbsDiff;
    return d;
}

DistanceFn DistanceFn::matrix(std::vector<std::vector<long long>> table) {
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw std::invalid_argument("distance matrix must be square");
        if (table[i][i] != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
        for (long long v : table[i])
            if (v < 0) throw std::invalid_argument("distance matrix entries must be nonnegative");
    }
    DistanceFn d;
    d.kind_ = Kind::Matrix;
    d.table_ = std::make_shared<const std::vector<std::vector<long long>>>(std::move(table));
    return d;
}

long long DistanceFn::eval_int(Letter a, Letter b) const {
    switch (kind_) {
        case Kind::Hamming:
            return a == b ? 0 : 1;
        case Kind::AbsDiff:
            return std::llabs(static_cast<long long>(a) - static_cast<long long>(b));
        case Kind::Matrix: {
            const auto& t = *table_;
            const auto n = static_cast<std::int64_t>(t.size());
            if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("unknown letter");
            return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
        case Kind::Rounded:
            throw std::logic_error("rounded distance is not integer-valued");
    }
    throw std::logic_error("bad distance kind");
}

Rational DistanceFn::operator()(Letter a, Letter b) const {
    if (kind_ != Kind::Rounded) return rational_of(eval_int(a, b));
    long long v = base_->eval_int(a, b);
    if (v == 0) return Rational(0);
    return cpow(1 + eps1_, rational_of(v));
}

const Rational& DistanceFn::epsilon1() const {
    if (kind_ != Kind::Rounded) throw std::logic_error("epsilon1 on a non-rounded distance");
    return eps1_;
}

Rational cpow(const Rational& one_plus_eps1, const Rational& v) {
    if (v < 1) throw std::invalid_argument("below unit distance");
    if (one_plus_eps1 <= 1) throw std::invalid_argument("epsilon1 must be positive");
    Rational pow(1);
    while (pow < v) pow *= one_plus_eps1;
    return pow;
}

DistanceFn round_distance_fn(const DistanceFn& base, const Rational& eps1) {
    if (eps1 <= 0) throw std::invalid_argument("epsilon1 must be positive");
    if (!base.integral()) throw std::invalid_argument("sub-unit nonzero distance");
    DistanceFn d;
    d.kind_ = DistanceFn::Kind::Rounded;
    d.base_ = std::make_shared<const DistanceFn>(base);
    d.eps1_ = eps1;
    return d;
}

}  // namespace rledtw
