#include "rledtw/rle.hpp"

#include <algorithm>

namespace rledtw {

RleString RleString::from_runs(std::span<const Run> runs) {
    if (runs.empty()) throw std::invalid_argument("empty string");
    RleString out;
    for (const Run& r : runs) {
        if (r.count < 1) throw std::invalid_argument("run count must be positive");
        if (!out.runs_.empty() && out.runs_.back().letter == r.letter) {
            out.runs_.back().count += r.count;  // normalize non-maximal input
        } else {
            out.runs_.push_back(r);
        }
    }
    out.prefix_.resize(out.runs_.size() + 1);
    out.prefix_[0] = 0;
    for (std::size_t r = 0; r < out.runs_.size(); ++r)
        out.prefix_[r + 1] = out.prefix_[r] + out.runs_[r].count;
    return out;
}

Letter RleString::letter_at(std::int64_t i) const {
    return runs_[static_cast<std::size_t>(hat_index(*this, i).run_index)].letter;
}

RleString rle_encode(std::span<const Letter> s) {
    if (s.empty()) throw std::invalid_argument("empty string");
    std::vector<Run> runs;
    for (Letter a : s) {
        if (!runs.empty() && runs.back().letter == a)
            ++runs.back().count;
        else
            runs.push_back({a, 1});
    }
    return RleString::from_runs(runs);
}

RleString rle_encode_chars(const std::string& s) {
    std::vector<Letter> letters(s.begin(), s.end());
    return rle_encode(letters);
}

std::vector<Letter> rle_decode(const RleString& x) {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(x.total_length()));
    for (const Run& r : x.runs())
        out.insert(out.end(), static_cast<std::size_t>(r.count), r.letter);
    return out;
}

HatIndex hat_index(const RleString& x, std::int64_t i) {
    if (i < 1 || i > x.total_length()) throw std::out_of_range("position out of bounds");
    // least r with prefix_sum(r) >= i, then run_index = r - 1
    std::int64_t lo = 1, hi = x.run_count();
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (x.prefix_sum(mid) >= i)
            hi = mid;
        else
            lo = mid + 1;
    }
    return {lo - 1, i - x.prefix_sum(lo - 1)};
}

}  // namespace rledtw
