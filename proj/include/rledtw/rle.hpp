#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rledtw {

// Letters are opaque tokens identified by a stable integer code. The code
// doubles as the row/column index for matrix distance functions.
using Letter = std::int32_t;

struct Run {
    Letter letter;
    std::int64_t count;  // >= 1
};

// A run-length encoded string: maximal runs plus a prefix-sum index
// M_0..M_k over run lengths for O(log k) position lookups.
class RleString {
public:
    RleString() = default;

    // Builds from a run list. Adjacent runs with equal letters are merged
    // so the result always consists of maximal runs. Throws on empty input
    // or nonpositive counts.
    static RleString from_runs(std::span<const Run> runs);

    std::int64_t run_count() const { return static_cast<std::int64_t>(runs_.size()); }
    std::int64_t total_length() const { return prefix_.back(); }
    const std::vector<Run>& runs() const { return runs_; }
    const Run& run(std::int64_t r) const { return runs_[static_cast<std::size_t>(r)]; }

    // M_r = m_1 + ... + m_r, with prefix_sum(0) == 0.
    std::int64_t prefix_sum(std::int64_t r) const { return prefix_[static_cast<std::size_t>(r)]; }

    Letter letter_at(std::int64_t i) const;  // 1-based position

private:
    std::vector<Run> runs_;
    std::vector<std::int64_t> prefix_;
};

struct HatIndex {
    std::int64_t run_index;  // zero-based index of the containing run
    std::int64_t offset;     // one-based position within the run
};

// Encodes a letter sequence into its (unique) maximal-run RLE form.
// Throws std::invalid_argument on an empty sequence.
RleString rle_encode(std::span<const Letter> s);

inline RleString rle_encode(const std::vector<Letter>& s) {
    return rle_encode(std::span<const Letter>(s));
}

// Encodes a character string, using each char's value as the letter code.
RleString rle_encode_chars(const std::string& s);

std::vector<Letter> rle_decode(const RleString& x);

// Locates position i (1-based, in [1, total_length]) via binary search on
// the prefix sums. Throws std::out_of_range otherwise.
HatIndex hat_index(const RleString& x, std::int64_t i);

}  // namespace rledtw
