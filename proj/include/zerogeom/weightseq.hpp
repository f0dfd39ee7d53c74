#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zerogeom/rational.hpp"

namespace zerogeom {

// Finite-support sequence of rational weights, read as an infinite sequence
// that is zero off support. Entries are kept sorted by strictly increasing
// index with nonzero values; construction canonicalizes.
class WeightSeq {
public:
    using Entry = std::pair<unsigned, BigRational>;

    WeightSeq() = default;

    // Values listed densely from index 0; zeros are dropped.
    static WeightSeq from_dense(const std::vector<BigRational>& values);

    // Arbitrary (index, value) pairs; sorted, zeros dropped. Throws
    // std::invalid_argument on a duplicated index.
    static WeightSeq from_entries(std::vector<Entry> entries);

    BigRational at(unsigned k) const;
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    // Largest support index; -1 when the sequence is identically zero.
    int max_index() const {
        return entries_.empty() ? -1 : static_cast<int>(entries_.back().first);
    }

    bool operator==(const WeightSeq& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

// CLI format: either dense "1,-1,0,2" (values from index 0) or sparse
// "0:1,2:-1" (index:value pairs). The two styles cannot be mixed.
WeightSeq parse_weightseq(const std::string& text);

// Canonical sparse "idx:val,..." rendering; "" for the zero sequence.
std::string format_weightseq(const WeightSeq& w);

}  // namespace zerogeom
