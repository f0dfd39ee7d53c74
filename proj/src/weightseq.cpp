#include "zerogeom/weightseq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zerogeom {

WeightSeq WeightSeq::from_dense(const std::vector<BigRational>& values) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) entries.emplace_back(static_cast<unsigned>(i), values[i]);
    WeightSeq w;
    w.entries_ = std::move(entries);
    return w;
}

WeightSeq WeightSeq::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("duplicate weight index " +
                                        std::to_string(entries[i].first));
    std::erase_if(entries, [](const Entry& e) { return e.second == 0; });
    WeightSeq w;
    w.entries_ = std::move(entries);
    return w;
}

BigRational WeightSeq::at(unsigned k) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), k,
        [](const Entry& e, unsigned key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) return it->second;
    return BigRational(0);
}

WeightSeq parse_weightseq(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> tokens;  // token, offset
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        tokens.emplace_back(text.substr(start, comma - start), start);
        if (comma == text.size()) break;
        start = comma + 1;
    }
    if (tokens.size() == 1 && tokens[0].first.empty()) return WeightSeq();

    const bool sparse = text.find(':') != std::string::npos;
    if (sparse) {
        std::vector<WeightSeq::Entry> entries;
        for (const auto& [tok, off] : tokens) {
            const std::size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError("expected index:value pair '" + tok + "'", off);
            unsigned long idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoul(tok.substr(0, colon), &used);
                if (used != colon) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("malformed weight index in '" + tok + "'", off);
            }
            entries.emplace_back(static_cast<unsigned>(idx),
                                 parse_rational(tok.substr(colon + 1), off + colon + 1));
        }
        try {
            return WeightSeq::from_entries(std::move(entries));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 0);
        }
    }

    std::vector<BigRational> dense;
    for (const auto& [tok, off] : tokens) dense.push_back(parse_rational(tok, off));
    return WeightSeq::from_dense(dense);
}

std::string format_weightseq(const WeightSeq& w) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, val] : w.entries()) {
        if (!first) out << ',';
        first = false;
        out << idx << ':' << rational_to_string(val);
    }
    return out.str();
}

}  // namespace zerogeom
