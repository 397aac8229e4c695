#pragma once

#include <string>

#include "braidlab/errors.hpp"

namespace braidlab {

// A named indexed generator alphabet: symbol "y" with rank 3 stands for
// y1, y2, y3.  Operations on words and Lie elements require equal alphabets,
// so distinct carriers (free-group letters, braid-action letters, per-strand
// Kohno components) cannot be mixed by accident.
struct Alphabet {
    std::string symbol;
    int rank = 0;

    bool operator==(const Alphabet& o) const = default;

    void check_index(int g) const {
        if (g < 1 || g > rank)
            throw index_error("generator index " + std::to_string(g) + " out of range for " +
                              symbol + "[1.." + std::to_string(rank) + "]");
    }
};

inline void require_same(const Alphabet& a, const Alphabet& b, const char* what) {
    if (!(a == b))
        throw index_error(std::string(what) + ": alphabet mismatch (" + a.symbol + "/" +
                          std::to_string(a.rank) + " vs " + b.symbol + "/" + std::to_string(b.rank) +
                          ")");
}

}  // namespace braidlab
