#pragma once

#include <vector>

#include "burnside/catgen.hpp"

namespace testutil {

// symmetric group on three letters: e, r, r2, s, sr, sr2 with r the 3-cycle
inline const std::vector<std::vector<int>> kS3Table = {
    {0, 1, 2, 3, 4, 5}, {1, 2, 0, 5, 3, 4}, {2, 0, 1, 4, 5, 3},
    {3, 4, 5, 0, 1, 2}, {4, 5, 3, 2, 0, 1}, {5, 3, 4, 1, 2, 0}};

// dihedral group of the square: e, r, r2, r3, s, sr, sr2, sr3
inline const std::vector<std::vector<int>> kD4Table = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 0, 7, 4, 5, 6}, {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 0, 1, 2, 5, 6, 7, 4}, {4, 5, 6, 7, 0, 1, 2, 3}, {5, 6, 7, 4, 3, 0, 1, 2},
    {6, 7, 4, 5, 2, 3, 0, 1}, {7, 4, 5, 6, 1, 2, 3, 0}};

// Latin square with identity 0 and two-sided inverses that fails associativity
inline const std::vector<std::vector<int>> kNonAssocLoop = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

// Latin square with identity 0 where element 2 has no two-sided inverse
inline const std::vector<std::vector<int>> kNoInverseLoop = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}};

inline std::vector<std::string> element_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

inline burnside::Group s3() {
    return burnside::group_from_cayley("S3", {"e", "r", "r2", "s", "sr", "sr2"}, kS3Table);
}

inline burnside::Group d4() {
    return burnside::group_from_cayley("D4", {"e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"},
                                       kD4Table);
}

}  // namespace testutil
