#pragma once

#include <array>
#include <map>
#include <vector>

#include "ckd3/errors.hpp"
#include "ckd3/table.hpp"

// Naive brute-force reimplementation used as the measuring stick for every
// fast path and every claim. It keeps its own pairwise error predicates on
// purpose: agreement with error_models is evidence exactly because no
// corruption code is shared.
namespace ckd3::oracle {

/// All base² codewords (r, cell(r,c), c), sorted.
std::vector<Word> enumerate_codewords(const CheckTable&);

/// Every unordered codeword pair related by the class, found by testing all
/// pairs directly. No structural shortcuts.
std::vector<WordPair> brute_undetected(const CheckTable&, ErrorClass,
                                       PhoneticRange = PhoneticRange::full);

/// Codeword count per sorted digit multiset.
std::map<std::array<int, 3>, int> multiset_census(const CheckTable&);

}  // namespace ckd3::oracle
