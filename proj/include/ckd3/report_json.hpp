#pragma once

#include <string>
#include <vector>

#include "ckd3/errors.hpp"

namespace ckd3 {

/// Machine-readable report document, byte-deterministic for fixed input:
/// {table_name, base, classes: [{class, pair_count, undetected,
/// structural_equivalent_passed}]} with keys in that order and pairs sorted.
std::string report_json(const CheckTable&, const std::vector<DetectionReport>&);

}  // namespace ckd3
