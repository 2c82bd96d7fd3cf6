#pragma once

#include <cstdint>

#include "bch3/codes.hpp"
#include "bch3/field.hpp"

namespace bch3 {

// Largest code dimension the exhaustive enumerator accepts by default
// (3^16 codewords).
inline constexpr std::uint32_t kDefaultMaxDim = 16;

/*
 * Exhaustive weight distribution over all 3^k message polynomials.
 *
 * The kernel walks the message space as a base-3 odometer: one increment of
 * message digit j adds the generator row shifted by j to the running
 * codeword, and the Hamming weight is maintained incrementally. The space is
 * partitioned into blocks of fixed high digits, processed independently by
 * OpenMP workers with private histograms that merge by addition, so the
 * result is identical for any worker count.
 */
WeightDistribution weight_distribution_exhaustive(const CyclicCode& code,
                                                  std::uint32_t max_dim = kDefaultMaxDim,
                                                  int workers = 0);

// Serial reference: multiplies every message by the generator and counts
// nonzero symbols. The oracle the odometer kernel is tested against.
WeightDistribution weight_distribution_exhaustive_reference(const CyclicCode& code,
                                                            std::uint32_t max_dim = kDefaultMaxDim);

/*
 * Weight distribution of the family's trace-form codeword set, enumerated
 * over the stated parameter space (a, or (a, b)). Symbols come from the
 * precomputed Tr(alpha^j) table: one codeword symbol costs two table reads
 * and one mod-3 add. Families E and G scan all 3^{2m} pairs; the a-grid is
 * split across OpenMP workers.
 */
WeightDistribution weight_distribution_trace(Family fam, const FieldContext& f, int workers = 0);

// Serial reference evaluating every symbol with field arithmetic
// (mul/inv/pow + trace) instead of table rotations.
WeightDistribution weight_distribution_trace_reference(Family fam, const FieldContext& f);

} // namespace bch3
