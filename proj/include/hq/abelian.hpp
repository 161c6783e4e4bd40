#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hq/presentation.hpp"

namespace hq {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rows are relators, columns are the live generators in id order.
struct ExponentMatrix {
  std::vector<GeneratorId> columns;
  IntMatrix entries;
};

ExponentMatrix exponent_matrix(Presentation const& p);

// Nonzero invariant factors d1 | d2 | ... of an integer matrix. Exact checked
// 64-bit arithmetic; throws OverflowError rather than wrapping. The pivot is
// the smallest-magnitude nonzero entry, first in row-major order.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // factors > 1, each dividing the next

  friend bool operator==(AbelianInvariants const&,
                         AbelianInvariants const&) = default;
};

AbelianInvariants abelian_invariants(Presentation const& p);

// Whether a verdict agrees with the abelian invariants. Unresolved verdicts
// make no claim and are always consistent.
bool consistent(QuotientVerdict const& verdict, AbelianInvariants const& inv);

// "free rank R, torsion [t1, t2]"
std::string to_string(AbelianInvariants const& inv);

}  // namespace hq
