#include "hq/abelian.hpp"

#include <algorithm>
#include <utility>

#include "hq/error.hpp"

namespace hq {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError();
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError();
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError();
  }
  return out;
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) {
    throw OverflowError();
  }
  return a < 0 ? -a : a;
}

// row[dst] -= q * row[src]
void row_op(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) {
    m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
  }
}

void col_op(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (auto& row : m) {
    row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
  }
}

}  // namespace

ExponentMatrix exponent_matrix(Presentation const& p) {
  ExponentMatrix out;
  out.columns = p.live_generators();
  for (auto const& r : p.relators()) {
    std::vector<std::int64_t> row;
    row.reserve(out.columns.size());
    for (auto g : out.columns) {
      row.push_back(exponent_sum(r.word, g));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  std::vector<std::int64_t> factors;
  std::size_t const rows = m.size();
  std::size_t const cols = rows == 0 ? 0 : m.front().size();
  for (auto const& row : m) {
    if (row.size() != cols) {
      throw Error("ragged matrix");
    }
  }

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows;
      std::size_t pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          auto a = checked_abs(m[i][j]);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (best == 0) {
        return factors;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) {
        std::swap(row[t], row[pc]);
      }

      auto const pivot = m[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] != 0) {
          row_op(m, i, t, m[i][t] / pivot);
          clean = clean && m[i][t] == 0;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] != 0) {
          col_op(m, j, t, m[t][j] / pivot);
          clean = clean && m[t][j] == 0;
        }
      }
      if (!clean) {
        continue;  // a smaller remainder now exists
      }

      // Row and column are clear; the pivot must divide the whole block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % pivot != 0) {
            for (std::size_t k = t; k < cols; ++k) {
              m[t][k] = checked_add(m[t][k], m[i][k]);
            }
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        factors.push_back(checked_abs(pivot));
        break;
      }
    }
  }
  return factors;
}

AbelianInvariants abelian_invariants(Presentation const& p) {
  auto matrix = exponent_matrix(p);
  auto factors = smith_normal_form(std::move(matrix.entries));
  AbelianInvariants out;
  out.free_rank = p.live_count() - factors.size();
  for (auto d : factors) {
    if (d > 1) {
      out.torsion.push_back(d);
    }
  }
  return out;
}

bool consistent(QuotientVerdict const& verdict, AbelianInvariants const& inv) {
  if (std::holds_alternative<Trivial>(verdict)) {
    return inv.free_rank == 0 && inv.torsion.empty();
  }
  if (auto const* f = std::get_if<FreeOfRank>(&verdict)) {
    return inv.free_rank == f->rank && inv.torsion.empty() &&
           f->basis.size() == f->rank;
  }
  return true;
}

std::string to_string(AbelianInvariants const& inv) {
  std::string out = "free rank " + std::to_string(inv.free_rank) + ", torsion [";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += std::to_string(inv.torsion[i]);
  }
  return out + "]";
}

}  // namespace hq
