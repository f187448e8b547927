#pragma once

// Private helpers: weak-preference relations as per-row bitmasks.
// Row a holds bit b exactly when a is weakly preferred to b.

#include <cstdint>
#include <optional>
#include <vector>

#include "preflab/preference.hpp"

namespace preflab::detail {

using RelRows = std::vector<std::uint32_t>;

inline RelRows rows_of(const WeakOrder& w) {
  const int m = w.size();
  RelRows rows(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (w.level(a) <= w.level(b)) rows[static_cast<size_t>(a)] |= (1u << b);
  return rows;
}

inline bool is_complete(const RelRows& rows) {
  const int m = static_cast<int>(rows.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!(rows[static_cast<size_t>(a)] & (1u << b)) &&
          !(rows[static_cast<size_t>(b)] & (1u << a)))
        return false;
  return true;
}

inline bool is_transitive(const RelRows& rows) {
  const int m = static_cast<int>(rows.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (rows[static_cast<size_t>(a)] & (1u << b))
        if ((rows[static_cast<size_t>(b)] & ~rows[static_cast<size_t>(a)]) != 0)
          return false;
  return true;
}

inline void close_transitively(RelRows& rows) {
  const int m = static_cast<int>(rows.size());
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      if (rows[static_cast<size_t>(a)] & (1u << k))
        rows[static_cast<size_t>(a)] |= rows[static_cast<size_t>(k)];
}

// Complete + transitive + reflexive rows describe a weak order; level of a
// equals the number of alternatives strictly preferred to a, dense-ranked.
std::optional<WeakOrder> rows_to_order(const RelRows& rows);

}  // namespace preflab::detail
