#pragma once

// Exact rational scalars. All lattice and polynomial arithmetic in this
// library runs over mpq_class; nothing is ever rounded.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialized form used in reports and data files: "num" or "num/den".
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(std::string_view s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + std::string(s) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
  q.canonicalize();
  return q;
}

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

}  // namespace kummer
