#pragma once

// gtest printers for the library types.

#include <ostream>

#include "toda/toda.hpp"

namespace toda {

inline void PrintTo(const Partition& p, std::ostream* os) { *os << "(" << p.to_string() << ")"; }
inline void PrintTo(const YMonomial& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const YPolynomial& m, std::ostream* os) { *os << m.to_string(); }
template <class C>
void PrintTo(const TruncatedPoly<C>& f, std::ostream* os) { *os << f.to_string(); }

}  // namespace toda
