#include "ffgeom/character.hpp"

#include <numbers>

namespace ffgeom {

std::uint32_t absolute_trace(const Field& field, Fe x) {
  Fe sum = field.zero();
  Fe frob = x;
  for (std::uint32_t i = 0; i < field.k(); ++i) {
    sum = field.add(sum, frob);
    frob = field.pow(frob, field.p());
  }
  // The trace lies in GF(p), whose elements are encoded by their constant digit.
  return sum.v;
}

CharacterTable::CharacterTable(const Field& field) : trace_(field.q()), values_(field.q()) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(field.p());
  // Exact unit roots by trace value; avoids drift from repeated multiplication.
  std::vector<std::complex<double>> roots(field.p());
  for (std::uint32_t t = 0; t < field.p(); ++t) roots[t] = std::polar(1.0, step * static_cast<double>(t));
  for (std::uint32_t a = 0; a < field.q(); ++a) {
    trace_[a] = absolute_trace(field, Fe{a});
    values_[a] = roots[trace_[a]];
  }
}

}  // namespace ffgeom
