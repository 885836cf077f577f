#pragma once

#include <complex>
#include <vector>

#include "ffgeom/field.hpp"

namespace ffgeom {

/// Absolute trace Tr(x) = x + x^p + ... + x^{p^{k-1}}, an element of the prime subfield.
std::uint32_t absolute_trace(const Field& field, Fe x);

/// The canonical nontrivial additive character chi(x) = exp(2*pi*i*Tr(x)/p).
class CharacterTable {
 public:
  explicit CharacterTable(const Field& field);

  const std::complex<double>& operator()(Fe x) const { return values_[x.v]; }
  std::uint32_t trace(Fe x) const { return trace_[x.v]; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<std::uint32_t> trace_;
  std::vector<std::complex<double>> values_;
};

}  // namespace ffgeom
