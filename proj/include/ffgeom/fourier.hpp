#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ffgeom/character.hpp"
#include "ffgeom/point_set.hpp"
#include "ffgeom/rational.hpp"

namespace ffgeom {

/// F^(xi) = q^-2 sum_x F(x) chi(-xi.x), indexed by the packed index of xi.
struct FourierTable {
  std::uint32_t q = 0;
  std::vector<std::complex<double>> values;

  const std::complex<double>& at(Fe xi1, Fe xi2) const { return values[xi1.v + static_cast<std::size_t>(q) * xi2.v]; }
  double plancherel_sum() const;
};

/// Direct evaluation, Theta(q^2 |F|).
FourierTable fourier_transform(const PointSet& F, const CharacterTable& chi);
FourierTable fourier_transform(const PointSet& F);

/// sum_xi F^(xi) chi(xi.x) for every x in packed order; recovers the indicator of F.
std::vector<std::complex<double>> inverse_transform(const FourierTable& table, const Field& field,
                                                    const CharacterTable& chi);

struct DotProductSpectrum {
  std::vector<std::uint64_t> counts;  ///< nu(t), t in [0, q)
  unsigned __int128 energy = 0;       ///< sum_t nu(t)^2

  std::uint64_t total() const;
};

/// Pair-exhaustive nu(t) = |{(x, y) in F x G : x.y = t}|. Throws FieldMismatch, DimensionMismatch.
DotProductSpectrum dot_spectrum(const PointSet& F, const PointSet& G);

/// max over x != 0 of |F ∩ l_x|, l_x = {s x : s != 0}; one representative per
/// punctured line through the origin.
std::uint64_t max_punctured(const PointSet& F);

struct L2Report {
  std::uint32_t q = 0;
  std::uint64_t size_f = 0;
  std::uint64_t size_g = 0;
  DotProductSpectrum spectrum;
  std::uint64_t max_punctured = 0;
  Rational bound_main;                  ///< |F|^2 |G|^2 / q
  unsigned __int128 bound_error_term = 0;  ///< q |F| |G| max_punctured
  bool satisfied = true;
};

/// Energy against |F|^2|G|^2/q + q|F||G| max|F ∩ l_x|, compared after
/// multiplying through by q. Throws OriginInF when 0 is in F.
L2Report l2_bound_check(const PointSet& F, const PointSet& G);

}  // namespace ffgeom
