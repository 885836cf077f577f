#include "ffgeom/fourier.hpp"

#include <algorithm>

namespace ffgeom {

namespace {

void require_plane(const PointSet& s) {
  if (s.dim() != 2) throw Error(Errc::DimensionMismatch, "Fourier machinery is planar");
}

}  // namespace

double FourierTable::plancherel_sum() const {
  double s = 0;
  for (const auto& v : values) s += std::norm(v);
  return s;
}

FourierTable fourier_transform(const PointSet& F, const CharacterTable& chi) {
  require_plane(F);
  const Field& f = F.field();
  const std::uint32_t q = f.q();
  FourierTable t;
  t.q = q;
  t.values.assign(static_cast<std::size_t>(q) * q, {0.0, 0.0});
  const double scale = 1.0 / (static_cast<double>(q) * q);
  for (std::uint32_t b = 0; b < q; ++b) {
    for (std::uint32_t a = 0; a < q; ++a) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t i = 0; i < F.size(); ++i) {
        const auto x = F[i];
        const Fe dot = f.add(f.mul(Fe{a}, x[0]), f.mul(Fe{b}, x[1]));
        acc += chi(f.neg(dot));
      }
      t.values[a + static_cast<std::size_t>(q) * b] = acc * scale;
    }
  }
  return t;
}

FourierTable fourier_transform(const PointSet& F) { return fourier_transform(F, CharacterTable(F.field())); }

std::vector<std::complex<double>> inverse_transform(const FourierTable& table, const Field& f,
                                                    const CharacterTable& chi) {
  const std::uint32_t q = table.q;
  std::vector<std::complex<double>> out(static_cast<std::size_t>(q) * q);
  for (std::uint32_t x2 = 0; x2 < q; ++x2) {
    for (std::uint32_t x1 = 0; x1 < q; ++x1) {
      std::complex<double> acc{0.0, 0.0};
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t a = 0; a < q; ++a) {
          const Fe dot = f.add(f.mul(Fe{a}, Fe{x1}), f.mul(Fe{b}, Fe{x2}));
          acc += table.values[a + static_cast<std::size_t>(q) * b] * chi(dot);
        }
      out[x1 + static_cast<std::size_t>(q) * x2] = acc;
    }
  }
  return out;
}

std::uint64_t DotProductSpectrum::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

DotProductSpectrum dot_spectrum(const PointSet& F, const PointSet& G) {
  require_plane(F);
  require_plane(G);
  if (!F.field().same_as(G.field())) throw Error(Errc::FieldMismatch, "F and G live over different fields");
  const Field& f = F.field();
  DotProductSpectrum s;
  s.counts.assign(f.q(), 0);
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto x = F[i];
    for (std::size_t j = 0; j < G.size(); ++j) {
      const auto y = G[j];
      ++s.counts[f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])).v];
    }
  }
  for (auto c : s.counts) s.energy += static_cast<unsigned __int128>(c) * c;
  return s;
}

std::uint64_t max_punctured(const PointSet& F) {
  require_plane(F);
  const Field& f = F.field();
  const std::uint32_t q = f.q();
  // Representatives (1, m) and (0, 1); a nonzero point lies on exactly one punctured line.
  std::vector<std::uint64_t> per_direction(q + 1, 0);
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto x = F[i];
    if (x[0].v == 0 && x[1].v == 0) continue;
    const std::uint32_t dir = x[0].v == 0 ? q : f.mul(x[1], f.inv_unchecked(x[0])).v;
    ++per_direction[dir];
  }
  return *std::max_element(per_direction.begin(), per_direction.end());
}

L2Report l2_bound_check(const PointSet& F, const PointSet& G) {
  require_plane(F);
  const Point origin{Fe{0}, Fe{0}};
  if (F.contains(origin)) throw Error(Errc::OriginInF, "hypothesis requires 0 not in F");
  L2Report r;
  r.q = F.field().q();
  r.size_f = F.size();
  r.size_g = G.size();
  r.spectrum = dot_spectrum(F, G);
  r.max_punctured = max_punctured(F);
  using U = unsigned __int128;
  const U fg = static_cast<U>(r.size_f) * r.size_g;
  r.bound_main = Rational(static_cast<std::int64_t>(fg * fg), r.q);
  r.bound_error_term = static_cast<U>(r.q) * fg * r.max_punctured;
  // q * energy <= |F|^2|G|^2 + q * (q |F||G| M)
  r.satisfied = static_cast<U>(r.q) * r.spectrum.energy <= fg * fg + static_cast<U>(r.q) * r.bound_error_term;
  return r;
}

}  // namespace ffgeom
