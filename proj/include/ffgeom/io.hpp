#pragma once

#include <iosfwd>
#include <string>

#include "ffgeom/point_set.hpp"

namespace ffgeom {

struct LoadedPointSet {
  PointSet points;
  std::size_t duplicates_removed = 0;
};

/// Point-set file: header "q=<p>[^k] d=<d> [modulus=c0,...,ck]", then one
/// comma-separated coordinate row per point; '#' starts a comment.
/// expected (optional) must agree with the header or FieldHeaderMismatch is thrown.
/// Other errors: ParseError, CoordinateOutOfRange (messages carry the line number).
LoadedPointSet read_pointset(std::istream& in, const FieldPtr& expected = nullptr);
LoadedPointSet load_pointset(const std::string& path, const FieldPtr& expected = nullptr);

void write_pointset(std::ostream& out, const PointSet& points);

/// "x,y[,...]" -> point of the given dimension.
Point parse_point(const std::string& text, const Field& field, unsigned d);

}  // namespace ffgeom
