#pragma once

#include <string>

#include "flatsurf/builders.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

// Surface JSON:
//   {"name": str,
//    "polygons": [{"vertices": [[x,y],...]}, ...],
//    "gluings": [[[p,e],[p2,e2]], ...]}
// Numbers are written losslessly (round-trip exact). The reader checks the
// structure and index ranges; geometric validation is validate().
std::string surface_to_json(const TranslationSurface& s);
TranslationSurface surface_from_json(const std::string& text);

void save_surface(const TranslationSurface& s, const std::string& path);
TranslationSurface load_surface(const std::string& path);

// Rational polygon JSON, either
//   {"angles": [[num,den],...], "lengths": [...], "first_direction": [num,den]?}
// or
//   {"vertices": [[x,y],...]}
// in which case the angles are snapped to rational multiples of pi.
RationalPolygonSpec polygon_spec_from_json(const std::string& text);
RationalPolygonSpec load_polygon_spec(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace flatsurf
