#ifndef TMSPLINE_IO_HPP
#define TMSPLINE_IO_HPP

#include <string>
#include <vector>

#include "tmspline/dimension.hpp"
#include "tmspline/mesh.hpp"
#include "tmspline/oracle.hpp"
#include "tmspline/smoothness.hpp"

namespace tmspline {

// Text formats.  All of them are line based, '#' starts a comment, blank
// lines are ignored, and every file opens with a "<kind> <version>" header.
// Parsers throw ParseError carrying the 1-based line and column.

// "tmesh 1" / "faces N" / N lines of "xmin ymin xmax ymax".  The writer
// appends the canonical vertex and edge tables as comments so smoothness
// overrides can be authored against stable ids.
std::string write_mesh(const TMesh& mesh);
TMesh parse_mesh(const std::string& text);

// "smoothness 1" / "default horizontal r" / "default vertical r" /
// "overrides K" / K lines of "edge_id order".  Defaults apply to interior
// edges; boundary edges stay at -1 and may only be overridden to -1.
std::string write_smoothness(const SmoothnessDistribution& dist);
SmoothnessDistribution parse_smoothness(const std::string& text, const TMesh& mesh);

// "certificate 1" / "degree m mp" / "provenance name" / "edges n" /
// "base ..." / "final ..." / "steps K" / step lines.  Weight steps read
// "step <target> edges <k> <ids> weight <w> <threshold>", containment steps
// "step <target> edges <k> <ids> container <k2> <ids>".
std::string write_certificate(const Certificate& certificate);
Certificate parse_certificate(const std::string& text);

// Export only: one block per basis function, one coefficient row per face in
// the s-major monomial order used everywhere else.
std::string write_basis(const std::vector<PiecewisePolynomial>& basis);

std::string read_file(const std::string& path); // Error when unreadable
void write_file(const std::string& path, const std::string& content);

} // namespace tmspline

#endif
