#ifndef TRI4_IO_HPP
#define TRI4_IO_HPP

#include <iosfwd>
#include <string>

#include "tri4/colouring.hpp"
#include "tri4/triangulation.hpp"

namespace tri4 {

// Canonical triangulation format (UTF-8, LF endings, bit-exact):
//
//   tri4 v1 <n>
//   types <n*5 digits>                   (only when types are present)
//   <p> <f> <q> <g> <perm>               one line per glued facet pair,
//                                        written from the lexicographically
//                                        smaller (p,f) side, sorted by (p,f)
//
// perm is five digits, the image slot of each slot 0..4. Unglued facets are
// omitted. Parse errors carry 1-based line numbers.
std::string write_triangulation(const Triangulation& tri);
Triangulation read_triangulation(std::istream& in);
Triangulation read_triangulation_file(const std::string& path);
void write_triangulation_file(const Triangulation& tri, const std::string& path);

// Colouring format:
//
//   colour v1
//   <p> <s> <c>                          one line per vertex class, keyed by
//                                        its representative corner, sorted
std::string write_colouring(const Triangulation& tri,
                            const FaceClasses& vertex_classes,
                            const Colouring& colouring);
Colouring read_colouring(std::istream& in, const Triangulation& tri,
                         const FaceClasses& vertex_classes);
Colouring read_colouring_file(const std::string& path, const Triangulation& tri,
                              const FaceClasses& vertex_classes);

} // namespace tri4

#endif
