#ifndef TMSPLINE_ERRORS_HPP
#define TMSPLINE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmspline {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- mesh construction / queries --
struct OverlappingFaces : Error { using Error::Error; };
struct DisconnectedDomain : Error { using Error::Error; };
struct PointOnFaceBoundary : Error { using Error::Error; };
struct UnknownCell : Error { using Error::Error; };
struct NotASegment : Error { using Error::Error; };

// -- smoothness --
struct MeshMismatch : Error { using Error::Error; };
struct NotAReduction : Error { using Error::Error; };

// -- homology / oracle --
struct BoundaryEdge : Error { using Error::Error; };
struct BoundaryVertex : Error { using Error::Error; };

// -- certification --
struct NotBelowBase : Error { using Error::Error; };
struct BaseNotCertified : Error { using Error::Error; };
struct InvalidCertificate : Error { using Error::Error; };

// -- cli / file formats --
struct ParamOutOfRange : Error { using Error::Error; };

// Carries the 1-based position of the offending token.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

} // namespace tmspline

#endif
