#pragma once

#include <stdexcept>
#include <string>

namespace vmesh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry / tessellation
struct TooFewSites : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct SiteOutsideBox : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct MixedTessellation : Error { using Error::Error; };

// descriptors / proximity
struct SchemaMismatch : Error { using Error::Error; };
struct DegeneratePolygon : Error { using Error::Error; };
struct OutOfImageBounds : Error { using Error::Error; };
struct StencilOutOfBounds : Error { using Error::Error; };

// ingestion
struct FileNotFound : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct CorruptHeader : Error { using Error::Error; };
struct ImageTooSmall : Error { using Error::Error; };

} // namespace vmesh
