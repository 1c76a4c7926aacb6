#pragma once

#include <stdexcept>

namespace stylochron {

// Base class for all errors raised by the toolkit. Catching this at the
// CLI boundary is enough to distinguish data/processing failures (exit 2)
// from usage errors (exit 1).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct ValueError : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct MissingFile : Error { using Error::Error; };
struct EncodingError : Error { using Error::Error; };
struct MarkerOrderError : Error { using Error::Error; };
struct NotCodable : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace stylochron
