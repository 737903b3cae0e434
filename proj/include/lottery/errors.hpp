#pragma once

#include <stdexcept>
#include <string>

namespace lottery {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BlockSizeMismatch : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct MethodUnsupported : Error { using Error::Error; };
struct NotIndependent : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct OutOfTableRange : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct CorruptCache : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace lottery
