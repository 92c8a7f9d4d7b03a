#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpbm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (duplicate ids, unknown endpoints, negative b, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale enumeration limit was hit. Not a statement about the polytope.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::size_t limit, std::size_t actual)
      : Error(cap_name + " cap exceeded: " + std::to_string(actual) + " > " +
              std::to_string(limit)),
        cap_name_(std::move(cap_name)),
        limit_(limit),
        actual_(actual) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::size_t actual_;
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration limits. Library enumerations default to 12 vertices / 20 edges,
/// feasibility enumerations to 16 vertices.
struct Limits {
  std::size_t max_vertices = 12;
  std::size_t max_edges = 20;

  static constexpr Limits enumeration() { return {12, 20}; }
  static constexpr Limits feasibility() { return {16, 20}; }
};

void check_vertex_cap(std::size_t vertices, const Limits& limits);
void check_edge_cap(std::size_t edges, const Limits& limits);

}  // namespace fpbm

#ifdef FPBM_CROSS_CHECKS
#define FPBM_CROSS_CHECK(cond, what)                                      \
  do {                                                                    \
    if (!(cond)) throw ::fpbm::InternalError(std::string("cross-check failed: ") + (what)); \
  } while (false)
#else
#define FPBM_CROSS_CHECK(cond, what) \
  do {                               \
  } while (false)
#endif
