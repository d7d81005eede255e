#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// Base class for all errors raised by the library. `code()` is a stable
/// machine-readable token; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse-error", msg) {}
};

struct ZeroDegreeVertex : Error {
  explicit ZeroDegreeVertex(int v)
      : Error("zero-degree-vertex", "vertex " + std::to_string(v) + " has zero weighted degree"),
        vertex(v) {}
  int vertex;
};

struct ZeroFunction : Error {
  ZeroFunction() : Error("zero-function", "vertex function vanishes against the degree weights") {}
};

struct WeightedInput : Error {
  explicit WeightedInput(const std::string& msg) : Error("weighted-input", msg) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& msg) : Error("no-convergence", msg) {}
};

struct SizeCap : Error {
  SizeCap(int order, int cap)
      : Error("size-cap", "matrix order " + std::to_string(order) + " exceeds solver cap " +
                              std::to_string(cap)) {}
};

struct Disconnected : Error {
  explicit Disconnected(const std::string& msg) : Error("disconnected", msg) {}
};

struct IsolatedCell : Error {
  explicit IsolatedCell(long id)
      : Error("isolated-cell", "cell " + std::to_string(id) + " intersects no other cell"), cell_id(id) {}
  long cell_id;
};

struct InexactCover : Error {
  explicit InexactCover(double defect)
      : Error("inexact-cover", "exactness defect " + std::to_string(defect) + " exceeds gate"),
        defect(defect) {}
  double defect;
};

struct BadEta : Error {
  explicit BadEta(double eta)
      : Error("bad-eta", "Neumann floor must be positive, got " + std::to_string(eta)) {}
};

struct NotTwoFold : Error {
  NotTwoFold(double point, int count)
      : Error("not-two-fold", "point " + std::to_string(point) + " is covered " +
                                  std::to_string(count) + " times"),
        witness(point), coverage(count) {}
  double witness;
  int coverage;
};

struct NonOrientableArtifact : Error {
  explicit NonOrientableArtifact(const std::string& msg) : Error("non-orientable-artifact", msg) {}
};

struct UnknownFamily : Error {
  explicit UnknownFamily(const std::string& name)
      : Error("unknown-family", "no graph family named '" + name + "'") {}
};

struct RootBracketFailure : Error {
  RootBracketFailure(double lo, double hi, const std::string& msg)
      : Error("root-bracket-failure",
              msg + " on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]") {}
};

struct NotLengthBalanced : Error {
  explicit NotLengthBalanced(const std::string& msg) : Error("not-length-balanced", msg) {}
};

struct NonManifoldFacet : Error {
  explicit NonManifoldFacet(const std::string& facet)
      : Error("non-manifold-facet", "facet {" + facet + "} shared by more than two simplices") {}
};

struct DegenerateSimplex : Error {
  explicit DegenerateSimplex(int index)
      : Error("degenerate-simplex", "simplex " + std::to_string(index) + " has (near) zero volume"),
        simplex(index) {}
  int simplex;
};

struct TooSmall : Error {
  explicit TooSmall(const std::string& msg) : Error("too-small", msg) {}
};

}  // namespace spectral
