#pragma once

#include <stdexcept>
#include <string>

namespace zf {

// Malformed textual input. line() is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    Header,         // first line is not "n m"
    EdgeSyntax,     // edge line is not two decimals separated by one space
    EndpointOrder,  // edge line with u >= v
    VertexRange,    // vertex id outside [0, n)
    SelfLoop,
    DuplicateEdge,
    LineCount,      // line count disagrees with the header
    BagSyntax,      // decomposition line is not an ascending id list
    Certificate,    // certificate text fails schema or hash checks
  };

  ParseError(Kind kind, int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  enum class Kind {
    NotAZeroForcingSet,
    NotP1,
    NotACut,
    NotAComponent,
    NotAForcingArcSet,
    CutNotSources,
    CutIsWholeGraph,
    Disconnected,
    BudgetExceeded,
    NotProperInterval,
    BadIndex,
  };

  PreconditionError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A path decomposition axiom fails; the message carries the witness.
class DecompositionError : public std::runtime_error {
 public:
  enum class Axiom {
    VertexCoverage,
    EdgeCoverage,
    Contiguity,
    EmptyInteriorBag,
    StepSize,
    BagClassification,  // interior bag is neither an end set nor a vertex cut
  };

  DecompositionError(Axiom axiom, const std::string& what)
      : std::runtime_error(what), axiom_(axiom) {}

  Axiom axiom() const { return axiom_; }

 private:
  Axiom axiom_;
};

}  // namespace zf
