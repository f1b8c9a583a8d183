#pragma once

#include <stdexcept>
#include <string>

namespace irk {

// Thrown when interpret_ir_mor is handed a morphism with non-identity fibres.
struct NonSplitInput : std::runtime_error {
  explicit NonSplitInput(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an index set, object cardinality or enumeration outgrows the
// configured bound.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by fold when no fixed stage is available.
struct NotConverged : std::runtime_error {
  explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

// Composition of code morphisms with incompatible constructor shapes.
struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Exponentiation or bullet applied to a non-uniform code.
struct NotUniform : std::runtime_error {
  explicit NotUniform(const std::string& what) : std::runtime_error(what) {}
};

// Family operations with mismatched endpoints or ambient categories.
struct EndpointMismatch : std::runtime_error {
  explicit EndpointMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budgets for exhaustive sweeps.  Defaults keep the full suite
// comfortably under two minutes while still exercising the function-space
// sums of delta codes.
struct Budget {
  int max_index = 3;        // family index bound for object sweeps
  int max_pair_index = 2;   // family index bound for morphism-pair sweeps
  int max_objects = 3;      // how many ambient objects to range over
  int max_depth = 3;        // generated code depth
  long long max_enum = 200000;  // hard cap on any single enumeration
};

}  // namespace irk
