#include "questopt/charfn.hpp"

#include <cmath>

#include "questopt/errors.hpp"

namespace questopt {

double evaluate(CharFn fn, const ProblemTable &table) {
  switch (fn) {
  case CharFn::Entropy:
    return entropy(table);
  case CharFn::Compactness:
    return compactness(table);
  case CharFn::CostEntropy:
    return cost_entropy(table);
  }
  throw InternalInvariantError("unknown characteristic function");
}

CharFnBounds char_fn_bounds(CharFn fn, int n, int r) {
  switch (fn) {
  case CharFn::Entropy:
    return {0.0, std::log2(static_cast<double>(n))};
  case CharFn::Compactness: {
    const double pow2r = std::ldexp(1.0, r);
    return {r / pow2r, pow2r / r};
  }
  case CharFn::CostEntropy:
    return {0.0, std::log2(static_cast<double>(r))};
  }
  throw InternalInvariantError("unknown characteristic function");
}

std::string to_string(CharFn fn) {
  switch (fn) {
  case CharFn::Entropy:
    return "entropy";
  case CharFn::Compactness:
    return "compactness";
  case CharFn::CostEntropy:
    return "cost-entropy";
  }
  throw InternalInvariantError("unknown characteristic function");
}

CharFn char_fn_from_string(const std::string &name) {
  if (name == "entropy")
    return CharFn::Entropy;
  if (name == "compactness")
    return CharFn::Compactness;
  if (name == "cost-entropy")
    return CharFn::CostEntropy;
  throw MalformedError("unknown characteristic function: " + name);
}

} // namespace questopt
