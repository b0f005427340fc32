// query_complexity.hpp
// Deterministic classical query complexity of properties of two-bit
// functions, by exhaustive search over adaptive decision trees.

#pragma once

#include "evenodd/oracles.hpp"

#include <functional>
#include <span>
#include <vector>

namespace evenodd {

// Maps a function to a verdict label; only equality of labels matters.
using Property = std::function<int(const TruthTable&)>;

// Minimum depth d such that some adaptive decision tree querying f at input
// points classifies every f in domain correctly. Throws std::invalid_argument
// on an empty domain or repeated tables.
int classical_min_queries(const Property& property, std::span<const TruthTable> domain);

// Over all 16 functions.
int classical_min_queries(const Property& property);

Property parity_property();
// Constant -> 0, Balanced -> 1, anything else -> 2.
Property dj_property();
// The eight functions satisfying the Deutsch-Jozsa promise.
std::vector<TruthTable> dj_promise_domain();

}  // namespace evenodd
