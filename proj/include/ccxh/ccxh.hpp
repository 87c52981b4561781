#pragma once

// Exact simulator for the {CCX, H} gate set: circuit evaluation as a binary
// tree of suspended computations, with pluggable collectors over the leaves.

#include "ccxh/amplitude.hpp"
#include "ccxh/circuit.hpp"
#include "ccxh/dense.hpp"
#include "ccxh/dot.hpp"
#include "ccxh/errors.hpp"
#include "ccxh/interpreter.hpp"
#include "ccxh/measurement.hpp"
#include "ccxh/prob.hpp"
#include "ccxh/render.hpp"
