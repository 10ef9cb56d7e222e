#pragma once

// Umbrella header for the overlapping-permutation graph toolkit.

#include "opg/census.hpp"
#include "opg/claims.hpp"
#include "opg/export.hpp"
#include "opg/overlap_graph.hpp"
#include "opg/parallel.hpp"
#include "opg/permutation.hpp"
#include "opg/report.hpp"
#include "opg/walk_theory.hpp"
