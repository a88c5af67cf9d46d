#pragma once

#include "sepdim/degeneracy.hpp"
#include "sepdim/degenerate_cover.hpp"
#include "sepdim/error.hpp"
#include "sepdim/family_io.hpp"
#include "sepdim/generators.hpp"
#include "sepdim/graph.hpp"
#include "sepdim/interval_order.hpp"
#include "sepdim/lower_bound.hpp"
#include "sepdim/lower_bound_harness.hpp"
#include "sepdim/permutation.hpp"
#include "sepdim/poset.hpp"
#include "sepdim/poset_io.hpp"
#include "sepdim/subdivision.hpp"
#include "sepdim/subdivision_cover.hpp"
#include "sepdim/suitability.hpp"
#include "sepdim/three_suitable.hpp"
