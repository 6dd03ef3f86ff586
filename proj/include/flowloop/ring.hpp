#pragma once

// Exact two-variable arithmetic and q-combinatorics.
#include "flowloop/bifurcation.hpp"
#include "flowloop/half_int.hpp"
#include "flowloop/qcombinatorics.hpp"
#include "flowloop/qlaurent.hpp"
#include "flowloop/xseries.hpp"
