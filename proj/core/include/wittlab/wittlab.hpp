#pragma once

#include "wittlab/algebra.hpp"
#include "wittlab/derivations.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/json_io.hpp"
#include "wittlab/linear_map_table.hpp"
#include "wittlab/linear_system.hpp"
#include "wittlab/rational.hpp"
#include "wittlab/sparse_vector.hpp"
#include "wittlab/two_local.hpp"
