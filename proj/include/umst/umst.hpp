#pragma once

// Minimum spanning trees under explorable uncertainty: umbrella header.

#include "umst/area.hpp"
#include "umst/errors.hpp"
#include "umst/generators.hpp"
#include "umst/geometry.hpp"
#include "umst/graph.hpp"
#include "umst/io.hpp"
#include "umst/mst.hpp"
#include "umst/opt_oracle.hpp"
#include "umst/rational.hpp"
#include "umst/u_red.hpp"
#include "umst/vertex_model.hpp"
