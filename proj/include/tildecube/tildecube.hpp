#pragma once

// Umbrella header.

#include "tildecube/counting.hpp"
#include "tildecube/cube.hpp"
#include "tildecube/distance.hpp"
#include "tildecube/graph_io.hpp"
#include "tildecube/isometry.hpp"
#include "tildecube/parallel.hpp"
#include "tildecube/table1_reference.hpp"
#include "tildecube/word.hpp"
