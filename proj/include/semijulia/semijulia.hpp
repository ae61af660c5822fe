#pragma once

#include "semijulia/error.hpp"
#include "semijulia/polynomial.hpp"
#include "semijulia/generator.hpp"
#include "semijulia/grid.hpp"
#include "semijulia/raster_ops.hpp"
#include "semijulia/pullback.hpp"
#include "semijulia/semigroup.hpp"
#include "semijulia/raster_dynamics.hpp"
#include "semijulia/topology.hpp"
#include "semijulia/constructions.hpp"
#include "semijulia/json_io.hpp"
#include "semijulia/verify.hpp"
