#pragma once

#include "roadm/clos_topology.hpp"
#include "roadm/eon_spectrum.hpp"
#include "roadm/errors.hpp"
#include "roadm/fullload_sim.hpp"
#include "roadm/lee_analytics.hpp"
#include "roadm/report.hpp"
#include "roadm/rng.hpp"
#include "roadm/version.hpp"
