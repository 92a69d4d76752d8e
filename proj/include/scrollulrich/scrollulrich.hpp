#pragma once

// Umbrella header for the scroll-ulrich verification engine.

#include <scrollulrich/version.hpp>
#include <scrollulrich/numeric.hpp>
#include <scrollulrich/scroll_params.hpp>
#include <scrollulrich/classes.hpp>
#include <scrollulrich/chow.hpp>
#include <scrollulrich/cohomology_interval.hpp>
#include <scrollulrich/surface_cohomology.hpp>
#include <scrollulrich/scroll_cohomology.hpp>
#include <scrollulrich/riemann_roch.hpp>
#include <scrollulrich/ulrich.hpp>
#include <scrollulrich/tower.hpp>
#include <scrollulrich/formula.hpp>
#include <scrollulrich/claims.hpp>
#include <scrollulrich/report.hpp>
