#pragma once

#include "twocurves/arrangement.hpp"
#include "twocurves/canonical.hpp"
#include "twocurves/catalog.hpp"
#include "twocurves/error.hpp"
#include "twocurves/generator.hpp"
#include "twocurves/oracle.hpp"
#include "twocurves/region_invariants.hpp"
#include "twocurves/render.hpp"
