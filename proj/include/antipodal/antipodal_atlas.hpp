#pragma once

// Umbrella header for the whole library.

#include "antipodal/errors.hpp"
#include "antipodal/rational.hpp"
#include "antipodal/linalg.hpp"
#include "antipodal/formula.hpp"
#include "antipodal/rootsys.hpp"
#include "antipodal/polyhedron.hpp"
#include "antipodal/quotients.hpp"
#include "antipodal/catalog.hpp"
#include "antipodal/antipodal.hpp"
#include "antipodal/oracle.hpp"
#include "antipodal/tables.hpp"
