#pragma once

// Umbrella header for the whole library.

#include "spfc/amplitude.hpp"
#include "spfc/csv.hpp"
#include "spfc/design.hpp"
#include "spfc/figures.hpp"
#include "spfc/json_io.hpp"
#include "spfc/oracle.hpp"
#include "spfc/params.hpp"
#include "spfc/sagnac.hpp"
#include "spfc/scattering.hpp"
#include "spfc/sweep.hpp"
#include "spfc/verify.hpp"
