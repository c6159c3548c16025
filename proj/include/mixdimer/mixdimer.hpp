#ifndef MIXDIMER_MIXDIMER_HPP
#define MIXDIMER_MIXDIMER_HPP

#include "mixdimer/errors.hpp"
#include "mixdimer/model.hpp"
#include "mixdimer/jacobi.hpp"
#include "mixdimer/oracle.hpp"
#include "mixdimer/thermo.hpp"
#include "mixdimer/grid.hpp"
#include "mixdimer/phases.hpp"
#include "mixdimer/caloric.hpp"
#include "mixdimer/scan.hpp"
#include "mixdimer/table.hpp"
#include "mixdimer/svg.hpp"
#include "mixdimer/validation.hpp"

#endif
