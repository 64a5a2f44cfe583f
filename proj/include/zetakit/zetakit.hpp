#pragma once

#include "exact_core.hpp"
#include "zeta.hpp"
#include "gamma.hpp"
#include "constants.hpp"
#include "harmonic_asym.hpp"
#include "quad.hpp"
#include "series.hpp"
