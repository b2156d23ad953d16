#pragma once

#include "qhg/degeneration.hpp"
#include "qhg/riccati_check.hpp"
#include "qhg/series.hpp"
#include "qhg/systems.hpp"
