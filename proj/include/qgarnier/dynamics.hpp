#pragma once

#include "dynamics/charts.hpp"
#include "dynamics/orbit.hpp"
#include "dynamics/riccati.hpp"
