#pragma once

#include "quiver/catalog.hpp"
#include "quiver/io.hpp"
#include "quiver/quiver.hpp"
