#pragma once

#include "seed/automorphism.hpp"
#include "seed/confluence.hpp"
#include "seed/seed.hpp"
#include "seed/word.hpp"
