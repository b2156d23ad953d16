#pragma once

#include "weylrep/cartan.hpp"
#include "weylrep/catalog.hpp"
#include "weylrep/claims.hpp"
#include "weylrep/goldens.hpp"
#include "weylrep/representation.hpp"
#include "weylrep/roots.hpp"
#include "weylrep/verify.hpp"
