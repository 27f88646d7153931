#pragma once

// Umbrella header.

#include "gos/boundary.hpp"
#include "gos/builder.hpp"
#include "gos/census.hpp"
#include "gos/classify.hpp"
#include "gos/core.hpp"
#include "gos/errors.hpp"
#include "gos/families.hpp"
#include "gos/io.hpp"
#include "gos/orientability.hpp"
#include "gos/permutation.hpp"
#include "gos/svg.hpp"
