#pragma once

#include "catalog.hpp"
#include "complex.hpp"
#include "concordance.hpp"
#include "cone.hpp"
#include "f2.hpp"
#include "finite.hpp"
#include "flavors.hpp"
#include "flip.hpp"
#include "json_io.hpp"
#include "model.hpp"
#include "plumbing.hpp"
#include "rational.hpp"
#include "reduction.hpp"
#include "region.hpp"
