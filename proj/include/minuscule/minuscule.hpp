#pragma once

#include "minuscule/cartan.hpp"
#include "minuscule/cde.hpp"
#include "minuscule/element_set.hpp"
#include "minuscule/error.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/ideals.hpp"
#include "minuscule/io.hpp"
#include "minuscule/orbit.hpp"
#include "minuscule/rational.hpp"
#include "minuscule/simplex.hpp"
#include "minuscule/stats.hpp"
#include "minuscule/verify.hpp"
