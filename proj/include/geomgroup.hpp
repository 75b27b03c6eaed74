#pragma once

#include "geomgroup/address.hpp"
#include "geomgroup/bv.hpp"
#include "geomgroup/constructions.hpp"
#include "geomgroup/enumerate.hpp"
#include "geomgroup/errors.hpp"
#include "geomgroup/free_word.hpp"
#include "geomgroup/generator.hpp"
#include "geomgroup/ld.hpp"
#include "geomgroup/operators.hpp"
#include "geomgroup/presentations.hpp"
#include "geomgroup/realization.hpp"
#include "geomgroup/seeds.hpp"
#include "geomgroup/tree.hpp"
