#pragma once

#include "alexposet/errors.hpp"
#include "alexposet/poset.hpp"
#include "alexposet/generators.hpp"
#include "alexposet/maps.hpp"
#include "alexposet/topology.hpp"
#include "alexposet/reduction.hpp"
#include "alexposet/homotopy.hpp"
#include "alexposet/smith.hpp"
#include "alexposet/complex.hpp"
#include "alexposet/io.hpp"
