#pragma once

#include "brsym/cyclotomic.hpp"
#include "brsym/dicyclic.hpp"
#include "brsym/characters.hpp"
#include "brsym/orbits.hpp"
#include "brsym/symmetrize.hpp"
#include "brsym/linalg.hpp"
#include "brsym/obasis.hpp"
#include "brsym/harness.hpp"
