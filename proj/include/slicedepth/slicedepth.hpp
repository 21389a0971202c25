#pragma once

#include "slicedepth/classify.hpp"
#include "slicedepth/continued_fraction.hpp"
#include "slicedepth/errors.hpp"
#include "slicedepth/fraction.hpp"
#include "slicedepth/knot_table.hpp"
#include "slicedepth/notation.hpp"
#include "slicedepth/pell.hpp"
#include "slicedepth/word.hpp"
