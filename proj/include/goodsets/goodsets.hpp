#pragma once

#include "goodsets/analysis.hpp"
#include "goodsets/core.hpp"
#include "goodsets/errors.hpp"
#include "goodsets/families.hpp"
#include "goodsets/io.hpp"
#include "goodsets/linalg.hpp"
#include "goodsets/matrix.hpp"
#include "goodsets/rational.hpp"
#include "goodsets/solver.hpp"
#include "goodsets/union_find.hpp"
