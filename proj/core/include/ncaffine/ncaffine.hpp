#pragma once

#include "ncaffine/errors.hpp"
#include "ncaffine/coeffs.hpp"
#include "ncaffine/qcomb.hpp"
#include "ncaffine/algebra.hpp"
#include "ncaffine/ncpoly.hpp"
#include "ncaffine/affine.hpp"
#include "ncaffine/commute.hpp"
#include "ncaffine/cache.hpp"
#include "ncaffine/identities.hpp"
#include "ncaffine/linsolve.hpp"
#include "ncaffine/center.hpp"
#include "ncaffine/expr.hpp"
#include "ncaffine/bench.hpp"
