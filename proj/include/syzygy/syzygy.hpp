#pragma once

#include "syzygy/arrangement.hpp"
#include "syzygy/curvefit.hpp"
#include "syzygy/elliptic.hpp"
#include "syzygy/error.hpp"
#include "syzygy/json_io.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/projective.hpp"
#include "syzygy/rational.hpp"
#include "syzygy/sampling.hpp"
#include "syzygy/secant.hpp"
#include "syzygy/svg_render.hpp"
