#ifndef TWL_TWL_HPP
#define TWL_TWL_HPP

#include "twl/apoly.hpp"
#include "twl/chebyshev.hpp"
#include "twl/laurent.hpp"
#include "twl/mat2.hpp"
#include "twl/numeric.hpp"
#include "twl/polyops.hpp"
#include "twl/ratfunc.hpp"
#include "twl/riley.hpp"
#include "twl/volume.hpp"
#include "twl/words.hpp"

#endif  // TWL_TWL_HPP
