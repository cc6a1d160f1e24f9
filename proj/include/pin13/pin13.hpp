#pragma once

#include "pin13/dirac.hpp"
#include "pin13/frames.hpp"
#include "pin13/json_io.hpp"
#include "pin13/lorentz.hpp"
#include "pin13/matrix.hpp"
#include "pin13/rng.hpp"
#include "pin13/sl2c.hpp"
#include "pin13/spintensor.hpp"
#include "pin13/verify.hpp"
