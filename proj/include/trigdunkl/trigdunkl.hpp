#pragma once

#include "coeff.hpp"
#include "dunkl.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "rootsys.hpp"
#include "special.hpp"
#include "verify.hpp"
