#pragma once

// Umbrella header for the whole library.

#include "symres/errors.hpp"
#include "symres/fp.hpp"
#include "symres/matrix.hpp"
#include "symres/parser.hpp"
#include "symres/poly.hpp"
#include "symres/projective.hpp"
#include "symres/rational.hpp"
#include "symres/resultant.hpp"
#include "symres/scan.hpp"
#include "symres/symprod.hpp"
#include "symres/tables.hpp"
#include "symres/vartable.hpp"
#include "symres/verify.hpp"
