// Umbrella header.
#pragma once

#include "concordia/angles.hpp"
#include "concordia/catalog.hpp"
#include "concordia/cooper.hpp"
#include "concordia/cyclotomic.hpp"
#include "concordia/dense_poly.hpp"
#include "concordia/errors.hpp"
#include "concordia/fourier.hpp"
#include "concordia/gridsolve.hpp"
#include "concordia/intmatrix.hpp"
#include "concordia/io.hpp"
#include "concordia/jacobi.hpp"
#include "concordia/kronecker.hpp"
#include "concordia/laurent.hpp"
#include "concordia/numeric.hpp"
#include "concordia/obstructions.hpp"
#include "concordia/root_isolation.hpp"
#include "concordia/seifert.hpp"
#include "concordia/sigfn.hpp"
#include "concordia/signature.hpp"
