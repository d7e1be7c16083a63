#ifndef HYPEROVAL_LAB_HYPEROVAL_LAB_HPP
#define HYPEROVAL_LAB_HYPEROVAL_LAB_HPP

#include "errors.hpp"
#include "field.hpp"
#include "embed.hpp"
#include "upoly.hpp"
#include "mpoly.hpp"
#include "taylor.hpp"
#include "parallel.hpp"
#include "hyperoval.hpp"
#include "curve.hpp"
#include "bivariate.hpp"
#include "absfactor.hpp"
#include "intersect.hpp"
#include "weil.hpp"
#include "report.hpp"
#include "verify.hpp"

#endif  // HYPEROVAL_LAB_HYPEROVAL_LAB_HPP
