#pragma once

#include "eulerquad/errors.hpp"
#include "eulerquad/expr.hpp"
#include "eulerquad/improper.hpp"
#include "eulerquad/indicator.hpp"
#include "eulerquad/parse.hpp"
#include "eulerquad/qsqrt2.hpp"
#include "eulerquad/quadrature.hpp"
#include "eulerquad/rational.hpp"
#include "eulerquad/report_json.hpp"
#include "eulerquad/summation.hpp"
#include "eulerquad/taylor.hpp"
