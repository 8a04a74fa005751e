#pragma once

#include "globalzeta/analytic_kernel.hpp"
#include "globalzeta/errors.hpp"
#include "globalzeta/fe_verifier.hpp"
#include "globalzeta/field_catalog.hpp"
#include "globalzeta/field_spec.hpp"
#include "globalzeta/finite_field.hpp"
#include "globalzeta/number_format.hpp"
#include "globalzeta/report_io.hpp"
#include "globalzeta/zeta_engine.hpp"
