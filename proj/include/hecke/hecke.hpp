#pragma once

#include "permutation.hpp"
#include "field_spec.hpp"
#include "cyclotomic.hpp"
#include "finite_field.hpp"
#include "scalar.hpp"
#include "hecke_algebra.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "basic_block.hpp"
#include "algebra_rep.hpp"
#include "projectivity.hpp"
#include "permutation_module.hpp"
#include "json_io.hpp"
#include "suite.hpp"
