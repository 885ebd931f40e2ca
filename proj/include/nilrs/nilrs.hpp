#pragma once

#include "nilrs/ring/error.hpp"
#include "nilrs/ring/linear_form.hpp"
#include "nilrs/ring/parse.hpp"
#include "nilrs/ring/poly.hpp"
#include "nilrs/ring/rational.hpp"
#include "nilrs/ring/scalar.hpp"
#include "nilrs/ring/symbol.hpp"

#include "nilrs/forms/basis.hpp"
#include "nilrs/forms/kform.hpp"
#include "nilrs/forms/sym_tensor.hpp"
#include "nilrs/forms/vector_field.hpp"
#include "nilrs/forms/quad.hpp"

#include "nilrs/catalog/group.hpp"
#include "nilrs/catalog/metric.hpp"

#include "nilrs/curvature/frame_forms.hpp"
#include "nilrs/curvature/levi_civita.hpp"
#include "nilrs/curvature/numeric.hpp"

#include "nilrs/soliton/extended_scalar.hpp"
#include "nilrs/soliton/linear_solve.hpp"
#include "nilrs/soliton/residual.hpp"
#include "nilrs/soliton/solver.hpp"
#include "nilrs/soliton/theorems.hpp"

#include "nilrs/flow/flow.hpp"

#include "nilrs/report/compare.hpp"
#include "nilrs/report/fixtures.hpp"
