#pragma once

#include "gfc/blade.hpp"
#include "gfc/cayley.hpp"
#include "gfc/cocycle.hpp"
#include "gfc/contraction.hpp"
#include "gfc/errors.hpp"
#include "gfc/forms.hpp"
#include "gfc/hopf.hpp"
#include "gfc/io.hpp"
#include "gfc/matrix.hpp"
#include "gfc/multivector.hpp"
#include "gfc/rational.hpp"
#include "gfc/scalar.hpp"
#include "gfc/signature.hpp"
#include "gfc/tensor.hpp"
