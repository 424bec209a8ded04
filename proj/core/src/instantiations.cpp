#include "gfc/cocycle.hpp"

namespace gfc {

template class Multivector<Rational>;
template class Multivector<double>;
template class Tensor<Rational, 2>;
template class Tensor<Rational, 3>;
template class Tensor<double, 2>;
template class Tensor<double, 3>;
template class ExtendedForm<Rational>;
template class ExtendedForm<double>;
template class GeneralBF<Rational>;
template class GeneralBF<double>;

}  // namespace gfc
