#include "jacklab/quadrature.hpp"

namespace jacklab {

const GaussLegendre& gauss_legendre(int n) { return gauss_legendre_t<double>(n); }

}  // namespace jacklab
