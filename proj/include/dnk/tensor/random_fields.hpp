#ifndef DNK_TENSOR_RANDOM_FIELDS_HPP
#define DNK_TENSOR_RANDOM_FIELDS_HPP

#include "dnk/symbolic/random.hpp"
#include "dnk/tensor/fields.hpp"

namespace dnk {

// Random tensors with polynomial components of degree <= max_degree.
VectorField random_vector_field(Rng& rng, const Chart& c, unsigned max_degree);
PForm random_form(Rng& rng, const Chart& c, int degree, unsigned max_degree);
OneOneTensor random_oneone(Rng& rng, const Chart& c, unsigned max_degree);
Bivector random_bivector(Rng& rng, const Chart& c, unsigned max_degree);
Scalar random_function(Rng& rng, const Chart& c, unsigned max_degree);

}  // namespace dnk

#endif
