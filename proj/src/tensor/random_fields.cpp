#include "dnk/tensor/random_fields.hpp"

namespace dnk {

Scalar random_function(Rng& rng, const Chart& c, unsigned max_degree) {
    return random_poly_scalar(rng, c.dim(), max_degree);
}

VectorField random_vector_field(Rng& rng, const Chart& c, unsigned max_degree) {
    VectorField x(c);
    for (int i = 0; i < c.dim(); ++i) x[i] = random_function(rng, c, max_degree);
    return x;
}

PForm random_form(Rng& rng, const Chart& c, int degree, unsigned max_degree) {
    PForm w(c, degree);
    for (std::size_t pos = 0; pos < w.size(); ++pos) w.at(pos) = random_function(rng, c, max_degree);
    return w;
}

OneOneTensor random_oneone(Rng& rng, const Chart& c, unsigned max_degree) {
    OneOneTensor r(c);
    for (int i = 0; i < c.dim(); ++i)
        for (int j = 0; j < c.dim(); ++j) r.at(i, j) = random_function(rng, c, max_degree);
    return r;
}

Bivector random_bivector(Rng& rng, const Chart& c, unsigned max_degree) {
    Bivector p(c);
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i + 1; j < c.dim(); ++j) p.set(i, j, random_function(rng, c, max_degree));
    return p;
}

}  // namespace dnk
