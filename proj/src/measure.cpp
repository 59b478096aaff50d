#include "bmeas/measure.hpp"

namespace bmeas {

std::vector<double> moments_double(double p, int max_order) {
    auto wide = moments_recurrence<Quad>(Quad(p), max_order);
    std::vector<double> out(wide.size());
    for (std::size_t k = 0; k < wide.size(); ++k) out[k] = narrow(wide[k]);
    return out;
}

}  // namespace bmeas
