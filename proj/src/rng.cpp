#include "geci/rng.hpp"

#include "geci/stats.hpp"

namespace geci {

double Rng::next_normal() { return normal_quantile(next_open_double()); }

}  // namespace geci
