#ifndef NEARCONV_NEARCONV_HPP
#define NEARCONV_NEARCONV_HPP

#include "types.hpp"
#include "rational.hpp"
#include "seq.hpp"
#include "hull.hpp"
#include "convex_minplus.hpp"
#include "ntt.hpp"
#include "sumset.hpp"
#include "nearconvex_minplus.hpp"
#include "knapsack.hpp"
#include "oracles.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "bench.hpp"
#include "acceptance.hpp"

#endif  // NEARCONV_NEARCONV_HPP
