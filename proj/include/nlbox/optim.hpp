#pragma once

#include "nlbox/quasiprob.hpp"
#include "nlbox/simplex.hpp"

namespace nlbox {

struct L1Result {
  double m_star;
  Jqpd jqpd;
};

/// Minimal L1 norm over all quasi-distributions whose marginals reproduce
/// `box`, together with one minimizer.
///
/// Each atom is split as q = u - v with u, v >= 0 and sum(u + v) is minimized
/// subject to the 16 marginal equations. Throws NoJqpdExists when the
/// equations are inconsistent, which happens exactly for signaling boxes.
L1Result min_l1(const Box& box);

LpProblem<double> min_l1_problem(const Box& box);

}  // namespace nlbox
