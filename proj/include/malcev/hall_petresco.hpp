#pragma once

#include <vector>

#include "malcev/group.hpp"

namespace malcev {

// The universal words tau_2..tau_c over n generators xi_i = exp(X_i) in the
// truncated group of order c, defined by peeling integer specializations:
// at lambda = m the binomial exponents above m vanish, so
//   tau_m = [ (xi_0...xi_{n-1})^m tau_2^C(m,2) ... tau_{m-1}^C(m,m-1) ]^-1
//           . xi_0^m ... xi_{n-1}^m.
// Each tau_m has log-valuation >= m (asserted; a violation is a bug).
std::vector<GroupElement<Rational>> hall_petresco_tau(int n, int c);

// Exact symbolic check of the identity over Q[lambda] scalars:
//   xi_0^l ... xi_{n-1}^l = (xi_0...xi_{n-1})^l prod_{i=2..c} tau_i^C(l,i)
// in the truncated group of order c.
bool verify_hall_petresco(int n, int c);

}  // namespace malcev
