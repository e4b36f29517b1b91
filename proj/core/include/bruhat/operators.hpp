// SPDX-License-Identifier: Apache-2.0
//
// Matrix realizations of the lowering operator Nabla and the raising operator
// Delta on the padded staircase space, and the suites that compare them with
// the weighted Bruhat graphs.
//
// Layer-matrix layout, used for graphs and operators alike: rows are the
// lower rank, columns the upper rank, and entry (x, y) is the coefficient
// linking x and y through the (hi - lo)-fold operator. For Delta that is the
// coefficient of y in Delta^(hi-lo) x; for Nabla it is the coefficient of x
// in Nabla^(hi-lo) y. In the permutation basis this equals m(x, y) for the
// matching graph.
#pragma once

#include "bruhat/int_matrix.hpp"
#include "bruhat/report.hpp"

#include <string_view>

namespace bruhat {

enum class Operator { Nabla, Delta };
enum class Basis { Monomial, PaddedSchubert };

struct OperatorSpec {
  Operator op;
  Basis basis;
  int n;
};

std::string_view to_string(Operator op);
std::string_view to_string(Basis basis);

/// The (hi - lo)-fold composite applied symbolically to every basis element.
/// Throws std::out_of_range unless 0 <= lo <= hi <= N.
IntMatrix differential_layer_matrix(const OperatorSpec& spec, int lo, int hi);

/// The same matrix assembled as a product of single-step layer matrices.
IntMatrix stepwise_layer_matrix(const OperatorSpec& spec, int lo, int hi);

/// Delta on padded Schubert polynomials against strong covers with code
/// weights; every coefficient must also be odd.
Report verify_delta_theorem(int n, int jobs = 1);

/// Nabla on padded Schubert polynomials against weak covers w s_i < w with
/// weight i. The report notes how many covers contradict a coefficient-free
/// reading of the action.
Report verify_nabla_theorem(int n, int jobs = 1);

/// [Delta, Nabla] acts on rank k as (2k - N) times the identity, checked in
/// the padded Schubert basis, the monomial basis and on the weighted graphs.
Report commutator_report(int n);
bool commutator_check(int n);

/// For every u in S_n the five quantities
///   m_Delta(u, w0)/(N-l)!, m_Nabla(e, u)/l!, S_u(1..1),
///   m_Delta(e, w0 u)/(N-l)!, m_Nabla(w0 u, w0)/l!
/// must coincide (exactly, including divisibility).
Report verify_path_identities(int n, int jobs = 1);

/// m_Nabla(e, u) = l(u)! S_u(1..1) for all u.
Report verify_macdonald(int n, int jobs = 1);

/// m(e, w0) = N! for the nabla, code and Chevalley weights.
Report verify_top_path_counts(int n);

/// Edge-level w0 symmetry for the three weight systems.
Report verify_w0_symmetry(int n);

/// Graph layer matrices equal the differential ones in the padded Schubert
/// basis, for every rank pair.
Report verify_graph_agreement(int n);

/// Nabla^|a| x^a y^(rho-a) = |a|! y^rho and
/// Delta^(N-|a|) x^a y^(rho-a) = (N-|a|)! x^rho for every alpha.
Report verify_extremal_powers(int n);

/// Monomial basis: Delta^[N-hi, N-lo] and Nabla^[lo, hi] are transposes
/// under alpha -> rho - alpha. Padded Schubert basis: Delta^[lo, hi] and
/// Delta^[N-hi, N-lo] are transposes under w -> w0 w.
bool transpose_duality_check(int n, int lo, int hi);

}  // namespace bruhat
