#pragma once

#include <string>
#include <vector>

#include "argeq/framework.hpp"
#include "argeq/gr_engine.hpp"
#include "argeq/semantics.hpp"

// Built-in example networks used by the demos and the test suites.
namespace argeq::fixtures {

/// X -> Y -> W, W <-> Z.
Framework fig6();
/// Seeds for the three worked cases on fig6(): crisp-compatible cycle,
/// illegal Y, and a preferred extension.
Valuation fig6_case(int which);

/// A -> B -> C -> A, B -> X, X <-> Y, isolated Z.
Framework fig9_left();
/// X <-> Y, X -> B, A -> B -> C -> A, isolated Z.
Framework fig9_right();

struct NamedSeed {
  std::string label;
  Framework framework;
  Valuation seed;
};

/// L1, L2, R1, R2 in that order.
std::vector<NamedSeed> fig9_cases();

/// X <-> Y.
Framework two_cycle();
/// A -> B -> C -> A.
Framework three_cycle();
/// X <-> Y, Z -> W, W -> Z, Z -> Z.
Framework min_product_example();
/// X -> X.
Framework self_loop();
/// Att(N) = {P, Q}, Att(P) = {N}, Att(Q) = {P, N}.
Framework npq();
/// X1 -> X2 -> ... -> Xn.
Framework chain(std::size_t n);

/// Arguments a, b, c, d with attacks a->b, b->c, c->c.
Framework adf_framework();
/// C_a = T, C_b = a, C_c = c & b, C_d = !d.
std::vector<AcceptanceCondition> adf_conditions();

}  // namespace argeq::fixtures
