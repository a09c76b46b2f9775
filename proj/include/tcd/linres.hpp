#pragma once

// Analogue circuits as homogeneous linear relations with exact rational
// coefficients.
//
// Every wire is a port carrying a current i and a voltage v. Variables are
// ordered i_in1, v_in1, …, i_out1, v_out1, …, then derivative variables
// q1', q2', …, then state variables q1, q2, …. A state q_k and its
// derivative q_k' are tied only formally (a behaviour has q_k' = d/dt q_k).
//
// Sign convention: every two-terminal element relates the voltage drop
// v_in - v_out to its impedance term, and its current flows from the in
// port to the out port:
//   resistor r:  i_in = i_out, v_in - v_out = r i_in
//   capacitor c: i_in = i_out, v_in - v_out = q/c, q' = i_in
//   inductor l:  i_in = i_out, v_in - v_out = l p, state s = i_in, p = s'

#include <cstddef>
#include <string>
#include <vector>

#include "tcd/bindings.hpp"
#include "tcd/diagram.hpp"
#include "tcd/rational.hpp"

namespace tcd {

using Row = std::vector<Rational>;

class LinearSystem {
 public:
  /// Canonicalizes rows over the standard variables followed by `latent`
  /// extra columns, which are eliminated.
  LinearSystem(std::size_t in_ports, std::size_t out_ports, std::size_t states,
               std::vector<Row> rows, std::size_t latent = 0);

  std::size_t in_ports() const { return in_; }
  std::size_t out_ports() const { return out_; }
  std::size_t states() const { return states_; }
  std::size_t variable_count() const { return 2 * (in_ + out_) + 2 * states_; }

  std::size_t i_in(std::size_t k) const { return 2 * k; }
  std::size_t v_in(std::size_t k) const { return 2 * k + 1; }
  std::size_t i_out(std::size_t k) const { return 2 * (in_ + k); }
  std::size_t v_out(std::size_t k) const { return 2 * (in_ + k) + 1; }
  std::size_t deriv(std::size_t k) const { return 2 * (in_ + out_) + k; }
  std::size_t state(std::size_t k) const { return 2 * (in_ + out_) + states_ + k; }

  std::string variable_name(std::size_t var) const;

  /// Reduced row-echelon form, pivots 1, no zero rows.
  const std::vector<Row>& rows() const { return rows_; }
  /// Dimension of the solution space.
  std::size_t dimension() const { return variable_count() - rows_.size(); }

  bool operator==(const LinearSystem& other) const;

 private:
  std::size_t in_, out_, states_;
  std::vector<Row> rows_;
};

/// In-place reduced row-echelon form, pivoting through columns in the
/// given order. Returns the rank.
std::size_t rref(std::vector<Row>& rows, const std::vector<std::size_t>& column_order);

LinearSystem component_system(LinresKind kind, const Rational& value);

enum class WiringKind { Mul, Comul, Unit, Counit, Cup, Cap };
LinearSystem wiring_system(WiringKind kind);

LinearSystem identity_system(std::size_t ports);
/// Port swap taking m then n wires to n then m.
LinearSystem swap_system(std::size_t m, std::size_t n);

/// a then b. Throws InterfaceMismatch.
LinearSystem compose_systems(const LinearSystem& a, const LinearSystem& b);
LinearSystem tensor_systems(const LinearSystem& a, const LinearSystem& b);

/// One equation per line, "v_in1 - 2*i_in1 - v_out1 = 0" style.
std::string render(const LinearSystem& s);

/// Throws UnboundComponent, or InterfaceMismatch when a bound component is
/// not a single-wire element.
LinearSystem eval_linres(const Term& term, const Multigraph& mg, const LinresBindings& b);

}  // namespace tcd
