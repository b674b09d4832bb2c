#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotpoly/poly2d.hpp"
#include "rotpoly/sysmodel.hpp"

namespace rotpoly {

enum class DocKind { polynomial, transfer_function, time_constants, state_space, poly2d };

/// A parsed input document. Exactly one payload is set, matching `kind`
/// (plus the optional 2D numerator for poly2d documents).
struct SystemDocument {
  DocKind kind = DocKind::polynomial;
  std::optional<PolySpec> polynomial;
  std::optional<TransferFunctionSpec> transfer_function;
  std::optional<TimeConstantForm> time_constants;
  std::optional<StateSpace> state_space;
  std::optional<Poly2DSpec> p2d;
  std::optional<Poly2DSpec> q2d;
};

/// Parses a JSON system document. Any structural, type, dimension, or
/// finiteness problem throws ParseError.
SystemDocument parse_document(const std::string& text);
SystemDocument parse_document(std::istream& in);

/// Document text for a transfer function, suitable for piping back into
/// any command that accepts one.
std::string serialize_transfer_function(const TransferFunctionSpec& tf);

/// Converts transfer_function, time_constants, or state_space documents to
/// a transfer function. Advisory messages (improper ratio, more numerator
/// time constants than denominator ones) are appended to *warnings when
/// given. Throws DomainError for document kinds without a transfer function.
TransferFunctionSpec to_transfer_function(const SystemDocument& doc,
                                          std::vector<std::string>* warnings = nullptr);

/// Transfer function of a state-space model via the Leverrier recursion;
/// leading zero numerator coefficients are trimmed.
TransferFunctionSpec tf_from_state_space(const StateSpace& ss);

/// Parses a matrix document for matpow: either a bare array of rows or an
/// object with field "A". Throws ParseError on malformed input.
SquareMatrix parse_matrix_document(const std::string& text);

/// 17 significant digits; parses back to the identical double. The one
/// formatting rule for all CSV output.
std::string format_double(double x);

}  // namespace rotpoly
