#include "rotpoly/document.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace rotpoly {

namespace {

using nlohmann::json;

std::vector<double> number_list(const json& node, const std::string& name) {
  if (!node.is_array()) throw ParseError("field '" + name + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) throw ParseError("field '" + name + "' must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> number_matrix(const json& node, const std::string& name) {
  if (!node.is_array() || node.empty()) {
    throw ParseError("field '" + name + "' must be a non-empty array of rows");
  }
  std::vector<std::vector<double>> out;
  out.reserve(node.size());
  for (const auto& row : node) {
    out.push_back(number_list(row, name));
  }
  return out;
}

const json& require(const json& doc, const std::string& name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError("missing required field '" + name + "'");
  return *it;
}

PolySpec parse_poly(const json& node, const std::string& name) {
  try {
    if (node.is_array()) return PolySpec(number_list(node, name));
    if (node.is_object()) {
      std::vector<double> re = number_list(require(node, "coeff_real"), name + ".coeff_real");
      if (node.contains("coeff_imag")) {
        return PolySpec(std::move(re),
                        number_list(node.at("coeff_imag"), name + ".coeff_imag"));
      }
      return PolySpec(std::move(re));
    }
  } catch (const SpecError& e) {
    throw ParseError("field '" + name + "': " + e.what());
  }
  throw ParseError("field '" + name + "' must be a coefficient array or object");
}

double parse_gain(const json& doc) {
  if (!doc.contains("gain")) return 1.0;
  if (!doc.at("gain").is_number()) throw ParseError("field 'gain' must be a number");
  return doc.at("gain").get<double>();
}

SystemDocument parse_object(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  const json& kind_node = require(doc, "kind");
  if (!kind_node.is_string()) throw ParseError("field 'kind' must be a string");
  const std::string kind = kind_node.get<std::string>();

  SystemDocument out;
  try {
    if (kind == "polynomial") {
      out.kind = DocKind::polynomial;
      std::vector<double> re = number_list(require(doc, "coeff_real"), "coeff_real");
      if (doc.contains("coeff_imag")) {
        out.polynomial.emplace(std::move(re), number_list(doc.at("coeff_imag"), "coeff_imag"));
      } else {
        out.polynomial.emplace(std::move(re));
      }
    } else if (kind == "transfer_function") {
      out.kind = DocKind::transfer_function;
      out.transfer_function.emplace(parse_poly(require(doc, "numerator"), "numerator"),
                                    parse_poly(require(doc, "denominator"), "denominator"),
                                    parse_gain(doc));
    } else if (kind == "time_constants") {
      out.kind = DocKind::time_constants;
      out.time_constants.emplace(number_list(require(doc, "numerator"), "numerator"),
                                 number_list(require(doc, "denominator"), "denominator"));
    } else if (kind == "state_space") {
      out.kind = DocKind::state_space;
      const auto rows = number_matrix(require(doc, "A"), "A");
      const std::size_t n = rows.size();
      std::vector<double> flat;
      flat.reserve(n * n);
      for (const auto& row : rows) {
        if (row.size() != n) throw ParseError("field 'A' must be square");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      std::vector<double> b = number_list(require(doc, "B"), "B");
      std::vector<double> c = number_list(require(doc, "C"), "C");
      if (b.size() != n || c.size() != n) {
        throw ParseError("fields 'B' and 'C' must match the order of 'A'");
      }
      out.state_space.emplace(SquareMatrix(n, std::move(flat)), std::move(b), std::move(c));
    } else if (kind == "poly2d") {
      out.kind = DocKind::poly2d;
      out.p2d.emplace(Poly2DSpec::from_rows(number_matrix(require(doc, "P"), "P")));
      if (doc.contains("Q")) {
        out.q2d.emplace(Poly2DSpec::from_rows(number_matrix(doc.at("Q"), "Q")));
      }
    } else {
      throw ParseError("unknown document kind '" + kind + "'");
    }
  } catch (const SpecError& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  return out;
}

}  // namespace

SystemDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_object(doc);
}

SystemDocument parse_document(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

namespace {

json poly_to_json(const PolySpec& p) {
  if (p.kind() == CoeffKind::real) return json(p.alpha);
  return json{{"coeff_real", p.alpha}, {"coeff_imag", p.beta}};
}

PolySpec trim_leading_zeros(const PolySpec& p) {
  std::size_t first = 0;
  while (first + 1 < p.alpha.size() && p.alpha[first] == 0.0 && p.beta[first] == 0.0) {
    ++first;
  }
  return PolySpec(std::vector<double>(p.alpha.begin() + first, p.alpha.end()),
                  std::vector<double>(p.beta.begin() + first, p.beta.end()));
}

}  // namespace

std::string serialize_transfer_function(const TransferFunctionSpec& tf) {
  json doc{{"kind", "transfer_function"},
           {"numerator", poly_to_json(tf.numerator)},
           {"denominator", poly_to_json(tf.denominator)},
           {"gain", tf.gain}};
  return doc.dump();
}

TransferFunctionSpec tf_from_state_space(const StateSpace& ss) {
  const LeverrierResult lev = leverrier(ss);
  return TransferFunctionSpec(trim_leading_zeros(PolySpec(lev.q_coeffs)),
                              PolySpec(lev.p_coeffs));
}

TransferFunctionSpec to_transfer_function(const SystemDocument& doc,
                                          std::vector<std::string>* warnings) {
  switch (doc.kind) {
    case DocKind::transfer_function: {
      const TransferFunctionSpec& tf = *doc.transfer_function;
      if (warnings != nullptr && !tf.proper()) {
        warnings->push_back("numerator degree exceeds denominator degree");
      }
      return tf;
    }
    case DocKind::time_constants: {
      const TimeConstantForm& tc = *doc.time_constants;
      if (warnings != nullptr && tc.numerator_tcs.size() > tc.denominator_tcs.size()) {
        warnings->push_back("more numerator time constants than denominator ones");
      }
      return tc_to_tf(tc);
    }
    case DocKind::state_space:
      return tf_from_state_space(*doc.state_space);
    default:
      throw DomainError("document kind has no transfer function");
  }
}

SquareMatrix parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const json& node = doc.is_object() ? require(doc, "A") : doc;
  const auto rows = number_matrix(node, "A");
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ParseError("matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  try {
    return SquareMatrix(n, std::move(flat));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid matrix: ") + e.what());
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace rotpoly
