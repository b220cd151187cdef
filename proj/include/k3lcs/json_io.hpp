#pragma once

#include <string>

#include <json.hpp>

#include "k3lcs/ade.hpp"
#include "k3lcs/error.hpp"
#include "k3lcs/lattice.hpp"
#include "k3lcs/parabolic.hpp"
#include "k3lcs/period.hpp"

namespace k3lcs::json {

using Json = nlohmann::ordered_json;

// Readers throw ErrorKind::Parse naming the offending field.

/// Rationals are written as canonical "p" / "p/q" strings; integers are also accepted on input.
Json write(const Rational& x);
Rational read_rational(const Json& j, const std::string& field);
std::int64_t read_int(const Json& j, const std::string& field);

/// {"re": ..., "im": ...}; a bare rational reads as a real number.
Json write(const GaussianRational& x);
GaussianRational read_gaussian(const Json& j, const std::string& field);

Json write(const ComplexLambda& z);
/// Array of 16 entries; a missing value is the zero vector.
ComplexLambda read_complex_lambda(const Json* j, const std::string& field);

Json write(const LambdaVector& c);
LambdaVector read_lambda_vector(const Json& j, const std::string& field);

/// {"a": [a1, a2], "b": [b1, b2], "c": [16 integers]}.
Json write(const LatticeElement& e);
LatticeElement read_lattice_element(const Json& j, const std::string& field);

Json write(const Mat2& m);
Mat2 read_mat2(const Json& j, const std::string& field);
Json write(const IntMatrix& m);
IntMatrix read_int_matrix(const Json& j, const std::string& field, std::size_t rows, std::size_t cols);

Json write(const TubeCoords& t);
Json write(const NarainCoords& n);
/// {"a": [2], "b": [2], "c": [16]} with Gaussian rational entries.
Json write(const PeriodVector& p);
PeriodVector read_period(const Json& j, FrameKind frame, const std::string& field);

/// A period point given in any chart: {"omega": ...}, {"tau", "u_tilde", "z"} or {"tau", "u", "z"}.
/// The result is validated.
PeriodVector read_point(const Json& j, FrameKind frame);

/// {"m", "Q", "R", "f"}; Q may instead be given as "c1"/"c2", and missing Q, R, f default to zero,
/// zero and the identity.
Json write(const ParabolicIsometry& g);
ParabolicIsometry read_parabolic(const Json& j, FrameKind frame, const std::string& field);

Json write(const ReductionResult& r);
Json write(const LcsReport& r);
Json write(const BasisInvariants& b);
Json write(const Lemma1Report& r);
Json write(const RootSystemReport& r);

Json write_error(const Error& e, std::size_t line);

}  // namespace k3lcs::json
