#pragma once

#include "carent/states.hpp"
#include "carent/types.hpp"

#include <string>

namespace carent {

/// Load a density matrix from a JSON file with fields
///   dim : integer dimension,
///   re  : dim x dim array of real parts,
///   im  : dim x dim array of imaginary parts.
/// Malformed files raise ParseError naming the offending field; a well-formed
/// matrix that is not a valid state raises ContractError.
DensityMatrix load_state(const std::string& path);

/// Inverse of load_state.
void save_state(const std::string& path, const DensityMatrix& w);

/// Load pure coefficients from a JSON file with fields
///   c_re : 2 x 2 array of real parts,
///   c_im : 2 x 2 array of imaginary parts.
PureCoeffs load_coeffs(const std::string& path);

/// Inverse of load_coeffs.
void save_coeffs(const std::string& path, const PureCoeffs& coeffs);

}  // namespace carent
