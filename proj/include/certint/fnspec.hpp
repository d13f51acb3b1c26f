#pragma once

#include <map>
#include <string>

#include "certint/funcmodel.hpp"

namespace certint {

/**
 * Function mini-language:
 *   step <a> <b> bp=<r1,...> vals=<v0,...,vk> [at=<w1,...>]
 *   poly <a> <b> coeffs=<c0,c1,...> [; <a2> <b2> coeffs=... ...]
 *   abs <a> <b> center=<c>
 *   fatcantor depth=<d> [ratio=<r>]
 *   patho [<a> <b>]
 *   affine scale=<s> offset=<o> ( <inner> )
 *   glue ( <inner> | <inner> | ... )
 * All numbers use exact rational syntax (p/q, integers, finite decimals,
 * scientific literals with finite expansion).
 */
FuncModelPtr parse_function_spec(const std::string& text);

/// Data table: text lines `x F(x)` in exact syntax; '#' starts a comment.
std::map<Rational, Rational> parse_sample_table(const std::string& text);

} // namespace certint
