#pragma once

#include "hcf/cfengine.hpp"

#include <string>

namespace hcf {

// Canonical Gaussian-integer form: "0", "a", "bi", "a+bi", "a-bi", with unit
// imaginary coefficients written as "i"/"-i" and no spaces.
std::string format_gaussian_int(const GaussianInt& g);
GaussianInt parse_gaussian_int(const std::string& text);

std::string format_gaussian_rational(const GaussianRational& q);
std::string format_field_element(const FieldElement& v);

std::string algorithm_name(Algorithm a);   // "H", "T", "D"
std::string status_string(ExpansionStatus s);

// "[0; 5+i, over(0)]" style with an explicit overline marker.
std::string format_expansion_human(const Expansion& e);
// The paper's bracket notation, e.g. "[0;5+i,2-2i,\overline{0}]".
std::string format_expansion_paper(const Expansion& e);

} // namespace hcf
