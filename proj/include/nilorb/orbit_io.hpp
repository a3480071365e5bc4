#pragma once

#include <nilorb/orbit.hpp>

#include <string>

namespace nilorb {

/// Exact rational string ("p" or "p/q", reduced). Throws on junk.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

/// Gaussian rationals like "1", "-i", "1/2+1/4i", "3-2i".
GScalar parse_gaussian(const std::string& s);
std::string format_gaussian(const GScalar& s);

/// A parenthesized tuple of Gaussian rationals: "(1, 1/2+1/4i)".
GVector parse_tuple(const std::string& s);

/// Orbit file schema:
///   {"rank": int, "weight": int, "N": [[int]],
///    "F": {"<p>": [[{"re": "p/q", "im": "p/q"}]]}, "label": string}
/// F lists spanning vectors per stored level; levels below the smallest
/// stored one are full, levels above the largest are zero.
NilpotentOrbit orbit_from_json(const std::string& text);
std::string orbit_to_json(const NilpotentOrbit& orbit);

NilpotentOrbit load_orbit_file(const std::string& path);

/// FNV-1a of the canonical serialization; reports embed it so results are
/// traceable to their exact input.
std::string orbit_digest(const NilpotentOrbit& orbit);

}  // namespace nilorb
