#ifndef ENL_RATIONAL_HPP
#define ENL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace enl {

/// Exact rational scalar. Always stored reduced with positive denominator;
/// arithmetic never leaves canonical form.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Parse the text form "p/q" (q > 0) or "p", with an optional leading minus
/// on p. Throws ParseError (see verdict.hpp) on anything else, including
/// q == 0, embedded whitespace, or a signed denominator.
Rat parse_rational(const std::string& text);

/// Render in canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& value);

/// Render a coordinate vector as a signed linear combination of basis names,
/// e.g. "X1-2*X3" or "0". Used for check witnesses.
std::string lincomb_str(const std::vector<Rat>& coords,
                        const std::vector<std::string>& names);

} // namespace enl

#endif
