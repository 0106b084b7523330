#ifndef WICKSOS_EXPR_HPP
#define WICKSOS_EXPR_HPP

#include <stdexcept>
#include <string>

#include "wicksos/poly.hpp"

namespace wicksos {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

/// Grammar: variables z0..zN and zb0..zbN, the symbol J, integer and
/// rational literals, the imaginary unit i, operators + - * ^ and
/// parentheses. ^ binds tightest; whitespace is ignored. Float literals
/// are rejected.
Poly parse_poly(const std::string& src, int n);

/// Canonical rendering; parse_poly(poly_str(p), p.n()) == p, and the output
/// is byte-stable for equal polynomials.
std::string poly_str(const Poly& p);

}  // namespace wicksos

#endif
