#ifndef COVSTACK_FORM_IO_HPP
#define COVSTACK_FORM_IO_HPP

#include "covstack/form.hpp"

#include <string>

namespace covstack {

/// Text format shared with the CLI: one term per line,
///
///     <coefficient> <e0,e1,...,en>
///
/// where the coefficient is an integer, a rational "a/b", or a finite field
/// element "c mod p" / "c mod p^k" (c the canonical code).  Blank lines and
/// lines starting with '#' are ignored.  poly_to_text lists terms in the
/// fixed lexicographic exponent order, so parse/print round-trips exactly.
Poly parse_poly_text(const std::string &text);
std::string poly_to_text(const Poly &p);

Form parse_form_text(const std::string &text);
std::string form_to_text(const Form &f);

Poly load_poly_file(const std::string &path);
Form load_form_file(const std::string &path);

} // namespace covstack

#endif
