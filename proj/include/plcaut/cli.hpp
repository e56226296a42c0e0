// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plcaut/poly.hpp"

namespace plcaut {

// Renders a support in the compact table grammar: explicit monomials such
// as X4Y2Z3 joined by '+', with a full slice of Z-degree k collapsed to
// Z<k>*L<d-k>Z.  Slices are listed by descending Z-degree.
std::string support_shorthand(unsigned d, const std::vector<Monomial>& support);

// Entry point shared by the binary and the tests.  argv follows the usual
// convention with the program name in slot 0.  Reports go to `out`,
// diagnostics to `err`.  Returns 0 on success, 1 on a verification
// mismatch, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace plcaut
