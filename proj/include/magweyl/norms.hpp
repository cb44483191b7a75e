#pragma once

#include "magweyl/symbol.hpp"

namespace magweyl {

// (sum |f|^p w_x w_xi)^{1/p} with w_x = (h/2)^d on the refinement and
// w_xi = k^d; p = infinity gives the grid max.
Real lp_norm(const SymbolField& f, Real p);
Real lp_norm(const SymbolFn& F, const PhaseGrid& g, Real p);

// Grid max over the refined lattice of <xi>^{-m} sum_{|alpha|=N,|beta|=M}
// |d^alpha_x d^beta_xi F|.
Real hoermander_seminorm(const SymbolFn& F, Real m, int N, int M,
                         const PhaseGrid& g);

// Fourier-multiplier derivative on the grid; exact on discrete trigonometric
// polynomials, subject to the usual aliasing caveat for non-bandlimited data.
SymbolField spectral_derivative(const SymbolField& f,
                                const std::array<int, 2>& alpha,
                                const std::array<int, 2>& beta);

std::vector<std::array<int, 2>> multi_indices(int dim, int total);

}  // namespace magweyl
