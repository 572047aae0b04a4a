#ifndef UFI_UFI_ALL_HPP
#define UFI_UFI_ALL_HPP

#include "betti.hpp"
#include "bits.hpp"
#include "colouring.hpp"
#include "cubical.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "exchange.hpp"
#include "homology.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "poset.hpp"
#include "primes.hpp"
#include "simplicial.hpp"
#include "ufi.hpp"

#endif
