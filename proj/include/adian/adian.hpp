#ifndef ADIAN_ADIAN_HPP_
#define ADIAN_ADIAN_HPP_

//! Convenience umbrella: word equality in finitely presented inverse
//! monoids with cycle-free side graphs, via closures of birooted word
//! graphs with 2-cells, plus the specialized one-relation engine and the
//! rewrite oracle.

#include "bs_family.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "stephen.hpp"
#include "word.hpp"
#include "wordgraph.hpp"

#endif  // ADIAN_ADIAN_HPP_
