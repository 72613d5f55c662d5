#ifndef GALOIS_GALOIS_HPP
#define GALOIS_GALOIS_HPP

#include "errors.hpp"
#include "prime_field.hpp"
#include "projective.hpp"
#include "group.hpp"
#include "criterion.hpp"
#include "polynomial.hpp"
#include "extension_field.hpp"
#include "quotient.hpp"
#include "paper_suite.hpp"
#include "search.hpp"

#endif
