#include "stabdiv/rational.hpp"

// parse_rational and GaussianRational formatting live in parse.cpp next to
// the rest of the text grammar.
