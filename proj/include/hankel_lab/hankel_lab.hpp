#ifndef HANKEL_LAB_HANKEL_LAB_HPP
#define HANKEL_LAB_HANKEL_LAB_HPP

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/parallel.hpp"
#include "hankel_lab/powser.hpp"
#include "hankel_lab/sampling.hpp"
#include "hankel_lab/schwarz.hpp"
#include "hankel_lab/search.hpp"
#include "hankel_lab/selftest.hpp"
#include "hankel_lab/text.hpp"

#endif
