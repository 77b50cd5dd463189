#ifndef COXLINE_COXLINE_HPP
#define COXLINE_COXLINE_HPP

#include "coxline/arith.hpp"
#include "coxline/config.hpp"
#include "coxline/coxmono.hpp"
#include "coxline/form.hpp"
#include "coxline/linalg.hpp"
#include "coxline/oracle.hpp"
#include "coxline/picard.hpp"
#include "coxline/relations.hpp"
#include "coxline/serialize.hpp"
#include "coxline/sweep.hpp"

#endif  // COXLINE_COXLINE_HPP
