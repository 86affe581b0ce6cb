#ifndef D0Q_D0Q_HPP
#define D0Q_D0Q_HPP

#include "d0q/complex.hpp"
#include "d0q/curve.hpp"
#include "d0q/cyclotomic.hpp"
#include "d0q/eisenstein.hpp"
#include "d0q/families.hpp"
#include "d0q/periods.hpp"
#include "d0q/quadrature.hpp"
#include "d0q/rational.hpp"
#include "d0q/real.hpp"
#include "d0q/recognize.hpp"
#include "d0q/table1.hpp"
#include "d0q/verify.hpp"
#include "d0q/zerolog.hpp"

#endif
