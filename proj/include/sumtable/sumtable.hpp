#pragma once

#include "sumtable/cyclotomic.hpp"
#include "sumtable/dice.hpp"
#include "sumtable/errors.hpp"
#include "sumtable/geometry.hpp"
#include "sumtable/oracle.hpp"
#include "sumtable/poly.hpp"
#include "sumtable/render.hpp"
#include "sumtable/report.hpp"
#include "sumtable/splitter.hpp"
#include "sumtable/splitting.hpp"
