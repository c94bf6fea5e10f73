#ifndef WID_WID_HPP
#define WID_WID_HPP

#include <wid/scalars.hpp>
#include <wid/linalg.hpp>
#include <wid/freealg.hpp>
#include <wid/clifford.hpp>
#include <wid/pairs.hpp>
#include <wid/partitions.hpp>
#include <wid/structure.hpp>
#include <wid/expr.hpp>
#include <wid/report.hpp>

#endif  // WID_WID_HPP
