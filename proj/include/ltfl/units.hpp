// SPDX-License-Identifier: Apache-2.0
//
// dB / dBm conversions. Config files carry noise density in dBm/Hz and the
// waterfall threshold in dB; everything downstream works in linear units.

#pragma once

#include <cmath>

namespace ltfl {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// dBm -> W (also dBm/Hz -> W/Hz).
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

}  // namespace ltfl
