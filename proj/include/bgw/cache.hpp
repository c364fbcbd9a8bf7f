#pragma once

#include <string>

#include "bgw/dvv.hpp"

namespace bgw {

// Plain-text snapshot of a correlator table.  The format is line-based:
//
//   BGWCACHE 1 <x_max>
//   B <d1>,...,<dn> <num>/<den>
//
// Records are sorted by X, then by tuple length, then lexicographically,
// so that saving a loaded file reproduces it byte for byte.
void cache_save(const std::string& path, const BgwTable& table);

// Loads a snapshot into `into`.  Throws std::runtime_error on a version
// mismatch, malformed or out-of-order records, non-reduced fractions, a
// record exceeding the advertised x_max, or a wrong seed value B(0).
void cache_load(const std::string& path, BgwTable& into);

}  // namespace bgw
