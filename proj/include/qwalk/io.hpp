#pragma once

#include <stdexcept>
#include <string>

#include "qwalk/limit_laws.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Locale-independent number formatting ('.' decimal, no grouping).
std::string format_shortest(double v);   // shortest round-trip
std::string format_sig17(double v);      // 17 significant digits

// Write content atomically (temp file + rename), overwriting any existing
// file. Throws IoError on failure.
void write_text_atomic(const std::string& path, const std::string& content);

// Atomic write that never mutates an existing file: if path exists, a
// numbered sibling (name.1.ext, name.2.ext, ...) is chosen. Returns the path
// actually written.
std::string write_text_unique(const std::string& path,
                              const std::string& content);

// CSV dumps. All text is LF-terminated with '.' decimals.
// Header: x,re_0,im_0,re_1,im_1[,re_2,im_2]; one row per window site,
// positions ascending.
std::string amplitudes_csv(const WalkState& state);

// Header: x,p.
std::string probability_csv(const WalkState& state);

// Header: x_over_t,re,im for a fixed (j1,j2); requires t >= 1.
std::string interference_csv(const WalkState& state, int j1, int j2);

// Header: x,j1,j2,re,im for all window sites and all index pairs.
std::string density_csv(const WalkState& state);

// '# point_mass=<value>' comment line, then header y,density on a uniform
// midpoint grid of n_points over the open support interval.
std::string law_table_csv(const LimitLaw& law, long n_points);

}  // namespace qwalk
