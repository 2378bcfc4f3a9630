#ifndef HELIOWEED_TABLES_HPP
#define HELIOWEED_TABLES_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "helioweed/coverage.hpp"
#include "helioweed/dose.hpp"
#include "helioweed/field.hpp"
#include "helioweed/optics.hpp"
#include "helioweed/solar.hpp"

namespace helioweed::io {

/* CSV loaders. Headers are fixed; parse failures name the file, row and
   field.  Values never need quoting: identifiers stay in [A-Za-z0-9_-]. */

/* name,reference_exposure_s,reference_flux_wm2,stage_multiplier_established */
std::map<std::string, dose::WeedSpecies> load_species_csv(const std::string& path);

/* id,x_m,y_m,species,detected_day; positions checked against the field
   boundary when one is given */
std::vector<field::WeedTarget> load_targets_csv(const std::string& path,
                                                const field::FieldMap* boundary);

/* solar_time_h,dni_wm2 */
dose::DniProfile load_dni_profile_csv(const std::string& path);

/* CSV emitters; all values printed with 6 significant digits. */
void write_window_surface_csv(std::ostream& out,
                              const std::vector<solar::SurfacePoint>& grid);
void write_efficiency_curve_csv(std::ostream& out,
                                const std::vector<optics::EfficiencySample>& curve);
void write_coverage_surface_csv(std::ostream& out,
                                const std::vector<coverage::CoveragePoint>& grid);

}  // namespace helioweed::io

#endif
