#ifndef LOOPCOH_REPORT_HPP
#define LOOPCOH_REPORT_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "loopcoh/derived.hpp"
#include "loopcoh/geodesy.hpp"
#include "loopcoh/specseq.hpp"
#include "loopcoh/verify.hpp"

namespace loopcoh {

enum class OutputFormat { text, csv, json };

OutputFormat parse_format(const std::string& name);  // throws on unknown names

// JSON forms; each *_from_json inverts the corresponding *_to_json.
nlohmann::json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const GradedUModule& m);
GradedUModule module_from_json(const nlohmann::json& j);

nlohmann::json page_to_json(const BigradedPage& page);
BigradedPage page_from_json(const nlohmann::json& j);

nlohmann::json derived_to_json(const BidegreeHomology& table);
BidegreeHomology derived_from_json(const nlohmann::json& j);

nlohmann::json results_to_json(const std::vector<CheckResult>& results);
std::vector<CheckResult> results_from_json(const nlohmann::json& j);

// renderers used by the CLI; `header` lines are prefixed with "# " in text
void write_series(std::ostream& os, OutputFormat format, const std::string& header,
                  const std::string& closed_form, const PowerSeries& s);

void write_page(std::ostream& os, OutputFormat format, const std::string& header,
                const BigradedPage& page);

void write_morse_catalog(std::ostream& os, OutputFormat format, const std::string& header,
                         const MorseE1Catalog& catalog);

void write_main_basis(std::ostream& os, OutputFormat format, const std::string& header,
                      const GradedUModule& module);

void write_geodesy_rows(std::ostream& os, OutputFormat format, const std::string& header,
                        const GeodesicBorelPresentation& borel, int degree_cutoff);

void write_derived_table(std::ostream& os, OutputFormat format, const std::string& header,
                         const BidegreeHomology& table);

void write_verify_results(std::ostream& os, OutputFormat format,
                          const std::vector<CheckResult>& results);

}  // namespace loopcoh

#endif
