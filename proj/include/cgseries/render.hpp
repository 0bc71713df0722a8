#pragma once

#include <string>
#include <vector>

#include "cgseries/cg_engine.hpp"
#include "cgseries/group_io.hpp"

namespace cgs {

enum class Format { Text, Json, Latex };
Format parse_format(const std::string& text);

std::string cyclo_latex(const Cyclo& c);

std::string render_value(const Cyclo& c, Format f);
std::string render_value(const RatQ& r, Format f);
std::string render_value(const QPoly& p, Format f);

Json to_json(const CycloMatrix& m);
Json to_json(const SeriesMatrix& m);

// Text: aligned table with optional labels; Json: array of rows of strings;
// Latex: pmatrix.
std::string render_matrix(const CycloMatrix& m, Format f, const std::vector<std::string>& row_labels = {},
                          const std::vector<std::string>& col_labels = {});
std::string render_matrix(const SeriesMatrix& m, Format f, const std::vector<std::string>& row_labels = {},
                          const std::vector<std::string>& col_labels = {});

Json check_to_json(const IdentityCheck& c);
// "name: PASS" lines, or a JSON array of {identity, pass, witness}.
std::string render_checks(const std::vector<IdentityCheck>& checks, Format f);

}  // namespace cgs
