#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "smirnov/core.hpp"
#include "smirnov/harness.hpp"
#include "smirnov/models.hpp"
#include "smirnov/paths.hpp"
#include "smirnov/qpoly.hpp"
#include "smirnov/quasisym.hpp"
#include "smirnov/statistics.hpp"

namespace smirnov {

using Json = nlohmann::json;

// {"letters":[...],"shape":[...]}
Json word_to_json(const SegmentedSmirnovWord& w);
SegmentedSmirnovWord word_from_json(const Json& j);

// {"coeffs":["1","2",...]}, ascending degree, decimal strings so that
// arbitrarily large coefficients survive any JSON reader.
Json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

// {"count":N,"pairs":[[i,j,"case"],...]} with 1-based positions.
Json inversion_report_to_json(const InversionReport& r);

// {"steps":"NNEE","labels":[...],"rises":[...],"valleys":[...]}
Json path_to_json(const DecoratedLabelledDyckPath& d);
DecoratedLabelledDyckPath path_from_json(const Json& j);
// {"blocks":[[[1,2],[4]],...],"path":{...}}
Json area_zero_path_to_json(const AreaZeroDecoratedPath& d);

// {"upper":"NE...","lower":"NE...","labels":[[col,row,value],...]}
Json polyomino_to_json(const LabelledPolyomino& p);
LabelledPolyomino polyomino_from_json(const Json& j);

// {"split_set":[...],"composition":[...],"coeff":{"coeffs":[...]}}
Json fundamental_term_to_json(const FundamentalTerm& t);

Json report_to_json(const VerificationReport& r);
// Human-readable summary. Leaves out wall time so that repeated runs print
// identical bytes.
std::string report_to_text(const VerificationReport& r);

// Columns n,k,l,mu,poly.
std::string rows_to_csv(const std::vector<TableRow>& rows);
std::string rows_to_latex(const std::vector<TableRow>& rows);

}  // namespace smirnov
