// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "mwcr/likelihood.hpp"

namespace mwcr {

/// One patient of the follicular lymphoma file. Only resp, relsite, stat and
/// dftime are interpreted; every other column is kept verbatim in `extra`.
struct FollicularRow {
  std::string resp;
  std::string relsite;  // empty when no relapse site was recorded
  int stat = 0;         // 1 = dead
  double dftime = 0.0;  // years
  std::map<std::string, std::string> extra;
  long line = 0;  // 1-based line in the source
};

/// 0 censored, 1 no response or relapse, 2 death without relapse.
enum class CauseLabel { Censored = 0, Disease = 1, Death = 2 };

/// Disease event if resp == "NR" or a relapse site is present; otherwise
/// death without relapse if resp == "CR" and stat == 1; otherwise censored.
CauseLabel compute_cause(const FollicularRow& row);

/// Parses whitespace-delimited text with a header row naming the columns.
/// Tokens may be double-quoted; an empty quoted string or NA marks an empty
/// relsite. Throws DataError (with line numbers) on a missing header, a
/// missing required column, a short row or an unparseable number.
std::vector<FollicularRow> parse_dataset(std::istream& in);

struct PreparedSample {
  ProgressiveSample sample;
  long perturbed_ties = 0;        // failure times nudged to restore strict order
  long folded_leading_censored = 0;  // censored rows before the first failure
};

/// Failures only (causes 1 and 2), sorted by dftime, no removals.
PreparedSample prepare_case1(const std::vector<FollicularRow>& rows);

/// All rows sorted by dftime (censored after failures within a tie). Each run
/// of censored rows following a failure becomes that failure's removal count;
/// censored rows before the first failure are folded into R_1.
PreparedSample prepare_case2(const std::vector<FollicularRow>& rows);

/// Canonical dataset text: "# n=<n>", header "time,cause,removed", one
/// record per line in increasing time. Times use the shortest round-trip
/// representation.
std::string serialize_sample(const ProgressiveSample& s);
ProgressiveSample parse_sample(std::istream& in);

}  // namespace mwcr
