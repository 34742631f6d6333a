// Copyright 2026 The mbu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#ifndef MBU_VERSION
#define MBU_VERSION "0.0.0"
#endif

namespace mbu::cli {
namespace {

using nlohmann::json;

std::string phase_text(const json& phase) {
  if (phase.is_null()) return "-";
  return phase.get<int>() > 0 ? "+1" : "-1";
}

void case_header(std::ostream& os) {
  os << std::left << std::setw(7) << "scheme" << std::setw(6) << "x"
     << std::setw(6) << "ax" << std::setw(14) << "outcome" << std::setw(12)
     << "prob" << std::setw(12) << "max_dev" << std::setw(7) << "phase"
     << "result\n";
}

void case_line(std::ostream& os, const json& c) {
  const std::string outcome = c["outcome"].get<std::string>();
  std::ostringstream prob, dev;
  prob << std::setprecision(6) << c["probability"].get<double>();
  dev << std::setprecision(3) << c["max_deviation"].get<double>();
  os << std::left << std::setw(7) << c["scheme"].get<std::string>()
     << std::setw(6) << c["x"].get<std::uint64_t>() << std::setw(6)
     << c["ax"].get<std::uint64_t>() << std::setw(14)
     << (outcome.empty() ? "-" : outcome) << std::setw(12) << prob.str()
     << std::setw(12) << dev.str() << std::setw(7)
     << phase_text(c["raw_phase"]) << (c["pass"].get<bool>() ? "PASS" : "FAIL")
     << '\n';
  if (c.contains("correction")) {
    os << "       correction:";
    if (c["correction"].empty()) os << " (none)";
    for (const auto& g : c["correction"]) os << ' ' << g.get<std::string>();
    os << '\n';
  }
}

void render_cases(std::ostream& os, const json& report, bool every_case) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& c : report["cases"]) {
    auto& t = tally[c["scheme"].get<std::string>()];
    (c["pass"].get<bool>() ? t.first : t.second) += 1;
  }
  for (const auto& [scheme, t] : tally) {
    os << "scheme " << scheme << ": " << t.first << " passed, " << t.second
       << " failed\n";
  }
  bool header = false;
  for (const auto& c : report["cases"]) {
    if (!every_case && c["pass"].get<bool>()) continue;
    if (!header) {
      os << '\n';
      case_header(os);
      header = true;
    }
    case_line(os, c);
  }
}

void render_resources(std::ostream& os, const json& rows) {
  os << '\n'
     << std::left << std::setw(7) << "N" << std::setw(6) << "a" << std::setw(4)
     << "n" << std::setw(8) << "scheme" << std::right << std::setw(9)
     << "toffoli" << std::setw(8) << "cnot" << std::setw(8) << "1q"
     << std::setw(7) << "cond" << std::setw(7) << "meas" << std::setw(8)
     << "total" << '\n';
  for (const auto& r : rows) {
    const auto& k = r["counts"];
    os << std::left << std::setw(7) << r["N"].get<std::uint64_t>()
       << std::setw(6) << r["a"].get<std::uint64_t>() << std::setw(4)
       << r["width"].get<std::size_t>() << std::setw(8)
       << r["scheme"].get<std::string>() << std::right << std::setw(9)
       << k["toffoli"].get<std::size_t>() << std::setw(8)
       << k["cnot"].get<std::size_t>() << std::setw(8)
       << k["single_qubit"].get<std::size_t>() << std::setw(7)
       << k["classically_conditioned"].get<std::size_t>() << std::setw(7)
       << k["measurements"].get<std::size_t>() << std::setw(8)
       << k["total_gates"].get<std::size_t>() << '\n';
  }
  for (const auto& r : rows) {
    if (!r.contains("worst_case_stage2")) continue;
    const auto& w = r["worst_case_stage2"];
    os << "  N=" << r["N"].get<std::uint64_t>() << " stage 2 worst case (s="
       << r["worst_case_outcome"].get<std::string>()
       << "): toffoli " << w["toffoli"].get<std::size_t>() << ", cnot "
       << w["cnot"].get<std::size_t>() << ", conditioned X "
       << w["classically_conditioned"].get<std::size_t>() << "; mean toffoli "
       << r["mean_stage2"]["toffoli"].get<double>() << '\n';
  }
  for (const auto& r : rows) {
    if (!r["notes"].get<std::string>().empty()) {
      os << "  note (" << r["scheme"].get<std::string>()
         << "): " << r["notes"].get<std::string>() << '\n';
      break;
    }
  }
}

const char* yes_no(const json& b) { return b.get<bool>() ? "yes" : "NO"; }

void render_savings(std::ostream& os, const json& report) {
  os << '\n'
     << std::left << std::setw(7) << "N" << std::setw(4) << "n" << std::right
     << std::setw(6) << "B-C" << std::setw(6) << "n-1" << std::setw(6) << "(i)"
     << std::setw(7) << "A-C" << std::setw(10) << "expected" << std::setw(6)
     << "(ii)" << std::setw(7) << "(iii)" << '\n';
  for (const auto& s : report["savings"]) {
    const auto w = s["width"].get<std::int64_t>();
    os << std::left << std::setw(7) << s["N"].get<std::uint64_t>()
       << std::setw(4) << w << std::right << std::setw(6)
       << s["b_minus_c"].get<std::int64_t>() << std::setw(6) << w - 1
       << std::setw(6) << yes_no(s["identity_i"]) << std::setw(7)
       << s["a_minus_c"].get<std::int64_t>() << std::setw(10)
       << s["expected_a_minus_c"].get<std::int64_t>() << std::setw(6)
       << yes_no(s["identity_ii"]) << std::setw(7)
       << yes_no(s["a_minus_c_positive"]) << '\n';
  }
  os << "A-C positive and non-decreasing in n: "
     << yes_no(report["savings_trend"]) << '\n';
}

}  // namespace

json base_report() {
  return {{"tool", "mbu"}, {"version", MBU_VERSION}};
}

std::string render_human(const json& report) {
  std::ostringstream os;
  const auto& config = report["config"];
  os << "mbu " << report["version"].get<std::string>() << ' '
     << config["subcommand"].get<std::string>();
  if (report.contains("resolved")) {
    const auto& r = report["resolved"];
    os << "  N=" << r["N"].get<std::uint64_t>() << " a="
       << r["a"].get<std::uint64_t>() << " n=" << r["width"].get<std::size_t>();
  }
  os << '\n';
  if (report.contains("error")) {
    os << "error (" << report["error"]["kind"].get<std::string>()
       << "): " << report["error"]["message"].get<std::string>() << '\n';
  }
  for (const auto& e : report["errors"]) os << "error: " << e.get<std::string>() << '\n';
  if (report.contains("cases")) {
    render_cases(os, report, config["subcommand"] == "run");
  }
  if (report.contains("oracle_checks")) {
    const auto& o = report["oracle_checks"];
    os << "parity oracles: " << o["masks_checked"].get<std::uint64_t>()
       << " masks of width " << o["width"].get<std::size_t>() << ", "
       << o["failed"].size() << " failed\n";
  }
  if (report.contains("resources")) render_resources(os, report["resources"]);
  if (report.contains("savings")) render_savings(os, report);
  os << "\noverall: " << (report["overall_pass"].get<bool>() ? "PASS" : "FAIL")
     << '\n';
  return os.str();
}

}  // namespace mbu::cli
