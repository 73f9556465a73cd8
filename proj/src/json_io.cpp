#include "ssdual/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace ssdual {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error("BadRational", "expected a rational string, got " + j.dump());
}

std::vector<std::string> labels_from_json(const Json& j) {
  if (!j.is_array()) throw Error("BadFormat", "labels must be an array");
  std::vector<std::string> labels;
  for (const auto& item : j) labels.push_back(item.get<std::string>());
  return labels;
}

}  // namespace

Json chain_to_json(const Chain& chain) {
  Json j;
  j["labels"] = chain.labels;
  Json nu = Json::array();
  for (Index i = 0; i < chain.size(); ++i) nu.push_back(chain.nu(i).str());
  j["nu"] = std::move(nu);
  Json rows = Json::array();
  for (Index i = 0; i < chain.size(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < chain.size(); ++k) row.push_back(chain.P(i, k).str());
    rows.push_back(std::move(row));
  }
  j["P"] = std::move(rows);
  j["mode"] = "exact";
  return j;
}

bool json_chain_is_float(const Json& j) {
  return j.contains("mode") && j.at("mode").get<std::string>() == "float";
}

Chain chain_from_json(const Json& j) {
  if (json_chain_is_float(j))
    throw Error("FloatRejected", "this operation requires an exact chain (mode \"exact\")");
  auto labels = labels_from_json(j.at("labels"));
  const Index n = static_cast<Index>(labels.size());
  const Json& jnu = j.at("nu");
  const Json& jp = j.at("P");
  if (static_cast<Index>(jnu.size()) != n || static_cast<Index>(jp.size()) != n)
    throw Error("BadFormat", "nu/P size does not match labels");
  RatRowVector nu(n);
  for (Index i = 0; i < n; ++i) nu(i) = rational_from_json(jnu.at(static_cast<std::size_t>(i)));
  RatMatrix P(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = jp.at(static_cast<std::size_t>(i));
    if (static_cast<Index>(row.size()) != n)
      throw Error("BadFormat", "P row " + std::to_string(i) + " has wrong length");
    for (Index k = 0; k < n; ++k) P(i, k) = rational_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return Chain(std::move(labels), std::move(nu), std::move(P));
}

Json float_chain_to_json(const FloatChain& chain) {
  Json j;
  j["labels"] = chain.labels;
  Json nu = Json::array();
  for (Index i = 0; i < chain.nu.cols(); ++i) nu.push_back(chain.nu(i));
  j["nu"] = std::move(nu);
  Json rows = Json::array();
  for (Index i = 0; i < chain.P.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < chain.P.cols(); ++k) row.push_back(chain.P(i, k));
    rows.push_back(std::move(row));
  }
  j["P"] = std::move(rows);
  j["mode"] = "float";
  return j;
}

FloatChain float_chain_from_json(const Json& j) {
  FloatChain chain;
  chain.labels = labels_from_json(j.at("labels"));
  const Index n = static_cast<Index>(chain.labels.size());
  auto to_double = [](const Json& v) {
    if (v.is_number()) return v.get<double>();
    return Rational::parse(v.get<std::string>()).to_double();
  };
  chain.nu.resize(n);
  for (Index i = 0; i < n; ++i) chain.nu(i) = to_double(j.at("nu").at(static_cast<std::size_t>(i)));
  chain.P.resize(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      chain.P(i, k) = to_double(j.at("P").at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)));
  return chain;
}

Json poset_to_json(const Poset& poset) {
  Json j;
  j["labels"] = poset.labels();
  Json rows = Json::array();
  for (Index i = 0; i < poset.size(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < poset.size(); ++k) row.push_back(poset.zeta()(i, k).is_one() ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["zeta"] = std::move(rows);
  return j;
}

Poset poset_from_json(const Json& j, Index cap) {
  if (j.contains("product")) {
    std::vector<int> bounds;
    for (const auto& item : j.at("product")) bounds.push_back(item.get<int>());
    return Poset::product_lattice(bounds, cap);
  }
  auto labels = labels_from_json(j.at("labels"));
  const Index n = static_cast<Index>(labels.size());
  if (n > cap)
    throw Error("TooLarge",
                std::to_string(n) + " states exceed the cap of " + std::to_string(cap));
  const Json& jz = j.at("zeta");
  if (static_cast<Index>(jz.size()) != n) throw Error("BadFormat", "zeta size mismatch");
  RatMatrix zeta(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = jz.at(static_cast<std::size_t>(i));
    if (static_cast<Index>(row.size()) != n)
      throw Error("BadFormat", "zeta row " + std::to_string(i) + " has wrong length");
    for (Index k = 0; k < n; ++k)
      zeta(i, k) = Rational(row.at(static_cast<std::size_t>(k)).get<long long>());
  }
  return Poset::validate(std::move(labels), zeta);
}

Json distribution_to_json(const RatRowVector& v) {
  Json j = Json::array();
  for (Index i = 0; i < v.cols(); ++i) j.push_back(v(i).str());
  return j;
}

RatRowVector distribution_from_json(const Json& j) {
  if (!j.is_array()) throw Error("BadFormat", "expected an array of rationals");
  RatRowVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.cols(); ++i) v(i) = rational_from_json(j.at(static_cast<std::size_t>(i)));
  return v;
}

std::vector<Rational> rational_list_from_json(const Json& j) {
  if (!j.is_array()) throw Error("BadFormat", "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

namespace {

Json check_entry(bool passed) {
  Json j;
  j["passed"] = passed;
  return j;
}

}  // namespace

Json duality_report_to_json(const DualityReport& report) {
  Json j;
  j["nu_matches"] = check_entry(report.nu_matches);
  if (report.nu_mismatch) j["nu_matches"]["state"] = *report.nu_mismatch;
  j["intertwining"] = check_entry(report.intertwining);
  if (report.intertwining_mismatch) {
    j["intertwining"]["row"] = report.intertwining_mismatch->first;
    j["intertwining"]["col"] = report.intertwining_mismatch->second;
  }
  j["link_stochastic"] = check_entry(report.link_stochastic);
  j["link_last_row_is_pi"] = check_entry(report.link_last_row_is_pi);
  if (report.last_row_mismatch) j["link_last_row_is_pi"]["state"] = *report.last_row_mismatch;
  j["sharp"] = check_entry(report.sharp);
  if (report.sharp_violation) {
    j["sharp"]["row"] = report.sharp_violation->first;
    j["sharp"]["col"] = report.sharp_violation->second;
  }
  j["stationary"] = check_entry(report.stationary);
  if (report.stationary_mismatch) j["stationary"]["state"] = *report.stationary_mismatch;
  j["all_passed"] = report.all_passed();
  return j;
}

Json sharp_pair_report_to_json(const SharpPairReport& report) {
  Json j;
  j["passed"] = report.equal;
  if (report.first_mismatch) {
    j["first_mismatch_k"] = *report.first_mismatch;
    j["sep"] = report.sep_at_mismatch.str();
    j["tail"] = report.tail_at_mismatch.str();
  }
  return j;
}

Json sim_summary_to_json(const SimSummary& summary) {
  Json j;
  j["trials"] = summary.trials;
  j["mean"] = summary.mean;
  j["variance"] = summary.variance;
  Json tail = Json::array();
  for (const auto& point : summary.tail) {
    Json row;
    row["threshold"] = point.threshold;
    row["probability"] = point.probability;
    tail.push_back(std::move(row));
  }
  j["tail"] = std::move(tail);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string profile_csv(const std::vector<Rational>& sep, const std::vector<Rational>& tv,
                        const std::vector<Rational>* tail) {
  std::ostringstream os;
  os << "k,sep,tv,tail\n";
  for (std::size_t k = 0; k < sep.size(); ++k) {
    os << k << ',' << format_float(sep[k].to_double()) << ',' << format_float(tv[k].to_double())
       << ',';
    if (tail) os << format_float((*tail)[k].to_double());
    os << '\n';
  }
  return os.str();
}

std::string profile_csv(const std::vector<double>& sep, const std::vector<double>& tv) {
  std::ostringstream os;
  os << "k,sep,tv,tail\n";
  for (std::size_t k = 0; k < sep.size(); ++k)
    os << k << ',' << format_float(sep[k]) << ',' << format_float(tv[k]) << ",\n";
  return os.str();
}

std::string tail_csv(const std::vector<Rational>& tail) {
  std::ostringstream os;
  os << "k,tail\n";
  for (std::size_t k = 0; k < tail.size(); ++k)
    os << k << ',' << format_float(tail[k].to_double()) << '\n';
  return os.str();
}

std::string cutoff_csv(const CutoffTable& table) {
  std::ostringstream os;
  os << "c,empirical,limit,d,trials,t_d,w_d\n";
  for (const auto& row : table.rows)
    os << format_float(row.c) << ',' << format_float(row.empirical) << ','
       << format_float(row.limit) << ',' << row.d << ',' << row.trials << ','
       << format_float(row.t_d) << ',' << format_float(row.w_d) << '\n';
  return os.str();
}

}  // namespace ssdual
