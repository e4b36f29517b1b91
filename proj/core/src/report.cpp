// SPDX-License-Identifier: Apache-2.0
#include "bruhat/report.hpp"

#include <json.hpp>

namespace bruhat {

void Report::merge(const Report& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  if (profile.empty()) {
    doc["n"] = std::to_string(n);
  } else {
    std::string m;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      if (k > 0) m += ',';
      m += std::to_string(profile[k]);
    }
    doc["M"] = m;
  }
  doc["checked"] = std::to_string(checked);
  auto list = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    list.push_back({{"witness", f.witness}, {"expected", f.expected}, {"actual", f.actual}});
  }
  doc["failures"] = std::move(list);
  if (!notes.empty()) doc["notes"] = notes;
  return doc.dump(2);
}

}  // namespace bruhat
