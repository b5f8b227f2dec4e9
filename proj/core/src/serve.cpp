#include "mcbc/request.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mcbc/errors.hpp"
#include "slot_matcher.hpp"

namespace mcbc {

MultisetRequest MultisetRequest::from_items(const std::vector<int>& items) {
  MultisetRequest req;
  for (int i : items) {
    if (i < 1) throw ParamError("request item indices must be positive");
    ++req.multiplicities[i];
  }
  return req;
}

MultisetRequest MultisetRequest::parse(const std::string& text) {
  MultisetRequest req;
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  if (stripped.empty()) return req;
  if (stripped.front() == ',' || stripped.back() == ',')
    throw ParamError("malformed request: empty token");
  std::stringstream ss(stripped);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.size() > 9 ||
        tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParamError("malformed request token '" + tok + "'");
    int v = std::stoi(tok);
    if (v < 1) throw ParamError("request item indices must be positive");
    ++req.multiplicities[v];
  }
  return req;
}

int MultisetRequest::total() const {
  int t = 0;
  for (const auto& [item, count] : multiplicities) t += count;
  return t;
}

std::vector<int> MultisetRequest::to_items() const {
  std::vector<int> out;
  for (const auto& [item, count] : multiplicities)
    out.insert(out.end(), count, item);
  return out;
}

std::string MultisetRequest::to_string() const {
  std::string out;
  for (int i : to_items()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

void MultisetRequest::validate_items(int n) const {
  for (const auto& [item, count] : multiplicities) {
    if (item < 1 || item > n) throw ParamError("request item outside [1..n]");
    if (count < 1) throw ParamError("request multiplicity must be positive");
  }
}

void MultisetRequest::validate(int n, int k, int r) const {
  validate_items(n);
  for (const auto& [item, count] : multiplicities)
    if (count > r) throw ParamError("request multiplicity exceeds r");
  if (total() > k) throw ParamError("request size exceeds k");
}

bool Assignment::satisfies(const McbcCode& code, const MultisetRequest& req,
                           int t) const {
  if (static_cast<int>(reads.size()) != code.m) return false;
  std::map<int, int> coverage;
  for (int j = 0; j < code.m; ++j) {
    const auto& d = reads[j];
    if (static_cast<int>(d.size()) > t) return false;
    const auto& cj = code.server_view.blocks[j];
    for (size_t a = 0; a + 1 < d.size(); ++a)
      if (d[a] >= d[a + 1]) return false;
    for (int item : d) {
      if (!std::binary_search(cj.begin(), cj.end(), item)) return false;
      ++coverage[item];
    }
  }
  for (const auto& [item, count] : req.multiplicities)
    if (coverage[item] < count) return false;
  return true;
}

std::optional<Assignment> serve_request(const McbcCode& code,
                                        const MultisetRequest& req, int t) {
  if (t < 1) throw ParamError("t must be positive");
  req.validate_items(code.n);
  detail::SlotMatcher matcher(code, t);
  for (const auto& [item, count] : req.multiplicities)
    for (int c = 0; c < count; ++c)
      if (!matcher.add_slot(item)) return std::nullopt;
  return matcher.assignment();
}

}  // namespace mcbc
