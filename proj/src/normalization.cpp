#include "singlink/normalization.hpp"

#include <algorithm>
#include <charconv>

#include "singlink/errors.hpp"

namespace singlink {

void validate(const BranchCoverData& data) {
  if (data.degrees.empty()) fail(ErrorCode::SchemaError, "a branch needs at least one degree");
  for (auto d : data.degrees)
    if (d < 1) fail(ErrorCode::SchemaError, "degrees must be positive, got " + std::to_string(d));
}

std::int64_t hyperplane_branch_count(const BranchCoverData& data) {
  validate(data);
  std::int64_t k = 0;
  for (auto d : data.degrees) k = checked_add(k, d);
  return k;
}

PinchedTorusModel pinched_model(const BranchCoverData& data) {
  PinchedTorusModel m;
  m.k = hyperplane_branch_count(data);
  m.cycle_type = data.degrees;
  std::sort(m.cycle_type.begin(), m.cycle_type.end());
  return m;
}

bool models_homeomorphic(const PinchedTorusModel& a, const PinchedTorusModel& b) {
  auto ca = a.cycle_type, cb = b.cycle_type;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return a.k == b.k && ca == cb;
}

bool is_manifold_link(const std::vector<BranchCoverData>& branches) {
  return std::all_of(branches.begin(), branches.end(),
                     [](const BranchCoverData& b) { return hyperplane_branch_count(b) == 1; });
}

QuotientDescription compose_curlings_and_identifications(const BranchCoverData& data) {
  QuotientDescription out;
  out.pinched_discs = hyperplane_branch_count(data);
  for (auto d : data.degrees)
    if (d >= 2) out.steps.push_back({QuotientStep::Kind::Curling, d});
  const auto cores = static_cast<std::int64_t>(data.degrees.size());
  if (cores >= 2) out.steps.push_back({QuotientStep::Kind::Identification, cores});
  return out;
}

std::vector<BranchCoverData> parse_branch_list(std::string_view text) {
  std::vector<BranchCoverData> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = std::min(text.find(';', start), text.size());
    std::string_view group = text.substr(start, semi - start);
    BranchCoverData b;
    std::size_t pos = 0;
    while (pos <= group.size()) {
      const std::size_t comma = std::min(group.find(',', pos), group.size());
      std::string_view item = group.substr(pos, comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
        fail(ErrorCode::ParseError, "bad degree '" + std::string(item) + "' in branch list");
      b.degrees.push_back(v);
      pos = comma + 1;
    }
    validate(b);
    out.push_back(std::move(b));
    start = semi + 1;
  }
  return out;
}

std::string to_string(const QuotientStep& step) {
  if (step.kind == QuotientStep::Kind::Curling) return "curling(" + std::to_string(step.order) + ")";
  return "identify(" + std::to_string(step.order) + ")";
}

}  // namespace singlink
