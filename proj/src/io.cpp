#include "omegacalc/io.hpp"

#include <sstream>

namespace omegacalc {

namespace {

std::string join_ints(const std::vector<Int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string format_vector(const FactorizationVector& v) {
  return "(" + join_ints(v.coords, ',') + ")";
}

std::string format_point(const LeamerPoint& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string format_block(const FiniteAbelianGroup& group, const ZeroSumSequence& block) {
  std::string out;
  bool first = true;
  for (const auto& [id, m] : block.mult) {
    if (!first) out += ",";
    first = false;
    out += join_ints(group.tuple_of(id), '/');
    out += ":" + std::to_string(m);
  }
  return out.empty() ? "(empty)" : out;
}

std::string format_block_bullet(const FiniteAbelianGroup& group, const BlockBullet& bullet) {
  std::string out;
  for (const auto& part : bullet.parts) out += "(" + format_block(group, part) + ")";
  return out;
}

std::string bullets_csv(const OmegaResult& result) {
  std::ostringstream out;
  out << kBulletCsvHeader << '\n';
  for (const auto& b : result.bullet_set.bullets)
    out << '"' << format_vector(b) << "\"," << b.length << ','
        << (b.length == result.omega ? 1 : 0) << '\n';
  return out.str();
}

std::string range_csv(const std::vector<std::pair<Int, Int>>& entries) {
  std::ostringstream out;
  out << kRangeCsvHeader << '\n';
  for (const auto& [n, w] : entries) out << n << ',' << w << '\n';
  return out.str();
}

std::string series_csv(const OmegaSeries& series, const QuasilinearModel& model) {
  std::ostringstream out;
  out << kSeriesCsvHeader << '\n';
  for (const auto& [n, w] : series.entries)
    out << n << ',' << w << ',' << model.value(n) << ',' << n % model.n1 << '\n';
  return out.str();
}

std::string scan_csv(const OrderingScanResult& result) {
  std::ostringstream out;
  out << kScanCsvHeader << '\n';
  for (const auto& row : result.rows)
    out << row.n1 << ',' << row.n2 << ',' << row.n3 << ',' << row.w1 << ',' << row.w2 << ','
        << row.w3 << ',' << row.pattern << '\n';
  return out.str();
}

std::string leamer_csv(const std::vector<LeamerPoint>& points,
                       const std::vector<LeamerPoint>& irreducibles) {
  std::ostringstream out;
  out << kLeamerCsvHeader << '\n';
  std::size_t j = 0;
  for (const auto& p : points) {
    while (j < irreducibles.size() && irreducibles[j] < p) ++j;
    const bool irr = j < irreducibles.size() && irreducibles[j] == p;
    out << p.first << ',' << p.second << ',' << (irr ? 1 : 0) << '\n';
  }
  return out.str();
}

nlohmann::json json_of(const OmegaResult& result) {
  nlohmann::json bullets = nlohmann::json::array();
  for (const auto& b : result.bullet_set.bullets)
    bullets.push_back({{"coords", b.coords},
                       {"length", b.length},
                       {"maximal", b.length == result.omega}});
  return {{"element", result.element},
          {"omega", result.omega},
          {"bounds", result.bullet_set.bounds},
          {"bullets", bullets}};
}

nlohmann::json json_of(const QuasilinearModel& model) {
  nlohmann::json j{{"n1", model.n1},
                   {"intercepts", model.intercepts},
                   {"minimal_period", minimal_period(model)},
                   {"certified_through", model.certified_through}};
  if (model.dissonance)
    j["dissonance"] = *model.dissonance;
  else
    j["dissonance"] = nullptr;
  return j;
}

nlohmann::json json_of(const OmegaSeries& series, const QuasilinearModel& model) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [n, w] : series.entries)
    entries.push_back({{"n", n}, {"omega", w}, {"model", model.value(n)}});
  return {{"generators", series.monoid.generators()},
          {"lo", series.lo},
          {"hi", series.hi},
          {"model", json_of(model)},
          {"entries", entries}};
}

nlohmann::json json_of(const OrderingScanResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows)
    rows.push_back({{"n1", row.n1},
                    {"n2", row.n2},
                    {"n3", row.n3},
                    {"w1", row.w1},
                    {"w2", row.w2},
                    {"w3", row.w3},
                    {"pattern", row.pattern}});
  nlohmann::json census = nlohmann::json::object();
  for (const auto& [pattern, count] : result.census) census[pattern] = count;
  return {{"bound", result.bound},
          {"census", census},
          {"forbidden_patterns", forbidden_ordering_patterns()},
          {"forbidden_hits", result.forbidden_hits.size()},
          {"rows", rows}};
}

nlohmann::json json_of(const FiniteAbelianGroup& group, const BlockOmegaResult& result) {
  auto block_json = [&](const ZeroSumSequence& block) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& [id, m] : block.mult)
      items.push_back({{"element", group.tuple_of(id)}, {"multiplicity", m}});
    return nlohmann::json{{"items", items}, {"length", block.length}};
  };
  nlohmann::json bullets = nlohmann::json::array();
  for (const auto& b : result.maximal_bullets) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : b.parts) parts.push_back(block_json(part));
    bullets.push_back({{"parts", parts}, {"length", b.length}});
  }
  return {{"invariant_factors", group.invariant_factors()},
          {"element", block_json(result.element)},
          {"omega", result.omega},
          {"bullet_count", result.bullets.size()},
          {"maximal_bullets", bullets}};
}

nlohmann::json json_of(const AcmOmegaResult& result) {
  return {{"element", result.element},
          {"omega", result.omega},
          {"bullets", result.bullets},
          {"maximal_bullets", result.maximal_bullets}};
}

nlohmann::json json_of(const LeamerOmegaResult& result) {
  auto parts_json = [](const LeamerBullet& b) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [n, k] : b.parts) parts.push_back({n, k});
    return nlohmann::json{{"parts", parts}, {"length", b.length}};
  };
  nlohmann::json bullets = nlohmann::json::array();
  for (const auto& b : result.maximal_bullets) bullets.push_back(parts_json(b));
  return {{"element", {result.element.first, result.element.second}},
          {"omega", result.omega},
          {"bullet_count", result.bullets.size()},
          {"maximal_bullets", bullets}};
}

}  // namespace omegacalc
