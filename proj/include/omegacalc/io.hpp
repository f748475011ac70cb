#pragma once

#include <string>

#include <json.hpp>

#include "omegacalc/acm.hpp"
#include "omegacalc/asymptotics.hpp"
#include "omegacalc/block_monoid.hpp"
#include "omegacalc/closed_forms.hpp"
#include "omegacalc/leamer.hpp"
#include "omegacalc/omega_engine.hpp"

namespace omegacalc {

// CSV headers are fixed; bump kSchemaVersion when any of them changes.
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSeriesCsvHeader = "n,omega,model,residue";
inline constexpr const char* kRangeCsvHeader = "n,omega";
inline constexpr const char* kScanCsvHeader = "n1,n2,n3,w1,w2,w3,pattern";
inline constexpr const char* kLeamerCsvHeader = "n,k,irreducible";
inline constexpr const char* kBulletCsvHeader = "bullet,length,maximal";
inline constexpr const char* kIntervalCsvHeader = "generator,omega";

std::string format_vector(const FactorizationVector& v);  // "(14,0,0)"
std::string format_point(const LeamerPoint& p);           // "(13,1)"

/// Block in the element grammar: "elem:mult,..." with `/`-separated tuple
/// coordinates (a bare integer for cyclic groups).
std::string format_block(const FiniteAbelianGroup& group, const ZeroSumSequence& block);
std::string format_block_bullet(const FiniteAbelianGroup& group, const BlockBullet& bullet);

std::string bullets_csv(const OmegaResult& result);
std::string range_csv(const std::vector<std::pair<Int, Int>>& entries);
std::string series_csv(const OmegaSeries& series, const QuasilinearModel& model);
std::string scan_csv(const OrderingScanResult& result);
std::string leamer_csv(const std::vector<LeamerPoint>& points,
                       const std::vector<LeamerPoint>& irreducibles);

nlohmann::json json_of(const OmegaResult& result);
nlohmann::json json_of(const QuasilinearModel& model);
nlohmann::json json_of(const OmegaSeries& series, const QuasilinearModel& model);
nlohmann::json json_of(const OrderingScanResult& result);
nlohmann::json json_of(const FiniteAbelianGroup& group, const BlockOmegaResult& result);
nlohmann::json json_of(const AcmOmegaResult& result);
nlohmann::json json_of(const LeamerOmegaResult& result);

}  // namespace omegacalc
