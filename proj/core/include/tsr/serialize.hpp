#ifndef TSR_SERIALIZE_HPP
#define TSR_SERIALIZE_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tsr/monomial.hpp"

namespace tsr {

using Json = nlohmann::json;

// deterministic labels
std::string word_str(const Group& G, int a);  // "e" or "g0*g1*..."
std::string subgroup_label(const Group& G, const Subgroup& H);
std::string basis_label(const Session& S, const BasisIndex& b);
std::string species_label(const Session& S, const SpeciesIndex& e);
std::string pair_label(const Session& S, const MonomialPair& pair);

// exact value envelopes: every scalar is a string
Json cyclo_json(const Cyclo& v);
Cyclo cyclo_from_json(const Json& j);
Json matrix_json(const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels, const CycloMatrix& M);
CycloMatrix matrix_from_json(const Json& j);

std::string matrix_csv(const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels, const CycloMatrix& M);
std::string matrix_text(const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels, const CycloMatrix& M);

Json brauer_table_json(const Group& G, const Group& H, const BrauerTable& t);

// cache: files named <key>-<kind>.json under the cache directory; writes go
// through a temp file and a rename
std::string cache_key(const Group& G, int64_t p, uint64_t seed);
std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key,
                                 const std::string& kind);
void cache_write(const std::filesystem::path& dir, const std::string& key,
                 const std::string& kind, const Json& payload);
bool cache_read(const std::filesystem::path& dir, const std::string& key,
                const std::string& kind, Json& out);

}  // namespace tsr

#endif
