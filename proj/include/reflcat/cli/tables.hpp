#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "reflcat/fusion/report.hpp"

namespace reflcat::cli {

enum class TableKind { coxeter, classification, h2, families };

std::optional<TableKind> table_from_string(std::string_view s);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

// "7" or "3..13"; odd primes only. Throws DomainError otherwise.
std::vector<std::uint32_t> parse_primes(std::string_view text);

Table classification_table(std::uint32_t p, unsigned max_dim, fusion::Tier tier, std::uint64_t seed = 0);
Table coxeter_table(const std::vector<std::uint32_t>& primes, unsigned max_dim, fusion::Tier tier,
                    std::uint64_t seed = 0);
Table h2_table(const std::vector<std::uint32_t>& primes, fusion::Tier tier);
Table families_table(const std::vector<std::uint32_t>& primes, unsigned max_dim);

Table make_table(TableKind kind, const std::vector<std::uint32_t>& primes, unsigned max_dim, fusion::Tier tier,
                 std::uint64_t seed = 0);

std::string to_markdown(const Table& t);
nlohmann::json to_json(const Table& t);

}  // namespace reflcat::cli
