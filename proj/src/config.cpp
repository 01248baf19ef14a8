#include "pancyclic/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "pancyclic/error.hpp"

namespace pancyclic {

namespace {

std::uint64_t parse_number(std::string_view text)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorKind::InvalidArgument, "bad oracle cap value '" + std::string(text) + "'");
    return value;
}

} // namespace

OracleConfig OracleConfig::from_env()
{
    OracleConfig cfg;
    if (const char* env = std::getenv("PANCYCLIC_ORACLE_CAP"); env != nullptr && *env != '\0')
        cfg.apply_override(env);
    return cfg;
}

void OracleConfig::apply_override(std::string_view spec)
{
    if (spec.find('=') == std::string_view::npos) {
        oracle_cap = static_cast<int>(parse_number(spec));
        return;
    }
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::InvalidArgument, "bad oracle cap entry '" + std::string(item) + "'");
        auto key = item.substr(0, eq);
        auto value = parse_number(item.substr(eq + 1));
        if (key == "oracle")
            oracle_cap = static_cast<int>(value);
        else if (key == "spectrum")
            spectrum_cap = static_cast<int>(value);
        else if (key == "dp")
            subset_dp_cap = static_cast<int>(value);
        else if (key == "dfs")
            dfs_node_budget = value;
        else if (key == "subsets")
            subset_budget = value;
        else
            throw Error(ErrorKind::InvalidArgument, "unknown oracle cap key '" + std::string(key) + "'");
    }
}

} // namespace pancyclic
