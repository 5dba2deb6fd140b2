#include "skewfib/hrcore.hpp"

#include "skewfib/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace skewfib::hrcore {

DyadicDecomposition dyadic_decompose(const Integer& n) {
    if (n <= 0) throw domain_error("dyadic decomposition requires N >= 1");
    const unsigned k = boost::multiprecision::lsb(n);
    return DyadicDecomposition{Integer(k), n >> k};
}

Integer rho(const Integer& n) {
    if (n <= 0) throw domain_error("rho requires N >= 1");
    const Integer k = dyadic_decompose(n).exponent;
    switch (static_cast<unsigned>(k % 4)) {
        case 0: return 2 * k + 1;
        case 1:
        case 2: return 2 * k;
        default: return 2 * k + 2;
    }
}

bool exists_fibration(const DimensionPair& pair) {
    if (pair.fiber_dim < 1) throw domain_error("fiber dimension must be >= 1");
    if (pair.ambient_dim <= pair.fiber_dim)
        throw domain_error("ambient dimension must exceed fiber dimension");
    return pair.fiber_dim <= rho(pair.ambient_dim - pair.fiber_dim) - 1;
}

bool is_dominant(const DimensionPair& pair) {
    if (!exists_fibration(pair)) throw domain_error("is_dominant requires an admissible pair");
    return pair.fiber_dim == rho(pair.ambient_dim - pair.fiber_dim) - 1;
}

std::vector<Integer> admissible_set(const Integer& n) {
    if (n <= 0) throw domain_error("ambient dimension must be >= 1");
    std::vector<Integer> out;
    if (n < 3) return out;
    // p ≤ rho(n−p)−1 and rho(m) ≤ 2·log2(m)+2 bound the search to
    // O(log n) candidates even for huge n.
    Integer p_max = (n - 1) / 2;
    const Integer rho_bound = 2 * Integer(boost::multiprecision::msb(n)) + 2;
    if (rho_bound - 1 < p_max) p_max = rho_bound - 1;
    for (Integer p = 1; p <= p_max; ++p)
        if (p <= rho(n - p) - 1) out.push_back(p);
    return out;
}

std::vector<TableRow> build_table(const Integer& n_min, const Integer& n_max) {
    if (n_min < 3 || n_max < n_min) throw domain_error("table range requires 3 <= n_min <= n_max");
    std::vector<TableRow> rows;
    for (Integer n = n_min; n <= n_max; ++n) {
        TableRow row;
        row.n = n;
        row.admissible = admissible_set(n);
        for (const Integer& p : row.admissible)
            if (p == rho(n - p) - 1) row.dominant.push_back(p);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

nlohmann::json json_integer(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

bool contains(const std::vector<Integer>& v, const Integer& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::string render_table(const Integer& n_min, const Integer& n_max, TableFormat format) {
    const auto rows = build_table(n_min, n_max);
    std::ostringstream os;
    switch (format) {
        case TableFormat::text:
            for (const auto& row : rows) {
                os << "n=" << row.n << ":";
                if (row.admissible.empty()) os << " -";
                for (const Integer& p : row.admissible)
                    os << " " << p << (contains(row.dominant, p) ? "*" : "");
                os << "\n";
            }
            break;
        case TableFormat::tsv: {
            os << "n\tadmissible\tdominant\n";
            auto joined = [](const std::vector<Integer>& v) {
                std::ostringstream s;
                for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
                return s.str();
            };
            for (const auto& row : rows)
                os << row.n << "\t" << joined(row.admissible) << "\t" << joined(row.dominant)
                   << "\n";
            break;
        }
        case TableFormat::json: {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json jrow;
                jrow["n"] = json_integer(row.n);
                jrow["admissible"] = nlohmann::json::array();
                for (const Integer& p : row.admissible)
                    jrow["admissible"].push_back(json_integer(p));
                if (row.dominant.empty())
                    jrow["dominant"] = nullptr;
                else
                    jrow["dominant"] = json_integer(row.dominant.back());
                doc.push_back(std::move(jrow));
            }
            os << doc.dump() << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace skewfib::hrcore
