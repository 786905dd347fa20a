#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sgb/ring.hpp"

namespace sgb {

using Json = nlohmann::ordered_json;

/// A polynomial system as read from JSON:
///
///     {"variables": ["x", "y"],
///      "polynomials": [[{"coeff": "1", "exp": [1, 1]}, {"coeff": "-1", "exp": [0, 0]}], ...],
///      "order": "lex-default" | {"matrix": [[1, 0], [0, 1]]},
///      "degree": [1, 1, 1]}
///
/// "polytopes" (a list of point lists) and "degrees" (one multidegree per
/// polynomial) optionally replace the family derived from the Newton polytopes.
struct SystemFile {
    std::vector<std::string> variables;
    std::vector<LaurentPolynomial> polynomials;
    /// Exponent weight matrix; lexicographic when absent.
    std::optional<IntMatrix> order_matrix;
    std::optional<MultiDegree> degree;
    std::vector<std::vector<LatticePoint>> polytopes;
    std::vector<MultiDegree> degrees;

    Index dim() const { return static_cast<Index>(variables.size()); }
    friend bool operator==(const SystemFile&, const SystemFile&);
};

SystemFile parse_system(std::string_view text);
SystemFile read_system_file(const std::filesystem::path& path);
Json to_json(const SystemFile& system);
/// Canonical, deterministic serialization (two-space indent, trailing newline).
std::string write_system(const SystemFile& system);

/// Accepts [[...]] or {"matrix": [[...]]}.
IntMatrix parse_weight_matrix(const Json& value);
IntMatrix read_weight_matrix(const std::filesystem::path& path);

/// Comma-separated integers, e.g. "1,1,1".
MultiDegree parse_degree_list(std::string_view text);

using ExponentGreater = std::function<bool(const LatticePoint&, const LatticePoint&)>;

/// Terms as {"coeff", "exp"} objects, largest exponent first (lexicographic
/// when `greater` is empty).
Json polynomial_to_json(const LaurentPolynomial& f, const ExponentGreater& greater = {});
LaurentPolynomial polynomial_from_json(const Json& terms, Index dim);

/// Human-readable infix form such as "y^2 - 2*y + 1".
std::string format_polynomial(const LaurentPolynomial& f, const std::vector<std::string>& variables,
                              const ExponentGreater& greater = {});

/// Rows of "p/q" strings.
Json matrix_to_json(const RationalMatrix& m);
Json lattice_point_to_json(const LatticePoint& p);

std::vector<std::string> default_variable_names(Index n);

} // namespace sgb
