#ifndef TERNARY_REGISTRY_HPP
#define TERNARY_REGISTRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ternary/numutil.hpp"

namespace ternary {

/// One applicable instance of a known optimal-exponent family at a given m.
struct KnownExponent {
    std::string rule;    // rule id from the data file, e.g. "t1.16a"
    std::string source;  // citation tag
    u64 e = 0;
    std::optional<u64> k;  // the free parameter value, when the rule has one
};

/// Curated table of known optimal-exponent families, loaded from a
/// line-oriented data file (see data/registry.txt for the schema). Shapes:
///   C_1v  zeros {1,v},   [3^m-1, 3^m-2m-1, 4]
///   C_uv  zeros {u,v},   same parameters (only u=2 rows are shipped)
///   C_01e zeros {0,1,e}, [3^m-1, 3^m-3m/2-2, 4]
///   C_1es zeros {1,e,s}, same parameters
class Registry {
public:
    explicit Registry(const std::string& path);

    /// The registry shipped with the library.
    static const Registry& builtin();

    /// Every family instance applicable at this m, deduplicated per rule.
    /// Rules with a free parameter are instantiated for k = 1..2m.
    std::vector<KnownExponent> known_exponents(const std::string& shape, unsigned m) const;

private:
    struct Rule {
        std::string shape, id, source, kind, expr, cond;
    };
    std::vector<Rule> rules_;
};

/// Shorthand over the builtin registry.
std::vector<KnownExponent> known_exponents(const std::string& shape, unsigned m);

}  // namespace ternary

#endif
